#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "centangle/bits.hpp"

namespace centangle {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

// Normalized n-qubit pure state. Amplitudes are indexed by computational
// basis states with qubit 0 in the least significant bit.
struct PureState {
    int n = 0;
    std::vector<Complex> amps;

    PureState(int n_qubits, std::vector<Complex> amplitudes);

    static PureState basis(int n_qubits, std::uint32_t index);
    static PureState plus_all(int n_qubits);
    static PureState ghz(int n_qubits);
    static PureState bell() { return ghz(2); }
    // W_n: equal superposition of the n weight-one basis states.
    static PureState w(int n_qubits);

    std::size_t dim() const { return amps.size(); }
};

// Tensor product; `a` occupies qubits 0..a.n-1 (the low bits), `b` the rest.
PureState tensor(const PureState& a, const PureState& b);

// In-place single-qubit gate, u in row-major order {u00, u01, u10, u11}.
void apply_single_qubit(PureState& state, int qubit, const std::array<Complex, 4>& u);

void apply_cz(PureState& state, int a, int b);

// n-qubit density operator: Hermitian, unit trace, positive semidefinite
// within kNormTolerance. Row/column indices follow the PureState convention.
struct DensityMatrix {
    int n = 0;
    Eigen::MatrixXcd mat;

    DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix);

    static DensityMatrix from_pure(const PureState& psi);

    std::size_t dim() const { return static_cast<std::size_t>(mat.rows()); }
};

// Convex mixture (1-eps) a + eps b.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double eps);

// Trace norm ||a - b||_1 (sum of absolute eigenvalues of the difference).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace centangle
