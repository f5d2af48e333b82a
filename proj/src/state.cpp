#include "centangle/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace centangle {

namespace {

void check_qubit_count(int n) {
    if (n < 1) throw std::invalid_argument("state must have at least one qubit");
    if (n > 30) throw std::invalid_argument("state exceeds the 30-qubit representation limit");
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n(n_qubits), amps(std::move(amplitudes)) {
    check_qubit_count(n);
    if (amps.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude vector has wrong length for " +
                                    std::to_string(n) + " qubits");
    }
    double norm2 = 0.0;
    for (const Complex& a : amps) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

PureState PureState::basis(int n_qubits, std::uint32_t index) {
    check_qubit_count(n_qubits);
    std::vector<Complex> a(std::size_t{1} << n_qubits, 0.0);
    a.at(index) = 1.0;
    return PureState(n_qubits, std::move(a));
}

PureState PureState::plus_all(int n_qubits) {
    check_qubit_count(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Complex> a(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    return PureState(n_qubits, std::move(a));
}

PureState PureState::ghz(int n_qubits) {
    check_qubit_count(n_qubits);
    std::vector<Complex> a(std::size_t{1} << n_qubits, 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    a.front() = r;
    a.back() = r;
    return PureState(n_qubits, std::move(a));
}

PureState PureState::w(int n_qubits) {
    check_qubit_count(n_qubits);
    std::vector<Complex> a(std::size_t{1} << n_qubits, 0.0);
    const double r = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (int i = 0; i < n_qubits; ++i) a[std::size_t{1} << i] = r;
    return PureState(n_qubits, std::move(a));
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<Complex> out(a.dim() * b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            out[(j << a.n) | i] = a.amps[i] * b.amps[j];
        }
    }
    return PureState(a.n + b.n, std::move(out));
}

void apply_single_qubit(PureState& state, int qubit, const std::array<Complex, 4>& u) {
    if (qubit < 0 || qubit >= state.n) throw std::out_of_range("qubit index out of range");
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < state.dim(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = state.amps[i];
            const Complex a1 = state.amps[i + stride];
            state.amps[i] = u[0] * a0 + u[1] * a1;
            state.amps[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void apply_cz(PureState& state, int a, int b) {
    if (a < 0 || a >= state.n || b < 0 || b >= state.n || a == b) {
        throw std::out_of_range("bad qubit pair for CZ");
    }
    const std::uint32_t mask = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((static_cast<std::uint32_t>(i) & mask) == mask) state.amps[i] = -state.amps[i];
    }
}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix)
    : n(n_qubits), mat(std::move(matrix)) {
    check_qubit_count(n);
    const auto d = Eigen::Index{1} << n;
    if (mat.rows() != d || mat.cols() != d) {
        throw std::invalid_argument("density matrix has wrong dimensions for " +
                                    std::to_string(n) + " qubits");
    }
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kNormTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(mat.trace().real() - 1.0) > kNormTolerance ||
        std::abs(mat.trace().imag()) > kNormTolerance) {
        throw std::invalid_argument("density matrix does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const Eigen::Map<const Eigen::VectorXcd> v(psi.amps.data(),
                                               static_cast<Eigen::Index>(psi.dim()));
    return DensityMatrix(psi.n, v * v.adjoint());
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double eps) {
    if (a.n != b.n) throw std::invalid_argument("mix: qubit counts differ");
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("mix: weight outside [0,1]");
    return DensityMatrix(a.n, (1.0 - eps) * a.mat + eps * b.mat);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("trace_distance: qubit counts differ");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.mat - b.mat, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace centangle
