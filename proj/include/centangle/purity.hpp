#pragma once

#include <vector>

#include "centangle/state.hpp"

namespace centangle {

// Default resource caps for full power-set sweeps. Single-subset purity and
// the caps themselves can be overridden per call.
inline constexpr int kMaxPureSweepQubits = 14;
inline constexpr int kMaxMixedSweepQubits = 8;

// Subset purities Tr[rho_alpha^2] for every subset alpha of the n qubits,
// indexed by SubsetMask. vals[0] == 1 (empty subset) by convention.
struct PurityVector {
    int n = 0;
    std::vector<double> vals;
};

// Purity of the reduced state on `alpha`, by explicit partial trace over the
// complement followed by a squared Frobenius norm.
double purity(const PureState& psi, SubsetMask alpha);
double purity(const DensityMatrix& rho, SubsetMask alpha);

// Full power-set sweep. The parallel kernel distributes subsets over OpenMP
// threads; each subset is reduced by the same fixed-order inner loop as the
// serial reference, so the two agree bitwise. Pure input additionally uses
// the complement symmetry Tr[rho_alpha^2] = Tr[rho_alphabar^2].
PurityVector purity_vector(const PureState& psi, int max_n = kMaxPureSweepQubits);
PurityVector purity_vector_serial(const PureState& psi, int max_n = kMaxPureSweepQubits);
PurityVector purity_vector(const DensityMatrix& rho, int max_n = kMaxMixedSweepQubits);
PurityVector purity_vector_serial(const DensityMatrix& rho, int max_n = kMaxMixedSweepQubits);

// Probability that at least one of n qubit-wise swap tests between two copies
// fails: 1 - 2^-n * sum_alpha Tr[rho_alpha^2].
double concentratable_entanglement(const PurityVector& pv);
double concentratable_entanglement(const PureState& psi, int max_n = kMaxPureSweepQubits);
double concentratable_entanglement(const DensityMatrix& rho, int max_n = kMaxMixedSweepQubits);

// Upper bound from demanding every k-qubit marginal be maximally mixed:
// 1 - 2^-n * sum_k C(n,k) 2^-min(k, n-k).
double ce_upper_bound_ame(int n);

// Large-n ceiling 1 - (3/4)^n.
double ce_asymptotic_bound(int n);

}  // namespace centangle
