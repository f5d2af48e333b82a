#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "centangle/purity.hpp"

namespace centangle {

// Outcome distribution of n qubit-wise swap tests run on two copies of a
// state: p(z) = 2^-n * sum_alpha (-1)^(z.alpha) Tr[rho_alpha^2]. Bit i of z
// is the ancilla of the test on qubit i; z = 0 means every test passed.
struct BitstringDistribution {
    int n = 0;
    std::vector<double> probs;
};

// Computed from the purity vector by a fast Walsh-Hadamard transform.
// Validates that the result sums to one and assigns zero (within 1e-9) to
// every odd-weight outcome; violations indicate a corrupted purity vector.
BitstringDistribution bitstring_distribution(const PurityVector& pv);

// i.i.d. outcomes; shot s consumes only the derived stream (seed, s), so any
// prefix or partition of the shots reproduces identically.
std::vector<std::uint32_t> sample_bitstrings(const BitstringDistribution& dist,
                                             std::int64_t shots, std::uint64_t seed);

// Fraction of all-zero outcomes mapped to a CE estimate: 1 - count(z=0)/shots.
double ce_estimate_from_samples(std::span<const std::uint32_t> samples);

// Entanglement-structure information extracted from observed outcomes. Any
// nonzero outcome z certifies, for every bipartition A|B, that the state is
// not a product across A|B whenever z has odd overlap with A. The ledger
// keeps a GF(2) basis of observed outcomes; because the excludable set is
// closed under XOR, checking basis vectors is equivalent to checking every
// observed outcome.
class ExclusionLedger {
  public:
    explicit ExclusionLedger(int n);

    // Functional update: returns the ledger extended by outcome z.
    // Odd-weight z is rejected (impossible for exact swap-test statistics).
    ExclusionLedger record(std::uint32_t z) const;

    int n() const { return n_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::uint32_t>& observed() const { return observed_; }
    const std::vector<std::uint32_t>& basis() const { return basis_; }

    // Number of bipartition classes {A, complement} not yet excluded,
    // including the trivial class: 2^(n-1-rank).
    std::uint64_t surviving_bipartitions() const;

    // A partition is excluded when some basis vector has odd overlap with
    // one of its blocks. Blocks must be disjoint and cover all n qubits.
    bool is_partition_excluded(std::span<const std::uint32_t> blocks) const;
    bool is_bipartition_excluded(std::uint32_t block) const;

  private:
    int n_;
    std::vector<std::uint32_t> observed_;
    std::vector<std::uint32_t> basis_;  // reduced row-echelon form
};

// Moments of the Bell-pair detection count, the Hamming weight w(z) of the
// swap-test outcome. With S1 = sum_i Tr[rho_i^2]:
//   mean = (n - S1) / 2
//   var  = n/4 - S1^2/4 + (1/2) sum_{i<j} Tr[rho_ij^2]
struct BellPairStats {
    double mean = 0.0;
    double variance = 0.0;
};

BellPairStats bell_pair_stats(const PurityVector& pv);

// Sample mean and unbiased sample variance of w(z) over observed outcomes.
BellPairStats empirical_bell_pairs(std::span<const std::uint32_t> samples);

}  // namespace centangle
