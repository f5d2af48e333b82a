#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "centangle/rational.hpp"
#include "centangle/state.hpp"

namespace centangle {

// Haar-uniform n-qubit pure state: 2^n i.i.d. complex standard Gaussians,
// normalized. Counter-based streams make each (n, seed) pair reproducible.
PureState sample_haar_state(int n, std::uint64_t seed);

// Exact first and second central moments of CE over Haar-random states:
//   mean = 1 - 2 * 3^n / (4^n + 2^n)
//   var  = 3^n 4^(1-n) (2^n - 2 3^n + 4^n) / ((1+2^n)^2 (6 + 5 2^n + 4^n))
std::pair<Rational, Rational> haar_moments_exact(int n);
std::pair<double, double> haar_moments(int n);

struct HaarStats {
    int n = 0;
    std::int64_t samples = 0;
    double mean_closed = 0.0;
    double var_closed = 0.0;
    double mean_empirical = 0.0;
    double var_empirical = 0.0;  // unbiased
    std::optional<double> threshold;
    double below_threshold_fraction = 0.0;  // fraction with CE <= threshold
    std::vector<double> ce_samples;
};

// Monte Carlo sweep; sample s depends only on (seed, s), so results are
// independent of scheduling. Each sample's CE uses the serial purity kernel
// to keep the per-sample arithmetic order fixed.
HaarStats haar_experiment(int n, std::int64_t samples, std::uint64_t seed,
                          std::optional<double> threshold = std::nullopt);

}  // namespace centangle
