#include "centangle/swaptest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "centangle/rng.hpp"

namespace centangle {

namespace {

constexpr double kDistributionTolerance = 1e-9;

}  // namespace

BitstringDistribution bitstring_distribution(const PurityVector& pv) {
    BitstringDistribution dist{pv.n, pv.vals};
    auto& p = dist.probs;
    // In-place Walsh-Hadamard butterfly.
    for (std::size_t h = 1; h < p.size(); h <<= 1) {
        for (std::size_t i = 0; i < p.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = p[j], y = p[j + h];
                p[j] = x + y;
                p[j + h] = x - y;
            }
        }
    }
    const double scale = std::ldexp(1.0, -pv.n);
    double sum = 0.0;
    for (std::size_t z = 0; z < p.size(); ++z) {
        p[z] *= scale;
        sum += p[z];
        if (p[z] < -kDistributionTolerance) {
            throw std::logic_error("bitstring_distribution: negative probability");
        }
        if (parity(z) && std::abs(p[z]) > kDistributionTolerance) {
            throw std::logic_error("bitstring_distribution: odd-weight outcome has nonzero mass");
        }
    }
    if (std::abs(sum - 1.0) > kDistributionTolerance) {
        throw std::logic_error("bitstring_distribution: probabilities do not sum to one");
    }
    return dist;
}

std::vector<std::uint32_t> sample_bitstrings(const BitstringDistribution& dist,
                                             std::int64_t shots, std::uint64_t seed) {
    if (shots < 0) throw std::invalid_argument("sample_bitstrings: negative shot count");
    // CDF over even-weight outcomes only; odd-weight outcomes carry no mass
    // by construction, so a sample of odd weight is impossible here.
    std::vector<std::uint32_t> support;
    std::vector<double> cdf;
    support.reserve(dist.probs.size() / 2);
    cdf.reserve(dist.probs.size() / 2);
    double acc = 0.0;
    for (std::size_t z = 0; z < dist.probs.size(); ++z) {
        if (parity(z)) continue;
        acc += std::max(dist.probs[z], 0.0);
        support.push_back(static_cast<std::uint32_t>(z));
        cdf.push_back(acc);
    }
    const double total = acc;

    const CounterRng root(seed);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(shots));
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < shots; ++s) {
        CounterRng rng = root.derive(static_cast<std::uint64_t>(s));
        const double u = rng.next_unit() * total;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()),
                                         support.size() - 1);
        out[static_cast<std::size_t>(s)] = support[idx];
    }
    return out;
}

double ce_estimate_from_samples(std::span<const std::uint32_t> samples) {
    if (samples.empty()) throw std::invalid_argument("ce_estimate_from_samples: no samples");
    std::int64_t zeros = 0;
    for (const std::uint32_t z : samples) zeros += (z == 0);
    return 1.0 - static_cast<double>(zeros) / static_cast<double>(samples.size());
}

ExclusionLedger::ExclusionLedger(int n) : n_(n) {
    if (n < 1 || n > 31) throw std::invalid_argument("ExclusionLedger: bad qubit count");
}

ExclusionLedger ExclusionLedger::record(std::uint32_t z) const {
    if (z >= (std::uint32_t{1} << n_)) throw std::out_of_range("record: outcome out of range");
    if (parity(z)) throw std::invalid_argument("record: odd-weight outcome is impossible");
    ExclusionLedger next = *this;
    if (z == 0) return next;
    next.observed_.push_back(z);
    // Reduce by the current basis; a nonzero residue extends it. The basis is
    // kept in reduced row-echelon form with decreasing leading bits.
    std::uint32_t r = z;
    for (const std::uint32_t b : next.basis_) {
        r = std::min(r, r ^ b);
    }
    if (r != 0) {
        for (std::uint32_t& b : next.basis_) b = std::min(b, b ^ r);
        next.basis_.push_back(r);
        std::sort(next.basis_.rbegin(), next.basis_.rend());
    }
    return next;
}

std::uint64_t ExclusionLedger::surviving_bipartitions() const {
    return std::uint64_t{1} << (n_ - 1 - rank());
}

bool ExclusionLedger::is_bipartition_excluded(std::uint32_t block) const {
    for (const std::uint32_t b : basis_) {
        if (parity(b & block)) return true;
    }
    return false;
}

bool ExclusionLedger::is_partition_excluded(std::span<const std::uint32_t> blocks) const {
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    std::uint32_t seen = 0;
    for (const std::uint32_t block : blocks) {
        if (block & ~full) throw std::out_of_range("is_partition_excluded: block out of range");
        if (block & seen) throw std::invalid_argument("is_partition_excluded: blocks overlap");
        seen |= block;
    }
    if (seen != full) throw std::invalid_argument("is_partition_excluded: blocks must cover all qubits");
    for (const std::uint32_t block : blocks) {
        if (is_bipartition_excluded(block)) return true;
    }
    return false;
}

BellPairStats bell_pair_stats(const PurityVector& pv) {
    const int n = pv.n;
    double s1 = 0.0;
    for (int i = 0; i < n; ++i) s1 += pv.vals[std::uint32_t{1} << i];
    double pair_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pair_sum += pv.vals[(std::uint32_t{1} << i) | (std::uint32_t{1} << j)];
        }
    }
    BellPairStats stats;
    stats.mean = 0.5 * (n - s1);
    stats.variance = 0.25 * n - 0.25 * s1 * s1 + 0.5 * pair_sum;
    return stats;
}

BellPairStats empirical_bell_pairs(std::span<const std::uint32_t> samples) {
    if (samples.size() < 2) throw std::invalid_argument("empirical_bell_pairs: need >= 2 samples");
    double sum = 0.0, sumsq = 0.0;
    for (const std::uint32_t z : samples) {
        const double w = popcount(z);
        sum += w;
        sumsq += w * w;
    }
    const double m = static_cast<double>(samples.size());
    BellPairStats stats;
    stats.mean = sum / m;
    stats.variance = (sumsq - sum * sum / m) / (m - 1.0);
    return stats;
}

}  // namespace centangle
