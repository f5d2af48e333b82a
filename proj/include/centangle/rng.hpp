#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace centangle {

// Counter-based generator: output i is a pure function of (key, i), built on
// the SplitMix64 finalizer. Parallel consumers partition the counter space
// (one derived stream per shot or sample), which keeps every sampled quantity
// bitwise reproducible regardless of thread count or iteration order.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    static std::uint64_t mix(std::uint64_t key, std::uint64_t counter) {
        std::uint64_t z = key + counter * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Independent child stream, e.g. one per Monte Carlo sample.
    CounterRng derive(std::uint64_t stream) const {
        return CounterRng(mix(key_ ^ 0xD1B54A32D192ED03ULL, stream));
    }

    std::uint64_t next_u64() { return mix(key_, counter_++); }

    // Uniform on the open interval (0, 1); never returns an endpoint, so it
    // is safe inside log() and as a CDF probe.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    // Two independent standard normals via the Box-Muller transform.
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace centangle
