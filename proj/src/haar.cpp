#include "centangle/haar.hpp"

#include <cmath>
#include <stdexcept>

#include "centangle/purity.hpp"
#include "centangle/rng.hpp"

namespace centangle {

PureState sample_haar_state(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_haar_state: need n >= 1");
    CounterRng rng(seed);
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (Complex& a : amps) {
        const auto [re, im] = rng.next_gaussian_pair();
        a = Complex(re, im);
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps) a *= scale;
    return PureState(n, std::move(amps));
}

std::pair<Rational, Rational> haar_moments_exact(int n) {
    if (n < 1) throw std::invalid_argument("haar_moments_exact: need n >= 1");
    const BigInt p2 = ipow(2, n), p3 = ipow(3, n), p4 = ipow(4, n);
    const Rational mean = 1 - Rational(2 * p3, p4 + p2);
    const Rational var = Rational(p3 * 4, p4) * Rational(p2 - 2 * p3 + p4) /
                         (Rational((1 + p2) * (1 + p2)) * Rational(6 + 5 * p2 + p4));
    return {mean, var};
}

std::pair<double, double> haar_moments(int n) {
    const auto [mean, var] = haar_moments_exact(n);
    return {to_double(mean), to_double(var)};
}

HaarStats haar_experiment(int n, std::int64_t samples, std::uint64_t seed,
                          std::optional<double> threshold) {
    if (samples < 2) throw std::invalid_argument("haar_experiment: need >= 2 samples");
    HaarStats st;
    st.n = n;
    st.samples = samples;
    const auto [mc, vc] = haar_moments(n);
    st.mean_closed = mc;
    st.var_closed = vc;
    st.threshold = threshold;
    st.ce_samples.assign(static_cast<std::size_t>(samples), 0.0);

    const CounterRng root(seed);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < samples; ++s) {
        const PureState psi = sample_haar_state(n, root.derive(static_cast<std::uint64_t>(s)).next_u64());
        st.ce_samples[static_cast<std::size_t>(s)] =
            concentratable_entanglement(purity_vector_serial(psi));
    }

    double sum = 0.0, below = 0.0;
    for (const double ce : st.ce_samples) {
        sum += ce;
        if (threshold && ce <= *threshold) below += 1.0;
    }
    const double m = static_cast<double>(samples);
    st.mean_empirical = sum / m;
    double ss = 0.0;
    for (const double ce : st.ce_samples) {
        const double d = ce - st.mean_empirical;
        ss += d * d;
    }
    st.var_empirical = ss / (m - 1.0);
    st.below_threshold_fraction = threshold ? below / m : 0.0;
    return st;
}

}  // namespace centangle
