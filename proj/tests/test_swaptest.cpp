#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "centangle/haar.hpp"
#include "centangle/purity.hpp"
#include "centangle/state.hpp"
#include "centangle/swaptest.hpp"
#include "oracles.hpp"

using namespace centangle;

TEST_CASE("known outcome distributions") {
    const BitstringDistribution bell = bitstring_distribution(purity_vector(PureState::bell()));
    CHECK(bell.probs[0b00] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(bell.probs[0b11] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(bell.probs[0b01] == doctest::Approx(0.0).epsilon(1e-12));

    const BitstringDistribution ghz3 = bitstring_distribution(purity_vector(PureState::ghz(3)));
    CHECK(ghz3.probs[0b000] == doctest::Approx(5.0 / 8.0).epsilon(1e-12));
    for (const std::uint32_t z : {0b011u, 0b101u, 0b110u}) {
        CHECK(ghz3.probs[z] == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    }

    // A product of plus states never trips any test.
    const BitstringDistribution prod = bitstring_distribution(purity_vector(PureState::plus_all(4)));
    CHECK(prod.probs[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("distribution matches the explicit two-copy circuit oracle") {
    for (const int n : {2, 3, 4}) {
        const PureState psi = sample_haar_state(n, 2100 + static_cast<std::uint64_t>(n));
        const BitstringDistribution dist = bitstring_distribution(purity_vector(psi));
        const std::vector<double> ref = oracle::swap_test_distribution(psi);
        REQUIRE(dist.probs.size() == ref.size());
        for (std::size_t z = 0; z < ref.size(); ++z) {
            CHECK(dist.probs[z] == doctest::Approx(ref[z]).epsilon(1e-9));
        }
        CHECK(1.0 - dist.probs[0] ==
              doctest::Approx(concentratable_entanglement(psi)).epsilon(1e-12));
    }
}

TEST_CASE("sampling is deterministic and consistent with the distribution") {
    const BitstringDistribution dist = bitstring_distribution(purity_vector(PureState::ghz(3)));
    const auto a = sample_bitstrings(dist, 4000, 7);
    const auto b = sample_bitstrings(dist, 4000, 7);
    CHECK(a == b);
    CHECK(sample_bitstrings(dist, 4000, 8) != a);
    // Any prefix of the shot sequence is reproducible on its own.
    const auto head = sample_bitstrings(dist, 100, 7);
    CHECK(std::equal(head.begin(), head.end(), a.begin()));

    std::array<int, 8> counts{};
    for (const std::uint32_t z : a) {
        REQUIRE(z < 8);
        ++counts[z];
    }
    for (std::uint32_t z = 0; z < 8; ++z) {
        const double p = dist.probs[z];
        const double freq = counts[z] / 4000.0;
        const double sigma = std::sqrt(p * (1.0 - p) / 4000.0);
        CHECK(std::abs(freq - p) <= 5.0 * sigma + 1e-12);
    }
    CHECK(ce_estimate_from_samples(a) == doctest::Approx(0.375).epsilon(0.15));
}

TEST_CASE("exclusion ledger tracks bipartitions ruled out by outcomes") {
    const ExclusionLedger empty(4);
    CHECK(empty.rank() == 0);
    CHECK(empty.surviving_bipartitions() == 8);
    CHECK_THROWS_AS(empty.record(0b0001), std::invalid_argument);

    const ExclusionLedger one = empty.record(0b0011);  // qubits 0 and 1 flagged
    CHECK(one.rank() == 1);
    CHECK(one.surviving_bipartitions() == 4);
    for (const std::uint32_t a : {0b0001u, 0b0010u, 0b0101u, 0b1001u}) {
        CHECK(one.is_bipartition_excluded(a));
        CHECK(one.is_bipartition_excluded(~a & 0xFu));  // complement, same split
    }
    for (const std::uint32_t a : {0b0100u, 0b1000u, 0b0011u}) {
        CHECK_FALSE(one.is_bipartition_excluded(a));
    }
    const std::uint32_t finer[] = {0b0001u, 0b0010u, 0b1100u};
    CHECK(one.is_partition_excluded(finer));
    const std::uint32_t split[] = {0b0011u, 0b1100u};
    CHECK_FALSE(one.is_partition_excluded(split));
    const std::uint32_t overlapping[] = {0b0011u, 0b0110u};
    CHECK_THROWS_AS(one.is_partition_excluded(overlapping), std::invalid_argument);

    // Recording a vector already in the span changes nothing.
    CHECK(one.record(0b0011).rank() == 1);
    const ExclusionLedger two = one.record(0b0101);
    CHECK(two.rank() == 2);
    CHECK(two.surviving_bipartitions() == 2);
    CHECK(two.is_bipartition_excluded(0b0110));  // XOR of the two outcomes
}

TEST_CASE("GHZ outcomes eventually exclude every nontrivial bipartition") {
    const int n = 5;
    const BitstringDistribution dist = bitstring_distribution(purity_vector(PureState::ghz(n)));
    ExclusionLedger ledger(n);
    for (const std::uint32_t z : sample_bitstrings(dist, 200, 3)) {
        if (z != 0) ledger = ledger.record(z);
    }
    CHECK(ledger.rank() == n - 1);
    CHECK(ledger.surviving_bipartitions() == 1);
    for (std::uint32_t a = 1; a < (1u << n) - 1; ++a) CHECK(ledger.is_bipartition_excluded(a));
}

TEST_CASE("Bell-pair count moments") {
    const BellPairStats bell = bell_pair_stats(purity_vector(PureState::bell()));
    CHECK(bell.mean == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bell.variance == doctest::Approx(0.75).epsilon(1e-12));

    const BellPairStats ghz3 = bell_pair_stats(purity_vector(PureState::ghz(3)));
    CHECK(ghz3.mean == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(ghz3.variance == doctest::Approx(0.9375).epsilon(1e-12));

    const BellPairStats w3 = bell_pair_stats(purity_vector(PureState::w(3)));
    CHECK(w3.mean == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(w3.variance == doctest::Approx(8.0 / 9.0).epsilon(1e-12));

    const BellPairStats prod = bell_pair_stats(purity_vector(PureState::plus_all(4)));
    CHECK(prod.mean == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(prod.variance == doctest::Approx(0.0).epsilon(1e-12));

    // Against direct moments of the outcome distribution, for generic states.
    for (const int n : {2, 3, 4, 5}) {
        const PureState psi = sample_haar_state(n, 4200 + static_cast<std::uint64_t>(n));
        const PurityVector pv = purity_vector(psi);
        const auto [mean, var] = oracle::weight_moments(bitstring_distribution(pv).probs);
        const BellPairStats stats = bell_pair_stats(pv);
        CHECK(stats.mean == doctest::Approx(mean).epsilon(1e-10));
        CHECK(stats.variance == doctest::Approx(var).epsilon(1e-10));
    }
}

TEST_CASE("empirical Bell-pair moments converge to the closed form") {
    const PurityVector pv = purity_vector(PureState::ghz(4));
    const auto samples = sample_bitstrings(bitstring_distribution(pv), 20000, 11);
    const BellPairStats exact = bell_pair_stats(pv);
    const BellPairStats est = empirical_bell_pairs(samples);
    CHECK(est.mean == doctest::Approx(exact.mean).epsilon(0.05));
    CHECK(est.variance == doctest::Approx(exact.variance).epsilon(0.10));

    CHECK_THROWS_AS(empirical_bell_pairs(std::span<const std::uint32_t>{}), std::invalid_argument);
}
