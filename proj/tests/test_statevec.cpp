#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "centangle/haar.hpp"
#include "centangle/purity.hpp"
#include "centangle/rng.hpp"
#include "centangle/state.hpp"
#include "oracles.hpp"

using namespace centangle;

namespace {

// Haar-ish random single-qubit unitary from two Gaussian columns and
// Gram-Schmidt; exact unitarity is all the tests need.
std::array<Complex, 4> random_unitary_2x2(CounterRng& rng) {
    const auto [a_re, a_im] = rng.next_gaussian_pair();
    const auto [b_re, b_im] = rng.next_gaussian_pair();
    const auto [c_re, c_im] = rng.next_gaussian_pair();
    const auto [d_re, d_im] = rng.next_gaussian_pair();
    Complex u0(a_re, a_im), u1(b_re, b_im), v0(c_re, c_im), v1(d_re, d_im);
    const double nu = std::sqrt(std::norm(u0) + std::norm(u1));
    u0 /= nu;
    u1 /= nu;
    const Complex overlap = std::conj(u0) * v0 + std::conj(u1) * v1;
    v0 -= overlap * u0;
    v1 -= overlap * u1;
    const double nv = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nv;
    v1 /= nv;
    return {u0, v0, u1, v1};
}

}  // namespace

TEST_CASE("known purity vectors and CE values") {
    const PurityVector bell = purity_vector(PureState::bell());
    REQUIRE(bell.vals.size() == 4);
    CHECK(bell.vals[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bell.vals[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bell.vals[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bell.vals[3] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concentratable_entanglement(bell) == doctest::Approx(0.25).epsilon(1e-12));

    const PurityVector ghz3 = purity_vector(PureState::ghz(3));
    for (std::uint32_t a = 1; a < 7; ++a) {
        CHECK(ghz3.vals[a] == doctest::Approx(0.5).epsilon(1e-12));
    }
    CHECK(concentratable_entanglement(ghz3) == doctest::Approx(0.375).epsilon(1e-12));

    for (const int n : {2, 3, 4, 5, 6}) {
        CHECK(concentratable_entanglement(PureState::ghz(n)) ==
              doctest::Approx(0.5 - std::ldexp(1.0, -n)).epsilon(1e-12));
    }

    CHECK(concentratable_entanglement(PureState::w(3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(concentratable_entanglement(PureState::plus_all(4)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(concentratable_entanglement(PureState::basis(3, 5)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("purity sweep matches the explicit partial-trace oracle") {
    for (const int n : {2, 3, 4, 5}) {
        const PureState psi = sample_haar_state(n, 1000 + static_cast<std::uint64_t>(n));
        const PurityVector pv = purity_vector(psi);
        for (std::uint32_t a = 0; a < pv.vals.size(); ++a) {
            CHECK(pv.vals[a] == doctest::Approx(oracle::subset_purity(psi, a)).epsilon(1e-10));
        }
    }
}

TEST_CASE("parallel and serial sweeps agree bitwise") {
    const PureState psi = sample_haar_state(7, 42);
    const PurityVector par = purity_vector(psi);
    const PurityVector ser = purity_vector_serial(psi);
    REQUIRE(par.vals.size() == ser.vals.size());
    for (std::size_t i = 0; i < par.vals.size(); ++i) CHECK(par.vals[i] == ser.vals[i]);

    const DensityMatrix rho = DensityMatrix::from_pure(sample_haar_state(5, 43));
    const PurityVector mp = purity_vector(rho);
    const PurityVector ms = purity_vector_serial(rho);
    for (std::size_t i = 0; i < mp.vals.size(); ++i) CHECK(mp.vals[i] == ms.vals[i]);
}

TEST_CASE("subset purities respect complement symmetry and range bounds") {
    for (const int n : {3, 4, 5, 6}) {
        const PureState psi = sample_haar_state(n, 7 * static_cast<std::uint64_t>(n));
        const PurityVector pv = purity_vector(psi);
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        for (std::uint32_t a = 0; a < pv.vals.size(); ++a) {
            CHECK(pv.vals[a] == pv.vals[~a & full]);
            const int k = std::min(popcount(a), n - popcount(a));
            CHECK(pv.vals[a] >= std::ldexp(1.0, -k) - 1e-9);
            CHECK(pv.vals[a] <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("CE is invariant under local unitaries") {
    CounterRng rng(99);
    for (const int n : {2, 3, 4, 5}) {
        PureState psi = sample_haar_state(n, 500 + static_cast<std::uint64_t>(n));
        const double before = concentratable_entanglement(psi);
        for (int q = 0; q < n; ++q) apply_single_qubit(psi, q, random_unitary_2x2(rng));
        CHECK(concentratable_entanglement(psi) == doctest::Approx(before).epsilon(1e-9));
    }
}

TEST_CASE("CE composes across tensor products") {
    CounterRng seeds(7);
    for (int trial = 0; trial < 25; ++trial) {
        const int na = 1 + static_cast<int>(seeds.next_u64() % 4);
        const int nb = 1 + static_cast<int>(seeds.next_u64() % 4);
        const PureState a = sample_haar_state(na, seeds.next_u64());
        const PureState b = sample_haar_state(nb, seeds.next_u64());
        const double expected =
            1.0 - (1.0 - concentratable_entanglement(a)) * (1.0 - concentratable_entanglement(b));
        CHECK(concentratable_entanglement(tensor(a, b)) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("CE of k-fold copies follows the composition power law") {
    for (const int n : {2, 3, 4}) {
        const PureState psi = sample_haar_state(n, 300 + static_cast<std::uint64_t>(n));
        const double ce1 = concentratable_entanglement(psi);
        const PureState two = tensor(psi, psi);
        CHECK(concentratable_entanglement(two) ==
              doctest::Approx(1.0 - std::pow(1.0 - ce1, 2)).epsilon(1e-9));
        if (n <= 3) {
            CHECK(concentratable_entanglement(tensor(two, psi)) ==
                  doctest::Approx(1.0 - std::pow(1.0 - ce1, 3)).epsilon(1e-9));
        }
    }
}

TEST_CASE("density-matrix CE agrees with the pure-state path and the oracle") {
    for (const int n : {2, 3, 4}) {
        const PureState psi = sample_haar_state(n, 800 + static_cast<std::uint64_t>(n));
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        CHECK(concentratable_entanglement(rho) ==
              doctest::Approx(concentratable_entanglement(psi)).epsilon(1e-9));
        CHECK(concentratable_entanglement(rho) == doctest::Approx(oracle::ce(rho)).epsilon(1e-9));
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
            CHECK(purity(rho, a) == doctest::Approx(purity(psi, a)).epsilon(1e-9));
        }
    }
}

TEST_CASE("closed-form bounds") {
    CHECK(ce_upper_bound_ame(2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ce_upper_bound_ame(4) == doctest::Approx(0.53125).epsilon(1e-12));
    CHECK(ce_upper_bound_ame(5) == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(ce_asymptotic_bound(2) == doctest::Approx(0.4375).epsilon(1e-12));
    // The marginal-based bound always sits below the asymptotic ceiling.
    for (int n = 2; n <= 14; ++n) CHECK(ce_upper_bound_ame(n) < ce_asymptotic_bound(n));
}

TEST_CASE("invalid states are rejected") {
    std::vector<Complex> bad(4, 0.5);
    bad[0] = 0.7;
    CHECK_THROWS_AS(PureState(2, bad), std::invalid_argument);
    CHECK_THROWS_AS(PureState(3, std::vector<Complex>(4, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(PureState(0, std::vector<Complex>{1.0}), std::invalid_argument);

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 0.9;
    m(3, 3) = 0.1;
    m(0, 3) = 0.2;  // not Hermitian without the conjugate entry
    CHECK_THROWS_AS(DensityMatrix(2, m), std::invalid_argument);
    m(3, 0) = 0.2;
    CHECK_NOTHROW(DensityMatrix(2, m));
    m(3, 3) = 0.3;  // trace now 1.2
    CHECK_THROWS_AS(DensityMatrix(2, m), std::invalid_argument);
    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(1, neg), std::invalid_argument);

    CHECK_THROWS_AS(purity_vector(PureState::ghz(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(purity(PureState::bell(), 4u), std::out_of_range);
}
