#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "centangle/hierarchy.hpp"
#include "centangle/purity.hpp"
#include "centangle/rational.hpp"
#include "centangle/state.hpp"

using namespace centangle;

namespace {
const CmaxTable& table12() {
    static const CmaxTable t = build_cmax_table(12);
    return t;
}
}  // namespace

TEST_CASE("integer partitions are canonical and complete") {
    const auto p1 = integer_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].blocks == std::vector<int>{1});

    const auto p6 = integer_partitions(6);
    CHECK(p6.size() == 11);
    CHECK(p6.front().blocks == std::vector<int>{6});
    CHECK(p6.back().blocks == std::vector<int>(6, 1));
    for (const ProductStructure& s : p6) {
        CHECK(s.n() == 6);
        for (std::size_t i = 1; i < s.blocks.size(); ++i) CHECK(s.blocks[i - 1] >= s.blocks[i]);
    }
    CHECK(integer_partitions(12).size() == 77);

    CHECK(ProductStructure({3, 2, 1}).render() == "3x2x1");
    CHECK_THROWS_AS(ProductStructure({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ProductStructure({2, 0}), std::invalid_argument);
}

TEST_CASE("refinement relation") {
    const ProductStructure all3({1, 1, 1});
    CHECK(refines(ProductStructure({2, 1}), ProductStructure({3})));
    CHECK(refines(all3, ProductStructure({3})));
    CHECK(refines(all3, ProductStructure({2, 1})));
    CHECK(refines(ProductStructure({2, 1}), ProductStructure({2, 1})));
    CHECK_FALSE(refines(ProductStructure({3}), ProductStructure({2, 1})));
    CHECK_FALSE(refines(ProductStructure({3, 1}), ProductStructure({2, 2})));
    CHECK_FALSE(refines(ProductStructure({2, 2}), ProductStructure({3, 1})));
    CHECK(refines(ProductStructure({2, 2, 1}), ProductStructure({4, 1})));
    CHECK(refines(ProductStructure({2, 2, 1}), ProductStructure({3, 2})));
    CHECK_FALSE(refines(ProductStructure({2, 2, 1}), ProductStructure({3, 1, 1})));
    // Structures over different qubit counts are never related.
    CHECK_FALSE(refines(ProductStructure({2}), ProductStructure({3})));
}

TEST_CASE("cmax table values and achievability flags") {
    const CmaxTable t = build_cmax_table(16);
    CHECK(t.at(1).value == 0);
    CHECK(t.at(2).value == Rational(1, 4));
    CHECK(t.at(12).value == parse_rational("0.94287109375"));
    for (const int n : {2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 14}) CHECK(t.at(n).achievable);
    for (const int n : {7, 13, 15, 16}) CHECK_FALSE(t.at(n).achievable);
    CHECK_THROWS_AS(t.at(17), std::out_of_range);
}

TEST_CASE("GME thresholds match the known table") {
    const std::vector<std::pair<int, const char*>> zeta = {
        {2, "0"},        {3, "0.25"},          {4, "0.4375"},
        {5, "0.53125"},  {6, "0.625"},         {7, "0.71875"},
        {8, "0.7890625"}, {9, "0.83447265625"}, {10, "0.87109375"},
        {11, "0.900390625"}, {12, "0.923828125"}};
    for (const auto& [n, text] : zeta) {
        CHECK(gme_threshold(n, table12()) == parse_rational(text));
    }
}

TEST_CASE("hierarchy rows are ordered by bound, lexicographic on ties") {
    const HierarchyTable h = build_hierarchy(6, table12());
    REQUIRE(h.rows.size() == 11);
    const std::vector<std::vector<int>> expected_order = {
        {6},       {5, 1},    {4, 2},          {3, 3},          {2, 2, 2},         {3, 2, 1},
        {4, 1, 1}, {2, 2, 1, 1}, {3, 1, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    for (std::size_t i = 0; i < expected_order.size(); ++i) {
        CHECK(h.rows[i].structure.blocks == expected_order[i]);
    }
    // The tie at 5/8: the two-block structures 5x1 and 4x2 share one bound.
    CHECK(h.rows[1].zeta_star == Rational(5, 8));
    CHECK(h.rows[2].zeta_star == Rational(5, 8));
    CHECK(h.rows[0].zeta_star == parse_rational("0.71875"));
    for (const HierarchyRow& row : h.rows) CHECK(row.tight);

    const HierarchyTable h12 = build_hierarchy(12, table12());
    for (const HierarchyRow& row : h12.rows) {
        bool has_unachievable = false;
        for (const int b : row.structure.blocks) has_unachievable |= (b == 7);
        CHECK(row.tight == !has_unachievable);
    }
}

TEST_CASE("bounds are monotone under refinement") {
    for (int n = 2; n <= 12; ++n) {
        const auto parts = integer_partitions(n);
        for (const ProductStructure& fine : parts) {
            for (const ProductStructure& coarse : parts) {
                if (!refines(fine, coarse)) continue;
                CHECK(structure_bound(fine, table12()) <= structure_bound(coarse, table12()));
            }
        }
    }
}

TEST_CASE("certification from a CE value") {
    const HierarchyTable h3 = build_hierarchy(3, table12());

    const CertificationReport ghz = certify(0.375, 3, h3);
    CHECK(ghz.gme_certified);
    CHECK(ghz.threshold == Rational(1, 4));
    REQUIRE(ghz.excluded.size() == 2);
    REQUIRE(ghz.surviving.size() == 1);
    CHECK(ghz.surviving[0].structure.blocks == std::vector<int>{3});

    // A bound exactly equal to the measured CE is not excluded.
    const CertificationReport edge = certify(0.25, 3, h3);
    CHECK_FALSE(edge.gme_certified);
    REQUIRE(edge.surviving.size() == 2);
    CHECK(edge.excluded.size() == 1);

    const CertificationReport w = certify(concentratable_entanglement(PureState::w(3)), 3, h3);
    CHECK(w.gme_certified);

    CHECK_THROWS_AS(certify(1.5, 3, h3), std::invalid_argument);
    CHECK_THROWS_AS(certify(0.3, 4, h3), std::invalid_argument);
}

TEST_CASE("mixed-state cut exclusion shrinks with purity") {
    // Pure limit: reduces to the pure two-block test.
    CHECK(certify_mixed(0.01, 1.0, 2, 1, table12()));
    CHECK_FALSE(certify_mixed(0.0, 1.0, 2, 1, table12()));
    // GHZ-level CE on 3 qubits versus the 1|2 cut bound of 1/4.
    CHECK(certify_mixed(0.375, 0.999, 3, 1, table12()));
    CHECK_FALSE(certify_mixed(0.375, 0.98, 3, 1, table12()));
    CHECK_THROWS_AS(certify_mixed(0.4, 1.2, 3, 1, table12()), std::invalid_argument);
    CHECK_THROWS_AS(certify_mixed(0.4, 0.9, 3, 3, table12()), std::invalid_argument);
}

TEST_CASE("CP-rank ceiling interpolates between product and AME") {
    CHECK(cp_rank_ce_bound_exact(5, 1) == 0);
    CHECK(cp_rank_ce_bound_exact(5, 2) == Rational(15, 32));
    CHECK(cp_rank_ce_bound_exact(5, 3) == Rational(55, 96));
    CHECK(cp_rank_ce_bound_exact(5, 4) == ame_bound_exact(5));
    CHECK(cp_rank_ce_bound_exact(5, 1000) == ame_bound_exact(5));
    for (int r = 1; r < 6; ++r) {
        CHECK(cp_rank_ce_bound_exact(6, r) <= cp_rank_ce_bound_exact(6, r + 1));
    }
    CHECK(cp_rank_ce_bound(5, 3) == doctest::Approx(55.0 / 96.0).epsilon(1e-12));
}

TEST_CASE("marginal bound versus the LP ceiling") {
    for (const int n : {2, 3, 5, 6, 7}) {
        CHECK(ame_bound_exact(n) == table12().at(n).value);
    }
    for (const int n : {4, 8, 9, 10, 11, 12}) {
        CHECK(ame_bound_exact(n) > table12().at(n).value);
    }
    CHECK(ame_bound_exact(5) == Rational(5, 8));
}

TEST_CASE("geometric-measure translation") {
    const GeometricMeasureBound none = geometric_measure_lower_bound(0.0);
    CHECK(none.eg_lower == doctest::Approx(0.0));
    CHECK(none.lambda_max_upper == doctest::Approx(1.0));
    const GeometricMeasureBound half = geometric_measure_lower_bound(0.5);
    CHECK(half.eg_lower == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(half.lambda_max_upper == doctest::Approx(std::sqrt(0.875)).epsilon(1e-12));
    CHECK_THROWS_AS(geometric_measure_lower_bound(-0.1), std::invalid_argument);
}

TEST_CASE("Haar tail bound against the GME threshold") {
    CHECK(haar_tail_bound_exact(2, table12()) == Rational(3, 7));
    CHECK(haar_tail_bound(2, table12()) == doctest::Approx(3.0 / 7.0).epsilon(1e-12));
    // The mean sits at or below the threshold here: no Chebyshev statement.
    CHECK_THROWS_AS(haar_tail_bound_exact(3, table12()), std::domain_error);
    CHECK_THROWS_AS(haar_tail_bound_exact(4, table12()), std::domain_error);
    for (const int n : {5, 6, 7, 8}) {
        const Rational b = haar_tail_bound_exact(n, table12());
        CHECK(b > 0);
        CHECK(haar_tail_bound(n, table12()) == doctest::Approx(to_double(b)).epsilon(1e-12));
    }
    // The tail probability bound collapses fast with n.
    CHECK(haar_tail_bound_exact(8, table12()) < haar_tail_bound_exact(5, table12()));
}
