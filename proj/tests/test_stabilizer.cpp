#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "centangle/lp.hpp"
#include "centangle/purity.hpp"
#include "centangle/stabilizer.hpp"
#include "oracles.hpp"

using namespace centangle;

namespace {

Graph ring(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

std::vector<Rational> to_rational(const WeightEnumerator& e) {
    std::vector<Rational> a;
    a.reserve(e.counts.size());
    for (const std::int64_t c : e.counts) a.emplace_back(c);
    return a;
}

}  // namespace

TEST_CASE("graph construction and validation") {
    const Graph g(3, {{0, 1}, {2, 1}});
    const auto adj = g.adjacency();
    CHECK(adj[0] == 0b010);
    CHECK(adj[1] == 0b101);
    CHECK(adj[2] == 0b010);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("Pauli commutation and group validation") {
    const PauliOperator x0{0b01, 0b00};
    const PauliOperator z0{0b00, 0b01};
    const PauliOperator xx{0b11, 0b00};
    const PauliOperator zz{0b00, 0b11};
    CHECK_FALSE(commutes(x0, z0));
    CHECK(commutes(xx, zz));
    CHECK(commutes(x0, x0));

    CHECK_NOTHROW(StabilizerGroup(2, {xx, zz}));
    CHECK_THROWS_AS(StabilizerGroup(2, {x0, z0}), std::invalid_argument);   // anticommute
    CHECK_THROWS_AS(StabilizerGroup(2, {xx, xx}), std::invalid_argument);   // dependent
    CHECK_THROWS_AS(StabilizerGroup(1, {xx}), std::invalid_argument);       // out of range
    CHECK_THROWS_AS(ghz_group(1), std::invalid_argument);
}

TEST_CASE("known weight distributions") {
    const WeightEnumerator bell = enumerate_weights(ghz_group(2));
    CHECK(bell.counts == std::vector<std::int64_t>{1, 0, 3});
    // The single-edge graph state is LU-equivalent and has the same counts.
    CHECK(enumerate_weights(graph_state_group(Graph(2, {{0, 1}}))).counts ==
          std::vector<std::int64_t>{1, 0, 3});

    CHECK(enumerate_weights(ghz_group(3)).counts == std::vector<std::int64_t>{1, 0, 3, 4});
    CHECK(enumerate_weights(ghz_group(4)).counts == std::vector<std::int64_t>{1, 0, 6, 0, 9});

    CHECK(ce_from_enumerator(bell) == Rational(1, 4));
    CHECK(ce_from_enumerator(enumerate_weights(ghz_group(3))) == Rational(3, 8));
    CHECK(ce_from_enumerator(enumerate_weights(ghz_group(4))) == Rational(7, 16));
}

TEST_CASE("enumeration matches the statevector Pauli sweep") {
    const std::vector<Graph> graphs = {Graph(2, {{0, 1}}), ring(3), ring(4),
                                       Graph(4, {{0, 1}, {1, 2}, {2, 3}})};
    for (const Graph& g : graphs) {
        const StabilizerGroup group = graph_state_group(g);
        const WeightEnumerator e = enumerate_weights(group);
        const PureState psi = graph_state_statevector(g);
        const std::vector<double> ref = oracle::pauli_weight_distribution(psi);
        REQUIRE(e.counts.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(static_cast<double>(e.counts[i]) == doctest::Approx(ref[i]).epsilon(1e-9));
        }
        CHECK(to_double(graph_state_ce(g)) ==
              doctest::Approx(concentratable_entanglement(psi)).epsilon(1e-10));
    }
}

TEST_CASE("parallel enumeration agrees with the serial walk") {
    for (const int n : {5, 9, 14}) {
        const StabilizerGroup g = graph_state_group(ring(n));
        CHECK(enumerate_weights(g).counts == enumerate_weights_serial(g).counts);
    }
    CHECK_THROWS_AS(enumerate_weights(graph_state_group(ring(5)), 4), std::invalid_argument);
}

TEST_CASE("stabilizer enumerators are MacWilliams self-dual") {
    for (const Graph& g : {ring(4), ring(5), Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})}) {
        const WeightEnumerator e = enumerate_weights(graph_state_group(g));
        const Enumerators dual = make_enumerators(e.n, 0, to_rational(e));
        CHECK(dual.A == dual.B);
    }
}

TEST_CASE("graph-state CE fast path and invariances") {
    CHECK(graph_state_ce(ring(5)) == Rational(5, 8));
    // Above the fast-path cutoff the enumerator route must agree; compare the
    // two public entry points on a mid-size instance.
    const Graph g14 = ring(14);
    CHECK(graph_state_ce(g14) ==
          ce_from_enumerator(enumerate_weights(graph_state_group(g14))));

    // Local complementation is a local-unitary move: CE is exactly invariant.
    for (const Graph& g : {ring(5), ring(6), Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})}) {
        for (int v = 0; v < g.n; ++v) {
            CHECK(graph_state_ce(local_complement(g, v)) == graph_state_ce(g));
        }
    }
}

TEST_CASE("exhaustive search reaches the LP ceiling for small n") {
    const SearchResult r2 = search_graph_states_exhaustive(2);
    CHECK(r2.best_ce == Rational(1, 4));
    CHECK(r2.graphs_examined == 2);
    CHECK(search_graph_states_exhaustive(3).best_ce == Rational(3, 8));
    CHECK(search_graph_states_exhaustive(4).best_ce == Rational(1, 2));
    const SearchResult r5 = search_graph_states_exhaustive(5);
    CHECK(r5.best_ce == Rational(5, 8));
    CHECK(r5.graphs_examined == 1024);
    // Determinism of the tie-break: the same call returns the same witness.
    CHECK(search_graph_states_exhaustive(5).witness.edges == r5.witness.edges);
    CHECK_THROWS_AS(search_graph_states_exhaustive(8), std::invalid_argument);
}

TEST_CASE("annealing search is deterministic and finds small optima") {
    const SearchResult a = search_graph_states_random(5, 17, 4, 400);
    const SearchResult b = search_graph_states_random(5, 17, 4, 400);
    CHECK(a.best_ce == b.best_ce);
    CHECK(a.witness.edges == b.witness.edges);
    CHECK(a.best_ce == Rational(5, 8));
    CHECK(search_graph_states_random(6, 23, 6, 600).best_ce == parse_rational("0.71875"));
}

TEST_CASE("distance and extremality classification") {
    const ExtremalReport bell = extremal_report(enumerate_weights(ghz_group(2)));
    CHECK(bell.distance == 2);
    CHECK(bell.type2);
    CHECK(bell.distance_bound == 2);
    CHECK(bell.extremal);

    const ExtremalReport ghz3 = extremal_report(enumerate_weights(ghz_group(3)));
    CHECK(ghz3.distance == 2);
    CHECK_FALSE(ghz3.type2);
    CHECK(ghz3.distance_bound == 2);
    CHECK(ghz3.extremal);

    const ExtremalReport ghz4 = extremal_report(enumerate_weights(ghz_group(4)));
    CHECK(ghz4.type2);
    CHECK(ghz4.extremal);

    // GHZ_6 keeps distance 2 but type II at n = 6 allows distance 4.
    const ExtremalReport ghz6 = extremal_report(enumerate_weights(ghz_group(6)));
    CHECK(ghz6.distance == 2);
    CHECK(ghz6.type2);
    CHECK(ghz6.distance_bound == 4);
    CHECK_FALSE(ghz6.extremal);

    // The n = 5 optimum is a type I group of distance 3, the n = 5 maximum.
    const ExtremalReport r5 = extremal_report(
        enumerate_weights(graph_state_group(search_graph_states_exhaustive(5).witness)));
    CHECK(r5.distance == 3);
    CHECK_FALSE(r5.type2);
    CHECK(r5.distance_bound == 3);
    CHECK(r5.extremal);

    // The n = 6 optimum is type II with distance 4, again extremal.
    const ExtremalReport r6 = extremal_report(
        enumerate_weights(graph_state_group(search_graph_states_exhaustive(6).witness)));
    CHECK(r6.distance == 4);
    CHECK(r6.type2);
    CHECK(r6.extremal);
}

TEST_CASE("random groups are valid, reproducible, and self-dual") {
    for (int n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const StabilizerGroup g = random_stabilizer_group(n, seed);
            CHECK(g.k() == 0);

            const StabilizerGroup again = random_stabilizer_group(n, seed);
            for (std::size_t i = 0; i < g.generators.size(); ++i) {
                CHECK(g.generators[i].x == again.generators[i].x);
                CHECK(g.generators[i].z == again.generators[i].z);
            }

            // A full-rank group is its own symplectic dual, so the weight
            // distribution must be a fixed point of the transform.
            const WeightEnumerator e = enumerate_weights(g);
            const std::vector<Rational> a = to_rational(e);
            const std::vector<Rational> b = macwilliams(a, n, 0);
            for (int i = 0; i <= n; ++i) {
                CHECK(b[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i)]);
            }

            const Rational ce = ce_from_enumerator(e);
            CHECK(ce >= 0);
            CHECK(ce < 1);
        }
    }

    // Different seeds should explore different groups.
    const StabilizerGroup g1 = random_stabilizer_group(6, 11);
    const StabilizerGroup g2 = random_stabilizer_group(6, 12);
    bool same = true;
    for (std::size_t i = 0; i < g1.generators.size(); ++i) {
        same = same && g1.generators[i].x == g2.generators[i].x &&
               g1.generators[i].z == g2.generators[i].z;
    }
    CHECK_FALSE(same);

    CHECK_THROWS_AS(random_stabilizer_group(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_stabilizer_group(32, 1), std::invalid_argument);
}
