#pragma once

#include <cstdint>
#include <vector>

#include "centangle/rational.hpp"
#include "centangle/state.hpp"

namespace centangle {

// Simple undirected graph on n vertices; edges are unordered distinct pairs.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph(int n_vertices, std::vector<std::pair<int, int>> edge_list);

    // adjacency[v] = bitmask of neighbours of v
    std::vector<std::uint32_t> adjacency() const;
};

// Pauli operator in binary symplectic form: bit i of x / z is an X / Z factor
// on qubit i (both bits set = Y). The stored sign is +1 or -1.
struct PauliOperator {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    bool negative = false;

    int weight() const { return popcount(x | z); }
};

bool commutes(const PauliOperator& a, const PauliOperator& b);

// Abelian group generated by independent commuting Pauli operators on n
// qubits; 2^(n-k) elements for n-k generators. k = 0 stabilizes a unique
// state.
struct StabilizerGroup {
    int n = 0;
    std::vector<PauliOperator> generators;

    StabilizerGroup(int n_qubits, std::vector<PauliOperator> gens);

    int k() const { return n - static_cast<int>(generators.size()); }
};

// Generators X_v Z_{N(v)} for each vertex v.
StabilizerGroup graph_state_group(const Graph& g);

// GHZ_n group: X...X together with nearest-neighbour ZZ pairs.
StabilizerGroup ghz_group(int n);

// Full-rank group obtained by pushing the Z_1..Z_n generators through a
// seeded random circuit of H, S, and CNOT conjugations. Signs are left at +1;
// weight statistics do not depend on them. Deterministic in (n, seed).
StabilizerGroup random_stabilizer_group(int n, std::uint64_t seed);

// counts[i] = number of group elements of weight i (A_i).
struct WeightEnumerator {
    int n = 0;
    std::vector<std::int64_t> counts;
};

inline constexpr int kMaxEnumerationQubits = 26;

// Walks all 2^(n-k) elements in Gray-code order, one generator flip per
// step. The parallel version splits the index range into blocks, seeds each
// block by direct prefix XOR and merges integer histograms, so it agrees
// with the serial walk exactly.
WeightEnumerator enumerate_weights(const StabilizerGroup& g, int max_n = kMaxEnumerationQubits);
WeightEnumerator enumerate_weights_serial(const StabilizerGroup& g,
                                          int max_n = kMaxEnumerationQubits);

// CE of the stabilized state from the weight distribution of a full-rank
// (k = 0) group: 1 - 4^-n sum_i A_i 3^(n-i), exactly.
Rational ce_from_enumerator(const WeightEnumerator& e);

// Fast path for graph states; equals ce_from_enumerator(enumerate_weights(...)).
Rational graph_state_ce(const Graph& g);

// The stabilized state itself: CZ over edges applied to |+>^n.
PureState graph_state_statevector(const Graph& g);

Graph local_complement(const Graph& g, int v);

struct SearchResult {
    Rational best_ce;
    Graph witness;
    std::uint64_t graphs_examined = 0;
};

// All 2^C(n,2) graphs (n <= 7); ties resolved toward the smallest edge mask,
// so the result is deterministic. OpenMP-parallel over the graph range.
SearchResult search_graph_states_exhaustive(int n);

// Seeded simulated annealing over edge toggles with restarts; deterministic
// for fixed (seed, restarts, steps).
SearchResult search_graph_states_random(int n, std::uint64_t seed, int restarts,
                                        int steps_per_restart);

struct ExtremalReport {
    int distance = 0;       // min positive weight with A_i > 0
    bool type2 = false;     // every element has even weight
    int distance_bound = 0; // largest distance allowed for this n and type
    bool extremal = false;  // distance == distance_bound
};

// Distance and extremality data for a full-rank group. Bounds:
//   type II: 2 floor(n/6) + 2
//   type I:  2 floor(n/6) + 1 if n % 6 == 0, +3 if n % 6 == 5, +2 otherwise.
ExtremalReport extremal_report(const WeightEnumerator& e);

}  // namespace centangle
