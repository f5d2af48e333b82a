#include "centangle/stabilizer.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "centangle/rng.hpp"

namespace centangle {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
}

std::uint32_t gray_code(std::uint32_t i) { return i ^ (i >> 1); }

// XOR of the selected generators' x/z parts: the group element for `subset`.
PauliOperator subset_element(const std::vector<PauliOperator>& gens, std::uint32_t subset) {
    PauliOperator p;
    for (std::size_t i = 0; subset != 0; subset >>= 1, ++i) {
        if (subset & 1) {
            p.x ^= gens[i].x;
            p.z ^= gens[i].z;
        }
    }
    return p;
}

// Gray-code walk over subsets [lo, hi) of the generator index space,
// accumulating the weight histogram. The element at gray(lo) is seeded
// directly so disjoint ranges compose to the full serial walk.
void walk_range(const std::vector<PauliOperator>& gens, std::uint32_t lo, std::uint32_t hi,
                std::vector<std::int64_t>& counts) {
    PauliOperator cur = subset_element(gens, gray_code(lo));
    ++counts[static_cast<std::size_t>(cur.weight())];
    for (std::uint32_t i = lo + 1; i < hi; ++i) {
        const int flip = std::countr_zero(i);
        cur.x ^= gens[static_cast<std::size_t>(flip)].x;
        cur.z ^= gens[static_cast<std::size_t>(flip)].z;
        ++counts[static_cast<std::size_t>(cur.weight())];
    }
}

void check_enumeration_cap(const StabilizerGroup& g, int max_n, const char* what) {
    if (g.n > max_n) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(g.n) +
                                    " qubits exceeds the cap of " + std::to_string(max_n));
    }
}

// Sum over subsets T of 3^(n - weight(element(T))) for a graph-state group,
// as a 64-bit integer. Safe for n <= 20 (2^n * 3^n < 2^63).
std::uint64_t graph_purity_weight_sum(int n, const std::vector<std::uint32_t>& adj) {
    std::array<std::uint64_t, 21> pow3{};
    pow3[0] = 1;
    for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = 3 * pow3[static_cast<std::size_t>(i - 1)];
    std::uint64_t sum = pow3[static_cast<std::size_t>(n)];  // identity term
    std::uint32_t t = 0, z = 0;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t i = 1; i < total; ++i) {
        const int flip = std::countr_zero(i);
        t ^= std::uint32_t{1} << flip;
        z ^= adj[static_cast<std::size_t>(flip)];
        sum += pow3[static_cast<std::size_t>(n - popcount(t | z))];
    }
    return sum;
}

Rational ce_from_weight_sum(int n, std::uint64_t sum) {
    return 1 - Rational(BigInt(sum), ipow(4, n));
}

std::uint64_t edge_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

// Edge bit layout: bit e corresponds to the e-th pair (i, j), i < j, in
// lexicographic order.
std::vector<std::pair<int, int>> edge_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edge_count(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1) edges.push_back(pairs[e]);
    }
    return Graph(n, std::move(edges));
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edge_list)
    : n(n_vertices), edges(std::move(edge_list)) {
    if (n < 1 || n > 31) throw std::invalid_argument("Graph: vertex count outside 1..31");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto& [a, b] : edges) {
        check_vertex(a, n);
        check_vertex(b, n);
        if (a == b) throw std::invalid_argument("Graph: self-loop");
        if (a > b) std::swap(a, b);
        if (adj[static_cast<std::size_t>(a)] & (std::uint32_t{1} << b)) {
            throw std::invalid_argument("Graph: duplicate edge");
        }
        adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
    }
    std::sort(edges.begin(), edges.end());
}

std::vector<std::uint32_t> Graph::adjacency() const {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
    }
    return adj;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    return parity(a.x & b.z) == parity(a.z & b.x);
}

StabilizerGroup::StabilizerGroup(int n_qubits, std::vector<PauliOperator> gens)
    : n(n_qubits), generators(std::move(gens)) {
    if (n < 1 || n > 31) throw std::invalid_argument("StabilizerGroup: qubit count outside 1..31");
    if (generators.size() > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("StabilizerGroup: more generators than qubits");
    }
    const std::uint32_t full = (n == 31) ? 0x7FFFFFFFu : ((std::uint32_t{1} << n) - 1);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if ((generators[i].x & ~full) || (generators[i].z & ~full)) {
            throw std::invalid_argument("StabilizerGroup: generator acts outside the qubit range");
        }
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument("StabilizerGroup: generators do not commute");
            }
        }
    }
    // Independence: GF(2) rank of the (x|z) rows must equal the row count.
    std::vector<std::uint64_t> rows;
    for (const PauliOperator& g : generators) {
        std::uint64_t r = g.x | (static_cast<std::uint64_t>(g.z) << n);
        for (const std::uint64_t b : rows) r = std::min(r, r ^ b);
        if (r == 0) throw std::invalid_argument("StabilizerGroup: generators are dependent");
        for (std::uint64_t& b : rows) b = std::min(b, b ^ r);
        rows.push_back(r);
    }
}

StabilizerGroup graph_state_group(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<PauliOperator> gens(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        gens[static_cast<std::size_t>(v)] = {std::uint32_t{1} << v, adj[static_cast<std::size_t>(v)], false};
    }
    return StabilizerGroup(g.n, std::move(gens));
}

StabilizerGroup ghz_group(int n) {
    if (n < 2) throw std::invalid_argument("ghz_group: need n >= 2");
    std::vector<PauliOperator> gens;
    gens.push_back({(std::uint32_t{1} << n) - 1, 0, false});
    for (int i = 1; i < n; ++i) {
        gens.push_back({0, (std::uint32_t{3} << (i - 1)), false});
    }
    return StabilizerGroup(n, std::move(gens));
}

StabilizerGroup random_stabilizer_group(int n, std::uint64_t seed) {
    if (n < 1 || n > 31) {
        throw std::invalid_argument("random_stabilizer_group: qubit count outside 1..31");
    }
    std::vector<PauliOperator> gens(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        gens[static_cast<std::size_t>(i)] = {0, std::uint32_t{1} << i, false};
    }
    CounterRng rng(seed);
    const int gates = std::max(64, 4 * n * n);
    for (int g = 0; g < gates; ++g) {
        const int kind = static_cast<int>(rng.next_u64() % (n > 1 ? 3 : 2));
        const int a = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
        switch (kind) {
            case 0:  // Hadamard: swap the X and Z bits on qubit a
                for (PauliOperator& p : gens) {
                    if (((p.x ^ p.z) >> a) & 1) {
                        p.x ^= std::uint32_t{1} << a;
                        p.z ^= std::uint32_t{1} << a;
                    }
                }
                break;
            case 1:  // phase gate: X_a picks up a Z_a
                for (PauliOperator& p : gens) p.z ^= ((p.x >> a) & 1u) << a;
                break;
            default: {  // CNOT a -> b: X_a spreads to X_b, Z_b spreads to Z_a
                const int b = (a + 1 +
                               static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n - 1))) % n;
                for (PauliOperator& p : gens) {
                    p.x ^= ((p.x >> a) & 1u) << b;
                    p.z ^= ((p.z >> b) & 1u) << a;
                }
                break;
            }
        }
    }
    return StabilizerGroup(n, std::move(gens));
}

WeightEnumerator enumerate_weights_serial(const StabilizerGroup& g, int max_n) {
    check_enumeration_cap(g, max_n, "enumerate_weights_serial");
    WeightEnumerator e{g.n, std::vector<std::int64_t>(static_cast<std::size_t>(g.n) + 1, 0)};
    const std::uint32_t total = std::uint32_t{1} << g.generators.size();
    walk_range(g.generators, 0, total, e.counts);
    return e;
}

WeightEnumerator enumerate_weights(const StabilizerGroup& g, int max_n) {
    check_enumeration_cap(g, max_n, "enumerate_weights");
    WeightEnumerator e{g.n, std::vector<std::int64_t>(static_cast<std::size_t>(g.n) + 1, 0)};
    const std::uint64_t total = std::uint64_t{1} << g.generators.size();
    const int nblocks = std::max(1, std::min<int>(omp_get_max_threads() * 4,
                                                  static_cast<int>(total / 1024 + 1)));
    const std::uint64_t block = (total + nblocks - 1) / nblocks;
    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(nblocks),
        std::vector<std::int64_t>(static_cast<std::size_t>(g.n) + 1, 0));
#pragma omp parallel for schedule(static)
    for (int b = 0; b < nblocks; ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
        const std::uint64_t hi = std::min(total, lo + block);
        if (lo < hi) {
            walk_range(g.generators, static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi),
                       partial[static_cast<std::size_t>(b)]);
        }
    }
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < e.counts.size(); ++i) e.counts[i] += p[i];
    }
    return e;
}

Rational ce_from_enumerator(const WeightEnumerator& e) {
    std::int64_t total = 0;
    BigInt sum = 0;
    for (int i = 0; i <= e.n; ++i) {
        const std::int64_t c = e.counts[static_cast<std::size_t>(i)];
        if (c < 0) throw std::invalid_argument("ce_from_enumerator: negative count");
        total += c;
        sum += BigInt(c) * ipow(3, e.n - i);
    }
    if (e.counts[0] != 1 || total != (std::int64_t{1} << e.n)) {
        throw std::invalid_argument("ce_from_enumerator: distribution is not a full-rank group");
    }
    return 1 - Rational(sum, ipow(4, e.n));
}

Rational graph_state_ce(const Graph& g) {
    if (g.n <= 20) {
        return ce_from_weight_sum(g.n, graph_purity_weight_sum(g.n, g.adjacency()));
    }
    return ce_from_enumerator(enumerate_weights(graph_state_group(g)));
}

PureState graph_state_statevector(const Graph& g) {
    PureState psi = PureState::plus_all(g.n);
    for (const auto& [a, b] : g.edges) apply_cz(psi, a, b);
    return psi;
}

Graph local_complement(const Graph& g, int v) {
    check_vertex(v, g.n);
    const auto adj = g.adjacency();
    const std::uint32_t nb = adj[static_cast<std::size_t>(v)];
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            bool present = (adj[static_cast<std::size_t>(i)] >> j) & 1;
            const bool both_neighbours = ((nb >> i) & 1) && ((nb >> j) & 1);
            if (both_neighbours) present = !present;
            if (present) edges.emplace_back(i, j);
        }
    }
    return Graph(g.n, std::move(edges));
}

SearchResult search_graph_states_exhaustive(int n) {
    if (n < 2 || n > 7) {
        throw std::invalid_argument("search_graph_states_exhaustive: supported for 2 <= n <= 7");
    }
    const auto pairs = edge_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::uint64_t best_sum = ~std::uint64_t{0};
    std::uint64_t best_mask = 0;
#pragma omp parallel
    {
        std::uint64_t local_sum = ~std::uint64_t{0};
        std::uint64_t local_mask = 0;
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
#pragma omp for schedule(static) nowait
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(total); ++m) {
            std::fill(adj.begin(), adj.end(), 0);
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if ((static_cast<std::uint64_t>(m) >> e) & 1) {
                    adj[static_cast<std::size_t>(pairs[e].first)] |= std::uint32_t{1} << pairs[e].second;
                    adj[static_cast<std::size_t>(pairs[e].second)] |= std::uint32_t{1} << pairs[e].first;
                }
            }
            const std::uint64_t s = graph_purity_weight_sum(n, adj);
            if (s < local_sum || (s == local_sum && static_cast<std::uint64_t>(m) < local_mask)) {
                local_sum = s;
                local_mask = static_cast<std::uint64_t>(m);
            }
        }
#pragma omp critical
        {
            if (local_sum < best_sum || (local_sum == best_sum && local_mask < best_mask)) {
                best_sum = local_sum;
                best_mask = local_mask;
            }
        }
    }
    return SearchResult{ce_from_weight_sum(n, best_sum), graph_from_mask(n, pairs, best_mask), total};
}

SearchResult search_graph_states_random(int n, std::uint64_t seed, int restarts,
                                        int steps_per_restart) {
    if (n < 2 || n > 20) throw std::invalid_argument("search_graph_states_random: supported for 2 <= n <= 20");
    if (restarts < 1 || steps_per_restart < 1) {
        throw std::invalid_argument("search_graph_states_random: need positive restarts and steps");
    }
    const auto pairs = edge_pairs(n);
    const std::size_t ecount = pairs.size();
    const CounterRng root(seed);

    std::vector<std::uint64_t> run_sum(static_cast<std::size_t>(restarts), ~std::uint64_t{0});
    std::vector<std::vector<std::uint32_t>> run_adj(static_cast<std::size_t>(restarts));

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng = root.derive(static_cast<std::uint64_t>(r));
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (const auto& [a, b] : pairs) {
            if (rng.next_u64() & 1) {
                adj[static_cast<std::size_t>(a)] ^= std::uint32_t{1} << b;
                adj[static_cast<std::size_t>(b)] ^= std::uint32_t{1} << a;
            }
        }
        std::uint64_t cur = graph_purity_weight_sum(n, adj);
        std::uint64_t best = cur;
        std::vector<std::uint32_t> best_adj = adj;
        // Geometric cooling on the relative objective increase.
        double temperature = 0.05;
        const double decay = std::pow(1e-3, 1.0 / steps_per_restart);
        for (int step = 0; step < steps_per_restart; ++step) {
            const auto [a, b] = pairs[rng.next_u64() % ecount];
            adj[static_cast<std::size_t>(a)] ^= std::uint32_t{1} << b;
            adj[static_cast<std::size_t>(b)] ^= std::uint32_t{1} << a;
            const std::uint64_t cand = graph_purity_weight_sum(n, adj);
            const double rel = (static_cast<double>(cand) - static_cast<double>(cur)) /
                               static_cast<double>(cur);
            if (cand <= cur || std::exp(-rel / temperature) > rng.next_unit()) {
                cur = cand;
                if (cur < best || (cur == best && adj < best_adj)) {
                    best = cur;
                    best_adj = adj;
                }
            } else {
                adj[static_cast<std::size_t>(a)] ^= std::uint32_t{1} << b;
                adj[static_cast<std::size_t>(b)] ^= std::uint32_t{1} << a;
            }
            temperature *= decay;
        }
        run_sum[static_cast<std::size_t>(r)] = best;
        run_adj[static_cast<std::size_t>(r)] = std::move(best_adj);
    }

    std::size_t win = 0;
    for (std::size_t r = 1; r < run_sum.size(); ++r) {
        if (run_sum[r] < run_sum[win] || (run_sum[r] == run_sum[win] && run_adj[r] < run_adj[win])) {
            win = r;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : pairs) {
        if ((run_adj[win][static_cast<std::size_t>(a)] >> b) & 1) edges.emplace_back(a, b);
    }
    return SearchResult{ce_from_weight_sum(n, run_sum[win]), Graph(n, std::move(edges)),
                        static_cast<std::uint64_t>(restarts) *
                            (static_cast<std::uint64_t>(steps_per_restart) + 1)};
}

ExtremalReport extremal_report(const WeightEnumerator& e) {
    std::int64_t total = 0;
    for (const std::int64_t c : e.counts) total += c;
    if (e.counts[0] != 1 || total != (std::int64_t{1} << e.n)) {
        throw std::invalid_argument("extremal_report: distribution is not a full-rank group");
    }
    ExtremalReport rep;
    rep.distance = 0;
    rep.type2 = true;
    for (int i = 1; i <= e.n; ++i) {
        if (e.counts[static_cast<std::size_t>(i)] > 0) {
            if (rep.distance == 0) rep.distance = i;
            if (i % 2 == 1) rep.type2 = false;
        }
    }
    if (rep.distance == 0) {
        throw std::invalid_argument("extremal_report: trivial group has no distance");
    }
    const int base = 2 * (e.n / 6);
    if (rep.type2) {
        rep.distance_bound = base + 2;
    } else if (e.n % 6 == 0) {
        rep.distance_bound = base + 1;
    } else if (e.n % 6 == 5) {
        rep.distance_bound = base + 3;
    } else {
        rep.distance_bound = base + 2;
    }
    rep.extremal = rep.distance == rep.distance_bound;
    return rep;
}

}  // namespace centangle
