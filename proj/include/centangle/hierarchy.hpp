#pragma once

#include <map>
#include <string>
#include <vector>

#include "centangle/rational.hpp"

namespace centangle {

// Multiset of subsystem sizes [b_1 >= b_2 >= ... >= b_m], sum = n, describing
// states that factor into independent blocks of those sizes.
struct ProductStructure {
    std::vector<int> blocks;

    explicit ProductStructure(std::vector<int> sizes);

    int n() const;
    std::string render() const;  // "3x2x1"

    bool operator==(const ProductStructure&) const = default;
};

// All partitions of n in canonical order: non-increasing parts, enumerated in
// descending lexicographic order ([n] first, [1,...,1] last).
std::vector<ProductStructure> integer_partitions(int n);

// True when every block of `fine` can be merged into blocks of `coarse`.
bool refines(const ProductStructure& fine, const ProductStructure& coarse);

struct CmaxEntry {
    Rational value;
    bool achievable = false;  // known to be attained by some state
};

// Maximal-CE upper bounds per qubit count, from the purity-moment LP.
struct CmaxTable {
    std::map<int, CmaxEntry> entries;

    const CmaxEntry& at(int n) const;
    int max_n() const { return entries.empty() ? 0 : entries.rbegin()->first; }
};

CmaxTable build_cmax_table(int max_n);

// Largest CE any state with this product structure can reach:
// 1 - prod_i (1 - cmax(b_i)).
Rational structure_bound(const ProductStructure& s, const CmaxTable& table);

// zeta(n): the same bound maximized over all two-block structures. CE above
// this value certifies genuine multipartite entanglement.
Rational gme_threshold(int n, const CmaxTable& table);

struct HierarchyRow {
    ProductStructure structure;
    Rational zeta_star;
    // False when some block size has no state known to attain cmax, so the
    // row's bound may not be tight.
    bool tight = true;
};

// Every product structure of n qubits with its bound, sorted by decreasing
// bound; ties order the lexicographically larger structure first.
struct HierarchyTable {
    int n = 0;
    std::vector<HierarchyRow> rows;
};

HierarchyTable build_hierarchy(int n, const CmaxTable& table);

struct CertificationReport {
    int n = 0;
    double ce = 0.0;
    Rational threshold;       // gme_threshold(n)
    bool gme_certified = false;
    std::vector<HierarchyRow> excluded;   // rows with zeta_star < ce
    std::vector<HierarchyRow> surviving;  // everything else (boundary survives)
};

CertificationReport certify(double ce, int n, const HierarchyTable& table);

// Mixed-state exclusion of the bipartition (k, n-k): separability across the
// cut is ruled out when ce exceeds the pure two-block bound plus the
// mixedness allowance 2 sqrt(1 - purity). At purity 1 this is exactly the
// pure-state cut test.
bool certify_mixed(double ce, double purity, int n, int k, const CmaxTable& table);

// CE ceiling for states of tensor-product CP rank at most R:
// 1 - 2^-n sum_k C(n,k) max(1/R, 2^-min(k, n-k)).
Rational cp_rank_ce_bound_exact(int n, int R);
double cp_rank_ce_bound(int n, int R);

// Exact-rational twin of ce_upper_bound_ame.
Rational ame_bound_exact(int n);

struct GeometricMeasureBound {
    double eg_lower = 0.0;          // geometric measure >= ce^2 / 2
    double lambda_max_upper = 0.0;  // largest product overlap <= sqrt(1 - ce^2/2)
};

GeometricMeasureBound geometric_measure_lower_bound(double ce);

// Chebyshev bound on the Haar probability of falling at or below zeta(n):
// Var[C] / (E[C] - zeta(n))^2. Requires E[C] > zeta(n).
Rational haar_tail_bound_exact(int n, const CmaxTable& table);
double haar_tail_bound(int n, const CmaxTable& table);

}  // namespace centangle
