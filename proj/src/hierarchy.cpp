#include "centangle/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "centangle/haar.hpp"
#include "centangle/lp.hpp"

namespace centangle {

namespace {

// Qubit counts whose cmax bound is known to be attained by explicit states
// (graph-state witnesses or closed-form constructions).
bool cmax_known_achievable(int n) {
    if (n < 1 || n > 18) return false;
    return n != 7 && n != 13 && n != 15 && n != 16;
}

bool structure_lex_greater(const ProductStructure& a, const ProductStructure& b) {
    return std::lexicographical_compare(b.blocks.begin(), b.blocks.end(),
                                        a.blocks.begin(), a.blocks.end());
}

}  // namespace

ProductStructure::ProductStructure(std::vector<int> sizes) : blocks(std::move(sizes)) {
    if (blocks.empty()) throw std::invalid_argument("ProductStructure: no blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i] < 1) throw std::invalid_argument("ProductStructure: block size must be >= 1");
        if (i > 0 && blocks[i] > blocks[i - 1]) {
            throw std::invalid_argument("ProductStructure: blocks must be non-increasing");
        }
    }
}

int ProductStructure::n() const {
    int s = 0;
    for (const int b : blocks) s += b;
    return s;
}

std::string ProductStructure::render() const {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) out += 'x';
        out += std::to_string(blocks[i]);
    }
    return out;
}

std::vector<ProductStructure> integer_partitions(int n) {
    if (n < 1) throw std::invalid_argument("integer_partitions: need n >= 1");
    std::vector<ProductStructure> out;
    std::vector<int> current;
    const std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool refines(const ProductStructure& fine, const ProductStructure& coarse) {
    if (fine.n() != coarse.n()) return false;
    // Backtracking multiset match: assign fine blocks to coarse blocks so the
    // pieces of each coarse block sum to its size.
    std::vector<int> remaining(coarse.blocks.begin(), coarse.blocks.end());
    const std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == fine.blocks.size()) return true;
        for (std::size_t t = 0; t < remaining.size(); ++t) {
            if (remaining[t] < fine.blocks[i]) continue;
            if (t > 0 && remaining[t] == remaining[t - 1]) continue;  // symmetric choice
            remaining[t] -= fine.blocks[i];
            if (place(i + 1)) {
                remaining[t] += fine.blocks[i];
                return true;
            }
            remaining[t] += fine.blocks[i];
        }
        return false;
    };
    return place(0);
}

const CmaxEntry& CmaxTable::at(int n) const {
    const auto it = entries.find(n);
    if (it == entries.end()) {
        throw std::out_of_range("CmaxTable: no entry for n = " + std::to_string(n));
    }
    return it->second;
}

CmaxTable build_cmax_table(int max_n) {
    if (max_n < 1) throw std::invalid_argument("build_cmax_table: need max_n >= 1");
    CmaxTable t;
    for (int n = 1; n <= max_n; ++n) {
        t.entries[n] = CmaxEntry{cmax_upper_bound(n), cmax_known_achievable(n)};
    }
    return t;
}

Rational structure_bound(const ProductStructure& s, const CmaxTable& table) {
    Rational miss = 1;
    for (const int b : s.blocks) miss *= 1 - table.at(b).value;
    return 1 - miss;
}

Rational gme_threshold(int n, const CmaxTable& table) {
    if (n < 2) throw std::invalid_argument("gme_threshold: need n >= 2");
    Rational best = 0;
    for (int k = 1; 2 * k <= n; ++k) {
        const ProductStructure cut({n - k, k});
        best = std::max(best, structure_bound(cut, table));
    }
    return best;
}

HierarchyTable build_hierarchy(int n, const CmaxTable& table) {
    HierarchyTable t;
    t.n = n;
    for (const ProductStructure& s : integer_partitions(n)) {
        HierarchyRow row{s, structure_bound(s, table), true};
        for (const int b : s.blocks) row.tight = row.tight && table.at(b).achievable;
        t.rows.push_back(std::move(row));
    }
    std::stable_sort(t.rows.begin(), t.rows.end(), [](const HierarchyRow& a, const HierarchyRow& b) {
        if (a.zeta_star != b.zeta_star) return a.zeta_star > b.zeta_star;
        return structure_lex_greater(a.structure, b.structure);
    });
    return t;
}

CertificationReport certify(double ce, int n, const HierarchyTable& table) {
    if (table.n != n) throw std::invalid_argument("certify: table was built for a different n");
    if (ce < 0.0 || ce > 1.0) throw std::invalid_argument("certify: CE outside [0,1]");
    CertificationReport rep;
    rep.n = n;
    rep.ce = ce;
    const Rational ce_rat(ce);  // doubles convert exactly, no decimal round-trip
    for (const HierarchyRow& row : table.rows) {
        // Strict inequality: a bound exactly at the measured value survives.
        if (row.zeta_star < ce_rat) {
            rep.excluded.push_back(row);
        } else {
            rep.surviving.push_back(row);
        }
    }
    Rational thr = 0;
    for (const HierarchyRow& row : table.rows) {
        if (row.structure.blocks.size() == 2) thr = std::max(thr, row.zeta_star);
    }
    rep.threshold = thr;
    rep.gme_certified = ce_rat > thr;
    return rep;
}

bool certify_mixed(double ce, double purity, int n, int k, const CmaxTable& table) {
    if (purity <= 0.0 || purity > 1.0 + 1e-12) {
        throw std::invalid_argument("certify_mixed: purity outside (0,1]");
    }
    if (k < 1 || k >= n) throw std::invalid_argument("certify_mixed: cut size outside 1..n-1");
    const ProductStructure cut({std::max(k, n - k), std::min(k, n - k)});
    const double pure_bound = to_double(structure_bound(cut, table));
    const double allowance = 2.0 * std::sqrt(std::max(0.0, 1.0 - purity));
    return ce > pure_bound + allowance;
}

Rational cp_rank_ce_bound_exact(int n, int R) {
    if (n < 1 || R < 1) throw std::invalid_argument("cp_rank_ce_bound: need n >= 1, R >= 1");
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
        const Rational rank_term(1, R);
        const Rational marginal_term(1, ipow(2, std::min(k, n - k)));
        sum += Rational(binomial(n, k)) * std::max(rank_term, marginal_term);
    }
    return 1 - sum / Rational(ipow(2, n));
}

double cp_rank_ce_bound(int n, int R) { return to_double(cp_rank_ce_bound_exact(n, R)); }

Rational ame_bound_exact(int n) {
    if (n < 1) throw std::invalid_argument("ame_bound_exact: need n >= 1");
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
        sum += Rational(binomial(n, k), ipow(2, std::min(k, n - k)));
    }
    return 1 - sum / Rational(ipow(2, n));
}

GeometricMeasureBound geometric_measure_lower_bound(double ce) {
    if (ce < 0.0 || ce > 1.0) throw std::invalid_argument("geometric_measure_lower_bound: CE outside [0,1]");
    GeometricMeasureBound b;
    b.eg_lower = 0.5 * ce * ce;
    b.lambda_max_upper = std::sqrt(1.0 - 0.5 * ce * ce);
    return b;
}

Rational haar_tail_bound_exact(int n, const CmaxTable& table) {
    const auto [mean, var] = haar_moments_exact(n);
    const Rational zeta = gme_threshold(n, table);
    if (mean <= zeta) {
        throw std::domain_error("haar_tail_bound: Haar mean does not exceed the GME threshold");
    }
    const Rational gap = mean - zeta;
    return var / (gap * gap);
}

double haar_tail_bound(int n, const CmaxTable& table) {
    return to_double(haar_tail_bound_exact(n, table));
}

}  // namespace centangle
