#include "centangle/purity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace centangle {

namespace {

void check_sweep_cap(int n, int max_n, const char* what) {
    if (n > max_n) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                    " qubits exceeds the cap of " + std::to_string(max_n));
    }
}

// Index tables mapping the subset's local row/column spaces back into the
// global amplitude index: global = row_idx[r] | col_idx[c].
struct SubsetIndexing {
    std::vector<std::uint32_t> row_idx;
    std::vector<std::uint32_t> col_idx;
};

SubsetIndexing subset_indexing(int n, SubsetMask alpha) {
    const SubsetMask comp = ~alpha & ((std::uint32_t{1} << n) - 1);
    SubsetIndexing ix;
    ix.row_idx.resize(std::size_t{1} << popcount(alpha));
    ix.col_idx.resize(std::size_t{1} << popcount(comp));
    for (std::uint32_t r = 0; r < ix.row_idx.size(); ++r) ix.row_idx[r] = deposit_bits(r, alpha);
    for (std::uint32_t c = 0; c < ix.col_idx.size(); ++c) ix.col_idx[c] = deposit_bits(c, comp);
    return ix;
}

// Tr[rho_alpha^2] for a pure state: rho_alpha = M M^dagger with M the
// amplitude matrix (rows = alpha bits, columns = complement bits). Entries of
// rho_alpha are accumulated in a fixed order and never materialized.
double pure_subset_purity(const PureState& psi, SubsetMask alpha) {
    const SubsetIndexing ix = subset_indexing(psi.n, alpha);
    double total = 0.0;
    for (std::size_t r = 0; r < ix.row_idx.size(); ++r) {
        for (std::size_t r2 = 0; r2 <= r; ++r2) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < ix.col_idx.size(); ++c) {
                acc += psi.amps[ix.row_idx[r] | ix.col_idx[c]] *
                       std::conj(psi.amps[ix.row_idx[r2] | ix.col_idx[c]]);
            }
            total += (r == r2) ? std::norm(acc) : 2.0 * std::norm(acc);
        }
    }
    return total;
}

double mixed_subset_purity(const DensityMatrix& rho, SubsetMask alpha) {
    const SubsetIndexing ix = subset_indexing(rho.n, alpha);
    double total = 0.0;
    for (std::size_t r = 0; r < ix.row_idx.size(); ++r) {
        for (std::size_t r2 = 0; r2 <= r; ++r2) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < ix.col_idx.size(); ++c) {
                acc += rho.mat(ix.row_idx[r] | ix.col_idx[c], ix.row_idx[r2] | ix.col_idx[c]);
            }
            total += (r == r2) ? std::norm(acc) : 2.0 * std::norm(acc);
        }
    }
    return total;
}

// For pure input only one representative of each {alpha, complement} pair is
// computed; the partner is copied. Representative: the smaller popcount, with
// the smaller mask breaking ties.
bool is_pure_representative(SubsetMask alpha, SubsetMask full) {
    const SubsetMask comp = ~alpha & full;
    const int ka = popcount(alpha), kc = popcount(comp);
    return ka < kc || (ka == kc && alpha <= comp);
}

void fill_pure_complements(PurityVector& pv, SubsetMask full) {
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (!is_pure_representative(m, full)) pv.vals[m] = pv.vals[~m & full];
    }
}

PurityVector pure_sweep_parallel(const PureState& psi) {
    const auto full = static_cast<SubsetMask>((std::uint32_t{1} << psi.n) - 1);
    PurityVector pv{psi.n, std::vector<double>(std::size_t{1} << psi.n, 0.0)};
    const std::int64_t count = static_cast<std::int64_t>(pv.vals.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t m = 0; m < count; ++m) {
        const auto alpha = static_cast<SubsetMask>(m);
        if (is_pure_representative(alpha, full)) pv.vals[m] = pure_subset_purity(psi, alpha);
    }
    fill_pure_complements(pv, full);
    return pv;
}

PurityVector pure_sweep_serial(const PureState& psi) {
    const auto full = static_cast<SubsetMask>((std::uint32_t{1} << psi.n) - 1);
    PurityVector pv{psi.n, std::vector<double>(std::size_t{1} << psi.n, 0.0)};
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (is_pure_representative(m, full)) pv.vals[m] = pure_subset_purity(psi, m);
    }
    fill_pure_complements(pv, full);
    return pv;
}

PurityVector mixed_sweep_parallel(const DensityMatrix& rho) {
    PurityVector pv{rho.n, std::vector<double>(std::size_t{1} << rho.n, 0.0)};
    const std::int64_t count = static_cast<std::int64_t>(pv.vals.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t m = 0; m < count; ++m) {
        pv.vals[m] = mixed_subset_purity(rho, static_cast<SubsetMask>(m));
    }
    return pv;
}

PurityVector mixed_sweep_serial(const DensityMatrix& rho) {
    PurityVector pv{rho.n, std::vector<double>(std::size_t{1} << rho.n, 0.0)};
    for (std::size_t m = 0; m < pv.vals.size(); ++m) {
        pv.vals[m] = mixed_subset_purity(rho, static_cast<SubsetMask>(m));
    }
    return pv;
}

}  // namespace

double purity(const PureState& psi, SubsetMask alpha) {
    if (alpha >= (std::uint32_t{1} << psi.n)) throw std::out_of_range("subset mask out of range");
    if (alpha == 0) return 1.0;
    return pure_subset_purity(psi, alpha);
}

double purity(const DensityMatrix& rho, SubsetMask alpha) {
    if (alpha >= (std::uint32_t{1} << rho.n)) throw std::out_of_range("subset mask out of range");
    return mixed_subset_purity(rho, alpha);
}

PurityVector purity_vector(const PureState& psi, int max_n) {
    check_sweep_cap(psi.n, max_n, "purity_vector");
    return pure_sweep_parallel(psi);
}

PurityVector purity_vector_serial(const PureState& psi, int max_n) {
    check_sweep_cap(psi.n, max_n, "purity_vector_serial");
    return pure_sweep_serial(psi);
}

PurityVector purity_vector(const DensityMatrix& rho, int max_n) {
    check_sweep_cap(rho.n, max_n, "purity_vector");
    return mixed_sweep_parallel(rho);
}

PurityVector purity_vector_serial(const DensityMatrix& rho, int max_n) {
    check_sweep_cap(rho.n, max_n, "purity_vector_serial");
    return mixed_sweep_serial(rho);
}

double concentratable_entanglement(const PurityVector& pv) {
    double sum = 0.0;
    for (const double p : pv.vals) sum += p;
    return 1.0 - std::ldexp(sum, -pv.n);
}

double concentratable_entanglement(const PureState& psi, int max_n) {
    return concentratable_entanglement(purity_vector(psi, max_n));
}

double concentratable_entanglement(const DensityMatrix& rho, int max_n) {
    return concentratable_entanglement(purity_vector(rho, max_n));
}

double ce_upper_bound_ame(int n) {
    if (n < 1) throw std::invalid_argument("ce_upper_bound_ame: need n >= 1");
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        double binom = 1.0;
        for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        sum += binom * std::ldexp(1.0, -std::min(k, n - k));
    }
    return 1.0 - std::ldexp(sum, -n);
}

double ce_asymptotic_bound(int n) {
    if (n < 1) throw std::invalid_argument("ce_asymptotic_bound: need n >= 1");
    return 1.0 - std::pow(0.75, n);
}

}  // namespace centangle
