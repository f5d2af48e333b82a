#include "centangle/lp.hpp"

#include <stdexcept>
#include <string>

namespace centangle {

namespace {

// Textbook primal simplex with Bland's rule on exact rationals:
//   max c.x  subject to  A x <= b, x >= 0,  with b >= 0
// so the slack basis is feasible from the start. Problems here are tiny
// (tens of rows), so no effort is spent on sparsity or scaling.
struct SimplexResult {
    LPStatus status = LPStatus::Optimal;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> dual;  // one multiplier per row, from the slack reduced costs
};

SimplexResult simplex_max(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    for (const Rational& bi : b) {
        if (bi < 0) throw std::logic_error("simplex_max: slack basis is not feasible");
    }

    const std::size_t rhs = nv + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(nv + m + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nv; ++j) t[i][j] = A[i][j];
        t[i][nv + i] = 1;
        t[i][rhs] = b[i];
        basis[i] = nv + i;
    }
    std::vector<Rational> red(nv + m);
    for (std::size_t j = 0; j < nv; ++j) red[j] = c[j];
    Rational value = 0;

    for (;;) {
        std::size_t enter = rhs;
        for (std::size_t j = 0; j < nv + m; ++j) {
            if (red[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == rhs) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return {LPStatus::Unbounded, 0, {}};

        const Rational pivot = t[leave][enter];
        for (Rational& v : t[leave]) v /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= rhs; ++j) t[i][j] -= f * t[leave][j];
        }
        const Rational rf = red[enter];
        value += rf * t[leave][rhs];
        for (std::size_t j = 0; j < nv + m; ++j) red[j] -= rf * t[leave][j];
        basis[leave] = enter;
    }

    SimplexResult res;
    res.value = value;
    res.x.assign(nv, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nv) res.x[basis[i]] = t[i][rhs];
    }
    res.dual.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) res.dual[i] = -red[nv + i];
    return res;
}

// Exact optimality proof, independent of how the tableau got here. For
//   max c.x  s.t.  A x <= b, x >= 0
// a vector mu certifies x optimal when mu >= 0, A^T mu >= c, and
// b.mu = c.x: weak duality then pins the objective from both sides.
void certify_optimal(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                     const std::vector<Rational>& c, const SimplexResult& s) {
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    if (s.x.size() != nv || s.dual.size() != m) {
        throw std::logic_error("optimality certificate: wrong solution dimensions");
    }
    Rational primal = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        if (s.x[j] < 0) throw std::logic_error("optimality certificate: negative primal variable");
        primal += c[j] * s.x[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < nv; ++j) row += A[i][j] * s.x[j];
        if (row > b[i]) throw std::logic_error("optimality certificate: primal constraint violated");
        if (s.dual[i] < 0) throw std::logic_error("optimality certificate: negative multiplier");
    }
    Rational dual_obj = 0;
    for (std::size_t i = 0; i < m; ++i) dual_obj += b[i] * s.dual[i];
    for (std::size_t j = 0; j < nv; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < m; ++i) col += A[i][j] * s.dual[i];
        if (col < c[j]) throw std::logic_error("optimality certificate: dual constraint violated");
    }
    if (primal != s.value || dual_obj != s.value) {
        throw std::logic_error("optimality certificate: duality gap is nonzero");
    }
}

// Shared feasible region of both purity-moment LPs, in the substituted
// variables u_j = y_{2j}, j = 1..J, after eliminating y_0 through the
// normalization sum_j 3^(n-2j) y_j = 1:
//   sum_j 3^(n-2j) u_j <= 1                            (y_0 >= 0)
//   sum_j (K_l(0) 3^(-2j) - K_l(2j)) u_j <= K_l(0) 3^-n  (row l of K y >= 0)
struct FeasibleRegion {
    int n = 0;
    int J = 0;
    KrawtchoukMatrix K;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
};

FeasibleRegion build_region(int n) {
    if (n < 2) throw std::invalid_argument("purity-moment LP needs n >= 2");
    FeasibleRegion r;
    r.n = n;
    r.J = n / 2;
    r.K = krawtchouk(n);
    const Rational three_to_minus_n(1, ipow(3, n));
    for (int l = 0; l <= n; ++l) {
        std::vector<Rational> row(static_cast<std::size_t>(r.J));
        for (int j = 1; j <= r.J; ++j) {
            row[static_cast<std::size_t>(j - 1)] =
                Rational(r.K(l, 0), ipow(3, 2 * j)) - Rational(r.K(l, 2 * j));
        }
        r.A.push_back(std::move(row));
        r.b.push_back(Rational(r.K(l, 0)) * three_to_minus_n);
    }
    std::vector<Rational> y0_row(static_cast<std::size_t>(r.J));
    for (int j = 1; j <= r.J; ++j) {
        y0_row[static_cast<std::size_t>(j - 1)] = Rational(ipow(3, n - 2 * j));
    }
    r.A.push_back(std::move(y0_row));
    r.b.push_back(1);
    return r;
}

// Reassembles y from the substituted solution and re-checks every original
// constraint exactly; a violation can only mean a solver bug.
std::vector<Rational> recover_and_verify(const FeasibleRegion& r, const std::vector<Rational>& u) {
    std::vector<Rational> y(static_cast<std::size_t>(r.J) + 1);
    Rational used = 0;
    for (int j = 1; j <= r.J; ++j) {
        y[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j - 1)];
        used += Rational(ipow(3, r.n - 2 * j)) * u[static_cast<std::size_t>(j - 1)];
    }
    y[0] = (1 - used) / Rational(ipow(3, r.n));
    Rational norm = 0;
    for (int j = 0; j <= r.J; ++j) {
        if (y[static_cast<std::size_t>(j)] < 0) throw std::logic_error("LP solution has negative component");
        norm += Rational(ipow(3, r.n - 2 * j)) * y[static_cast<std::size_t>(j)];
    }
    if (norm != 1) throw std::logic_error("LP solution violates the normalization constraint");
    for (int l = 0; l <= r.n; ++l) {
        Rational s = 0;
        for (int j = 0; j <= r.J; ++j) {
            s += Rational(r.K(l, 2 * j)) * y[static_cast<std::size_t>(j)];
        }
        if (s < 0) throw std::logic_error("LP solution violates a Krawtchouk constraint");
    }
    return y;
}

bool any_odd_weight(const Enumerators& e) {
    for (int i = 1; i <= e.n; i += 2) {
        if (e.A[static_cast<std::size_t>(i)] != 0) return true;
    }
    return false;
}

// C = sum_{w even} K_n(w) A_w = sum_{w even} 3^(n-w) A_w.
Rational even_moment_sum(const Enumerators& e) {
    Rational c = 0;
    for (int w = 0; w <= e.n; w += 2) {
        c += Rational(ipow(3, e.n - w)) * e.A[static_cast<std::size_t>(w)];
    }
    return c;
}

}  // namespace

BigInt krawtchouk_value(int n, int d, int x) {
    if (n < 0 || d < 0 || d > n || x < 0 || x > n) {
        throw std::out_of_range("krawtchouk_value: indices outside 0..n");
    }
    BigInt sum = 0;
    for (int k = 0; k <= std::min(d, x); ++k) {
        const BigInt term = binomial(x, k) * binomial(n - x, d - k) * ipow(3, d - k);
        sum += (k & 1) ? -term : term;
    }
    return sum;
}

KrawtchoukMatrix krawtchouk(int n) {
    if (n < 1) throw std::invalid_argument("krawtchouk: need n >= 1");
    KrawtchoukMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) + 1,
                     std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    for (int d = 0; d <= n; ++d) {
        for (int x = 0; x <= n; ++x) {
            m.entries[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)] =
                krawtchouk_value(n, d, x);
        }
    }
    return m;
}

LPSolution solve_cmax_lp(int n) {
    const FeasibleRegion r = build_region(n);
    std::vector<Rational> c(static_cast<std::size_t>(r.J));
    for (int j = 1; j <= r.J; ++j) {
        c[static_cast<std::size_t>(j - 1)] = Rational(ipow(3, n - 2 * j));
    }
    const SimplexResult s = simplex_max(r.A, r.b, c);
    if (s.status != LPStatus::Optimal) throw std::logic_error("cmax LP failed to reach an optimum");
    certify_optimal(r.A, r.b, c, s);

    LPSolution sol;
    sol.n = n;
    sol.status = s.status;
    sol.optimal_value = 1 - s.value;  // = min 3^n y_0
    sol.y = recover_and_verify(r, s.x);
    sol.dual = s.dual;
    if (Rational(ipow(3, n)) * sol.y[0] != sol.optimal_value) {
        throw std::logic_error("cmax LP objective does not match the recovered solution");
    }
    return sol;
}

Rational cmax_upper_bound(int n) {
    if (n < 1) throw std::invalid_argument("cmax_upper_bound: need n >= 1");
    if (n == 1) return 0;
    return 1 - solve_cmax_lp(n).optimal_value;
}

LPSolution solve_bell_lp(int n) {
    const FeasibleRegion r = build_region(n);
    std::vector<Rational> c(static_cast<std::size_t>(r.J));
    for (int j = 1; j <= r.J; ++j) {
        c[static_cast<std::size_t>(j - 1)] = Rational(2 * j) * Rational(ipow(3, n - 2 * j));
    }
    const SimplexResult s = simplex_max(r.A, r.b, c);
    if (s.status != LPStatus::Optimal) throw std::logic_error("Bell LP failed to reach an optimum");
    certify_optimal(r.A, r.b, c, s);
    if (s.value != Rational(n, 4)) {
        throw std::logic_error("Bell LP optimum differs from n/4");
    }
    // Dual certificate: with multiplier nu = n/4 on the normalization row and
    // lambda = 3/4 on Krawtchouk row n-1 (all other rows zero),
    //   nu 3^(n-w) = w 3^(n-w) + (3/4) K_{n-1}(w)   for every even w,
    // which caps the objective at nu for every feasible y.
    for (int j = 0; j <= r.J; ++j) {
        const Rational lhs = Rational(n, 4) * Rational(ipow(3, n - 2 * j));
        const Rational rhs = Rational(2 * j) * Rational(ipow(3, n - 2 * j)) +
                             Rational(3, 4) * Rational(r.K(n - 1, 2 * j));
        if (lhs != rhs) throw std::logic_error("Bell LP dual certificate identity failed");
    }

    LPSolution sol;
    sol.n = n;
    sol.status = s.status;
    sol.optimal_value = s.value;
    sol.y = recover_and_verify(r, s.x);
    sol.dual = s.dual;
    return sol;
}

std::vector<Rational> macwilliams(const std::vector<Rational>& A, int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("macwilliams: bad parameters");
    if (A.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("macwilliams: weight distribution must have n+1 entries");
    }
    const KrawtchoukMatrix K = krawtchouk(n);
    const Rational scale(1, ipow(2, n - k));
    std::vector<Rational> B(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational s = 0;
        for (int j = 0; j <= n; ++j) s += Rational(K(i, j)) * A[static_cast<std::size_t>(j)];
        B[static_cast<std::size_t>(i)] = scale * s;
    }
    return B;
}

Enumerators make_enumerators(int n, int k, std::vector<Rational> A) {
    Enumerators e;
    e.n = n;
    e.k = k;
    e.A = std::move(A);
    if (e.A.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("make_enumerators: weight distribution must have n+1 entries");
    }
    if (e.A[0] != 1) throw std::invalid_argument("make_enumerators: A_0 must be 1");
    Rational sum = 0;
    for (const Rational& a : e.A) {
        if (a < 0) throw std::invalid_argument("make_enumerators: negative weight count");
        sum += a;
    }
    if (sum != Rational(ipow(2, n - k))) {
        throw std::invalid_argument("make_enumerators: weights must sum to 2^(n-k)");
    }
    e.B = macwilliams(e.A, n, k);
    for (const Rational& b : e.B) {
        if (b < 0) throw std::invalid_argument("make_enumerators: dual distribution is negative");
    }
    return e;
}

CodingBoundResult coding_bound_bn(const Enumerators& e, const Rational& L) {
    if (L <= 0) throw std::invalid_argument("coding_bound_bn: L must be positive");
    CodingBoundResult r;
    r.used_general_form = any_odd_weight(e);
    if (r.used_general_form) {
        r.lhs = even_moment_sum(e);
        r.rhs = Rational(ipow(3, e.n)) / L;
    } else {
        r.lhs = e.B[static_cast<std::size_t>(e.n)];
        r.rhs = Rational(ipow(3, e.n), ipow(2, e.n - e.k)) / L;
    }
    r.holds = r.lhs <= r.rhs;
    return r;
}

CodingBoundResult coding_bound_moment(const Enumerators& e) {
    CodingBoundResult r;
    r.used_general_form = any_odd_weight(e);
    Rational lhs = 0;
    for (int w = 0; w <= e.n; w += 2) {
        lhs += Rational(w, 1) * Rational(1, ipow(3, w)) * e.A[static_cast<std::size_t>(w)];
    }
    r.lhs = lhs;
    const Rational quarter_n(e.n, 4);
    if (r.used_general_form) {
        r.rhs = quarter_n * even_moment_sum(e) / Rational(ipow(3, e.n));
    } else {
        r.rhs = quarter_n * Rational(ipow(2, e.n - e.k)) * e.B[static_cast<std::size_t>(e.n)] /
                Rational(ipow(3, e.n));
    }
    r.holds = r.lhs <= r.rhs;
    return r;
}

}  // namespace centangle
