#pragma once

#include <vector>

#include "centangle/rational.hpp"

namespace centangle {

// Quaternary Krawtchouk value of degree d at integer argument x:
//   K_d(x) = sum_k C(x,k) C(n-x,d-k) (-1)^k 3^(d-k).
BigInt krawtchouk_value(int n, int d, int x);

// entries[d][x] = K_d(x), for d, x in 0..n.
struct KrawtchoukMatrix {
    int n = 0;
    std::vector<std::vector<BigInt>> entries;

    const BigInt& operator()(int d, int x) const {
        return entries.at(static_cast<std::size_t>(d)).at(static_cast<std::size_t>(x));
    }
};

KrawtchoukMatrix krawtchouk(int n);

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Solution of one of the purity-moment linear programs below. The variables
// y_w, indexed by even weight w = 0, 2, ..., 2*floor(n/2), are rescaled
// purity moments; the feasible set is
//   y >= 0,  sum_w 3^(n-w) y_w = 1,  sum_w K_l(w) y_w >= 0 for l = 0..n.
struct LPSolution {
    int n = 0;
    LPStatus status = LPStatus::Optimal;
    Rational optimal_value;        // optimum of the objective stated per solver
    std::vector<Rational> y;       // y[j] = y_{2j}
    // Multipliers on the solver-form rows (Krawtchouk rows l = 0..n, then the
    // normalization row). Every solve checks them exactly: dual >= 0, the
    // reduced cost of each variable is nonpositive, and the dual objective
    // equals the primal one, so a returned optimum is never just "the simplex
    // stopped" but carries a machine-verified proof of optimality.
    std::vector<Rational> dual;
};

// Minimizes 3^n y_0 over the feasible set. 1 - optimal_value is the maximal
// concentratable entanglement any n-qubit state can attain.
LPSolution solve_cmax_lp(int n);

// The bound itself; n = 1 has no entangling structure and yields 0.
Rational cmax_upper_bound(int n);

// Maximizes sum_w w 3^(n-w) y_w over the same feasible set. The optimum is
// n/4 exactly; the solver verifies this against an explicit dual certificate
// and throws std::logic_error on any mismatch.
LPSolution solve_bell_lp(int n);

// Dual transform of a weight distribution A under the quaternary MacWilliams
// identity: B_i = 2^(k-n) sum_j K_i(j) A_j.
std::vector<Rational> macwilliams(const std::vector<Rational>& A, int n, int k);

// Weight distribution of a 2^(n-k)-element Pauli group and its dual.
struct Enumerators {
    int n = 0;
    int k = 0;
    std::vector<Rational> A;
    std::vector<Rational> B;
};

Enumerators make_enumerators(int n, int k, std::vector<Rational> A);

struct CodingBoundResult {
    Rational lhs;
    Rational rhs;
    bool holds = false;
    bool used_general_form = false;  // set when some odd A_i is nonzero
};

// Purity-moment bound on the dual distribution, L = min 3^n y_0 from
// solve_cmax_lp: B_n <= (1/L) 3^n / 2^(n-k). When odd-weight terms are
// present the same argument bounds C = sum_{w even} K_n(w) A_w <= 3^n / L.
CodingBoundResult coding_bound_bn(const Enumerators& e, const Rational& L);

// First-moment bound over even weights: sum_{i even} i 3^-i A_i is at most
// (n/4) (2^(n-k)/3^n) B_n, or (n/4) C / 3^n when odd-weight terms are
// present. Odd weights stay out of the left side in both forms; they carry
// no even-overlap statistics.
CodingBoundResult coding_bound_moment(const Enumerators& e);

}  // namespace centangle
