#pragma once

#include <vector>

#include "para_racah/exact.hpp"
#include "para_racah/parameters.hpp"
#include "para_racah/recurrence.hpp"

namespace pararacah {

// Monic recurrence data without the u sentinels: b_0..b_N and u_1..u_N.
struct MonicTable {
    std::vector<Rational> b;
    std::vector<Rational> u;

    friend bool operator==(const MonicTable&, const MonicTable&) = default;
};

// theta -> infinity limit targets under a = (theta-Delta)/2, c = (theta+Delta)/2,
// alpha = 1/2: the para-Krawtchouk recurrence coefficients with parameter 2*Delta.
struct ParaKrawtchoukTarget {
    int n_max = 0;
    Rational delta;
    MonicTable coeffs;
};

ParaKrawtchoukTarget pk_limit_coefficients(int n, const Rational& delta);

// Limit of the scaled grid -2(x_s + a(theta)^2)/theta, in bi-lattice node
// order: 2s for the a-family, 2s + 2*Delta for the c-family.
std::vector<Rational> pk_node_targets(int n, const Rational& delta);

// The limiting weights (alpha = 1/2), parity-specific closed forms.
std::vector<Rational> pk_weights(int n, const Rational& delta);

struct PkStudyRow {
    long theta = 0;
    double coeff_b_error = 0;  // max_n |-(2 b_n + 2 a^2)/theta - limit|
    double coeff_u_error = 0;  // max_n |4 u_n / theta^2 - limit|
    double grid_error = 0;     // max_s |scaled node - target|
    double weight_error = 0;   // max_s relative deviation from the limit weight
};

struct PkStudy {
    int n_max = 0;
    Rational delta;
    std::vector<PkStudyRow> rows;
    // Least-squares slopes of log(error) against log(1/theta).
    double order_b = 0, order_u = 0, order_grid = 0, order_weights = 0;
};

// Runs theta = theta_min, 2*theta_min, ..., theta_max (powers of two).
PkStudy pk_convergence_study(int n, const Rational& delta, long theta_min, long theta_max);

// Monic dual-Hahn recurrence r_n(y; N, gamma, delta), assembled from the
// standard hypergeometric data A_n = (n+gamma+1)(n-N), C_n = n(n-delta-N-1):
// b_n = -(A_n + C_n), u_n = A_{n-1} C_n.
MonicTable dual_hahn_monic(int n, const Rational& gamma, const Rational& delta);

// Monic recurrence under the affine substitution lambda = p*y + q (p != 0):
// b -> (b - q)/p, u -> u / p^2; evaluations satisfy P_n(lambda) = p^n Q_n(y).
MonicTable affine_transform(const RecurrenceTable& table, const Rational& p, const Rational& q);

struct DualHahnReport {
    int n_max = 0;
    Rational a;
    Rational gamma; // = delta = (4a-1)/2
    MonicTable transformed;
    MonicTable reference;
    bool match = false;
    int first_mismatch = -1; // degree index of the first differing entry
};

// Fixes c = a + 1/2, alpha = 1/2, maps lambda = -y/4 - a^2 and compares the
// para-Racah recurrence against the dual-Hahn one, exactly.
DualHahnReport dual_hahn_check(int n, const Rational& a);

} // namespace pararacah
