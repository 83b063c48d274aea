#pragma once

#include <utility>
#include <vector>

#include "para_racah/exact.hpp"
#include "para_racah/parameters.hpp"

namespace pararacah {

// Monic three-term recurrence data: x^2 P_n = P_{n+1} + b_n P_n + u_n P_{n-1}.
// b has entries 0..N, u has entries 0..N+1 with the sentinels u_0 = u_{N+1} = 0.
struct RecurrenceTable {
    std::vector<Rational> b;
    std::vector<Rational> u;

    int n_max() const { return static_cast<int>(b.size()) - 1; }
};

// Truncated-limit Wilson coefficients. A_n is defined for 0 <= n <= N (with
// A_N = 0 enforcing truncation), C_n for 0 <= n <= N+1. The rows n = j
// (and n = j+1 for C, odd parity) carry the alpha deformation and are
// dispatched by index, never by evaluating the generic form there.
Rational wilson_a(const ParamSet& params, int n);
Rational wilson_c(const ParamSet& params, int n);
std::pair<Rational, Rational> wilson_ac(const ParamSet& params, int n);

// Closed-form b_n, u_n tables (the piecewise displays).
RecurrenceTable recurrence_table(const ParamSet& params);
// Same table assembled from b_n = A_n + C_n - a^2, u_n = A_{n-1} C_n. The two
// constructions must agree exactly; tests and the certifier compare them.
RecurrenceTable recurrence_table_from_wilson(const ParamSet& params);

// Monic P_n(lambda) by forward recurrence, P_{-1} = 0, P_0 = 1. n = N+1 is
// allowed and yields the characteristic polynomial.
Rational eval_poly(const RecurrenceTable& table, int n, const Rational& lambda);
Gaussian eval_poly(const RecurrenceTable& table, int n, const Gaussian& lambda);

// All of P_0(lambda) .. P_{N+1}(lambda) in one forward pass.
std::vector<Rational> eval_poly_sequence(const RecurrenceTable& table, const Rational& lambda);
std::vector<Gaussian> eval_poly_sequence(const RecurrenceTable& table, const Gaussian& lambda);

// Symmetric tridiagonal J with diag b_n and off-diagonal sqrt(u_n), in
// floating point. offdiag[i] = sqrt(u_{i+1}).
struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;

    int size() const { return static_cast<int>(diag.size()); }
};

TridiagonalMatrix jacobi_matrix(const ParamSet& params);
TridiagonalMatrix jacobi_matrix(const RecurrenceTable& table);

// All eigenvalues in increasing order by Sturm-sequence bisection inside
// Gershgorin bounds, to ~1e-12 (absolute for near-zero, relative otherwise).
std::vector<double> eigenvalues(const TridiagonalMatrix& matrix);

// Block sizes of the split Jacobi matrix at alpha in {0, 1}.
std::pair<int, int> block_split(const ParamSet& params);

} // namespace pararacah
