#pragma once

#include <vector>

#include "para_racah/exact.hpp"
#include "para_racah/parameters.hpp"

namespace pararacah {

// Truncated-limit series coefficients A_{n,k}, k = 0..n. The k <= j branch is
// the plain Wilson limit; the k > j branch (reachable only for n > j) carries
// an explicit 1/alpha and therefore requires alpha > 0.
std::vector<Rational> limit_coefficients(const ParamSet& params, int n);

// Normalization eta_n making the series monic; eta_0 = 1.
Rational eta(const ParamSet& params, int n);

// P_n(lambda) = eta_n * sum_k A_{n,k} Phi_k(lambda): the hypergeometric
// evaluation path, independent of the recurrence.
Rational eval_explicit(const ParamSet& params, int n, const Rational& lambda);

// Characteristic polynomial as the bi-lattice product
//   prod_s ((a+s)^2 + lambda) * prod_s ((c+s)^2 + lambda),
// with the c-range s = 0..j for odd N and s = 0..j-1 for even N.
Rational char_poly_explicit(const ParamSet& params, const Rational& lambda);

} // namespace pararacah
