#pragma once

#include <vector>

#include "para_racah/exact.hpp"
#include "para_racah/parameters.hpp"
#include "para_racah/recurrence.hpp"

namespace pararacah {

// D(x) = (a+ix)(-a-j+ix)(c+ix)(e+ix) / ((2ix)(2ix+1)) with e = -c-j for odd N
// and e = 1-c-j for even N. Poles at 2ix = 0 and 2ix = -1.
Gaussian d_of_x(const ParamSet& params, const Gaussian& x);

// Residual of the difference equation at real rational x:
//   Dbar(x) P_n((x+i)^2) - (Dbar(x)+D(x)) P_n(x^2) + D(x) P_n((x-i)^2) + n(N-n) P_n(x^2).
// Exactly zero for every admissible x; all P_n values go through the
// recurrence path with Gaussian-rational arguments.
Gaussian difference_residual(const ParamSet& params, const RecurrenceTable& table, int n,
                             const Rational& x);

// Residuals for all degrees n = 0..N at once (three recurrence passes total).
std::vector<Gaussian> difference_residuals(const ParamSet& params, const RecurrenceTable& table,
                                           const Rational& x);

} // namespace pararacah
