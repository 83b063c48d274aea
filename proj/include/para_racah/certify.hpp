#pragma once

#include <string>
#include <vector>

#include "para_racah/parameters.hpp"
#include "para_racah/recurrence.hpp"

namespace pararacah {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full invariant suite for one parameter set: coefficient-path and
// evaluation-path equivalence, characteristic polynomial, grid, weights,
// orthogonality, bispectrality, spectrum, degeneracy pattern, plus the
// alpha-specific checks (persymmetry, node values, block structure).
std::vector<CheckResult> certify(const ParamSet& params);

// Same suite, but every table-dependent check runs against the supplied
// table instead of the computed one. Feeding a corrupted table makes the
// affected checks fail by name (fault injection / external verification).
std::vector<CheckResult> certify(const ParamSet& params, const RecurrenceTable& table);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace pararacah
