#pragma once

#include <map>
#include <string>

#include "para_racah/exact.hpp"

namespace pararacah {

enum class Parity { odd, even };

// Admissible positivity regimes. Inner/Outer refer to the two alternative
// constraint sets on (a, c); when both hold the validator picks Inner.
enum class Regime { odd_inner, odd_outer, even_inner, even_outer };

const char* regime_name(Regime r);
const char* parity_name(Parity p);

// A validated para-Racah parameter set: N+1 polynomials with parameters
// (a, c) and deformation alpha in [0, 1]. N = 2j+1 (odd) or N = 2j (even).
struct ParamSet {
    int n_max = 0; // N
    Parity parity = Parity::odd;
    int j = 0;
    Rational a;
    Rational c;
    Rational alpha;
    Regime regime = Regime::odd_outer;
    bool alpha_degenerate = false; // alpha in {0, 1}: u has one vanishing entry

    bool odd() const { return parity == Parity::odd; }
};

// Checks the positivity regime for (N, a, c, alpha) and rejects parameter
// choices that put a zero into any in-scope denominator (explicit-form or
// closed-form-weight Pochhammer factors). alpha = 0 and alpha = 1 are
// accepted and flagged; a = c is rejected outright.
//
// Throws RegimeViolation or DegenerateParameters.
ParamSet validate(int n, const Rational& a, const Rational& c, const Rational& alpha);

// Builds a ParamSet without any checks. Test and fault-injection hook only.
ParamSet unchecked_params(int n, const Rational& a, const Rational& c, const Rational& alpha);

// Multiplicity of each difference-equation eigenvalue -n(N-n): 2 throughout
// for odd N; for even N the middle level n = j is non-degenerate.
std::map<long, int> spectrum_degeneracy(const ParamSet& params);

} // namespace pararacah
