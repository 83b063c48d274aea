#include "para_racah/explicit_form.hpp"


namespace pararacah {

namespace {

void check_degree(const ParamSet& p, int n) {
    if (n < 0 || n > p.n_max) {
        throw IndexOutOfRange("degree " + std::to_string(n) + " outside [0, N]");
    }
}

void check_alpha_branch(const ParamSet& p, int n) {
    if (n > p.j && p.alpha == 0) {
        throw AlphaZeroBranch("explicit form at degree " + std::to_string(n) +
                              " > j divides by alpha = 0; use the recurrence path");
    }
}

// Fourth lower Pochhammer base: a-c-j for odd N, a-c-j+1 for even N.
Rational fourth_base(const ParamSet& p) {
    return p.odd() ? Rational(p.a - p.c - p.j) : Rational(p.a - p.c - p.j + 1);
}

} // namespace

std::vector<Rational> limit_coefficients(const ParamSet& p, int n) {
    check_degree(p, n);
    check_alpha_branch(p, n);
    const int N = p.n_max;
    const int j = p.j;
    const Rational d4 = fourth_base(p);
    const Rational sum = p.a + p.c;

    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (k <= j) {
            Rational num = pochhammer(Rational(-n), k) * pochhammer(Rational(n - N), k);
            Rational den = pochhammer(Rational(1), k) * pochhammer(Rational(-j), k) *
                           pochhammer(sum, k) * pochhammer(d4, k);
            if (den == 0) {
                throw DegenerateParameters("series denominator vanishes at k = " +
                                           std::to_string(k));
            }
            row.push_back(num / den);
        } else {
            // Truncation with n-N keeps the Pochhammer lengths nonnegative:
            // k-1+n-N >= n-j-1 >= 0 whenever this branch is reachable.
            Rational num = pochhammer(Rational(-n), k) * pochhammer(Rational(n - N), N - n) *
                           pochhammer(Rational(1), k - 1 + n - N);
            Rational den = p.alpha * pochhammer(Rational(1), k) * pochhammer(Rational(-j), j) *
                           pochhammer(Rational(1), k - j - 1) * pochhammer(sum, k) *
                           pochhammer(d4, k);
            if (den == 0) {
                throw DegenerateParameters("series denominator vanishes at k = " +
                                           std::to_string(k));
            }
            row.push_back(num / den);
        }
    }
    return row;
}

Rational eta(const ParamSet& p, int n) {
    check_degree(p, n);
    check_alpha_branch(p, n); // eta_n carries a bare factor alpha for n > j
    const int N = p.n_max;
    const int j = p.j;
    const Rational d4 = fourth_base(p);
    const Rational sum = p.a + p.c;
    if (n <= j) {
        Rational num = pochhammer(Rational(1), n) * pochhammer(Rational(-j), n) *
                       pochhammer(sum, n) * pochhammer(d4, n);
        Rational den = pochhammer(Rational(-n), n) * pochhammer(Rational(n - N), n);
        return num / den;
    }
    Rational num = p.alpha * pochhammer(Rational(1), n) * pochhammer(Rational(-j), j) *
                   pochhammer(Rational(1), n - j - 1) * pochhammer(sum, n) * pochhammer(d4, n);
    Rational den = pochhammer(Rational(-n), n) * pochhammer(Rational(n - N), N - n) *
                   pochhammer(Rational(1), 2 * n - 1 - N);
    return num / den;
}

Rational eval_explicit(const ParamSet& p, int n, const Rational& lambda) {
    check_degree(p, n);
    check_alpha_branch(p, n);
    std::vector<Rational> row = limit_coefficients(p, n);
    Rational sum(0);
    Rational phi(1);
    Rational shifted = p.a;
    for (int k = 0; k <= n; ++k) {
        if (row[static_cast<std::size_t>(k)] != 0) sum += row[static_cast<std::size_t>(k)] * phi;
        phi *= shifted * shifted + lambda;
        shifted += 1;
    }
    return eta(p, n) * sum;
}

Rational char_poly_explicit(const ParamSet& p, const Rational& lambda) {
    const int j = p.j;
    const int c_count = p.odd() ? j + 1 : j;
    Rational prod(1);
    for (int s = 0; s <= j; ++s) {
        Rational f = p.a + s;
        prod *= f * f + lambda;
    }
    for (int s = 0; s < c_count; ++s) {
        Rational f = p.c + s;
        prod *= f * f + lambda;
    }
    return prod;
}

} // namespace pararacah
