#include "para_racah/parameters.hpp"

#include <optional>
#include <utility>
#include <vector>

#include "para_racah/recurrence.hpp"

namespace pararacah {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::odd_inner: return "odd-inner";
        case Regime::odd_outer: return "odd-outer";
        case Regime::even_inner: return "even-inner";
        case Regime::even_outer: return "even-outer";
    }
    return "?";
}

const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

namespace {

std::optional<Regime> match_regime(int n, int j, const Rational& a, const Rational& c) {
    const Rational sum = a + c;
    const Rational diff = c - a;
    const Rational absdiff = abs(diff);
    if (n % 2 == 1) {
        if (sum > -n && sum < -j + 1 && absdiff > j) return Regime::odd_inner;
        if ((sum < -n + 1 || sum > 0) && absdiff < 1) return Regime::odd_outer;
    } else {
        if (sum > -j && sum < -j + 1 && (a - c < -j || c - a < -j + 1)) return Regime::even_inner;
        if ((sum < -n + 1 || sum > 0) && diff > 0 && diff < 1) return Regime::even_outer;
    }
    return std::nullopt;
}

struct FactorCheck {
    std::string label;
    Rational base;
    long length;
};

// Every Pochhammer that sits in a denominator of an in-scope formula
// (explicit A_{n,k}, eta_n, closed-form weights). A zero here would make
// the formula 0/0 even though the recurrence itself stays regular.
std::vector<FactorCheck> denominator_factors(int n, int j, const Rational& a, const Rational& c) {
    std::vector<FactorCheck> f;
    const Rational sum = a + c;
    if (n % 2 == 1) {
        f.push_back({"(a+c)_N", sum, n});
        f.push_back({"(a-c-j)_N", a - c - j, n});
        f.push_back({"(c-a)_{j+1}", c - a, j + 1});
        f.push_back({"(a-c)_{j+1}", a - c, j + 1});
        f.push_back({"(2a+1)_j", 2 * a + 1, j});
        f.push_back({"(a)_j", a, j});
        f.push_back({"(2a+1+j)_j", 2 * a + 1 + j, j});
        f.push_back({"(a-c+1)_j", a - c + 1, j});
        f.push_back({"(a+c+j+1)_j", sum + j + 1, j});
        f.push_back({"(2c+1)_j", 2 * c + 1, j});
        f.push_back({"(c)_j", c, j});
        f.push_back({"(2c+1+j)_j", 2 * c + 1 + j, j});
        f.push_back({"(c-a+1)_j", c - a + 1, j});
    } else {
        f.push_back({"(a+c)_N", sum, n});
        f.push_back({"(a-c-j+1)_N", a - c - j + 1, n});
        f.push_back({"(a+c)_{j+1}", sum, j + 1});
        f.push_back({"(c-a)_j", c - a, j});
        f.push_back({"(2a+1)_j", 2 * a + 1, j});
        f.push_back({"(a)_j", a, j});
        f.push_back({"(2a+1+j)_j", 2 * a + 1 + j, j});
        f.push_back({"(a-c+1)_j", a - c + 1, j});
        f.push_back({"(a+c+j)_j", sum + j, j});
        f.push_back({"(a-c)_{j+1}", a - c, j + 1});
        if (j >= 1) {
            f.push_back({"(2c+1)_{j-1}", 2 * c + 1, j - 1});
            f.push_back({"(c)_{j-1}", c, j - 1});
            f.push_back({"(2c+j)_{j-1}", 2 * c + j, j - 1});
            f.push_back({"(c-a+1)_{j-1}", c - a + 1, j - 1});
            f.push_back({"(a+c+j+1)_{j-1}", sum + j + 1, j - 1});
        }
    }
    return f;
}

} // namespace

ParamSet unchecked_params(int n, const Rational& a, const Rational& c, const Rational& alpha) {
    ParamSet p;
    p.n_max = n;
    p.parity = (n % 2 == 1) ? Parity::odd : Parity::even;
    p.j = p.odd() ? (n - 1) / 2 : n / 2;
    p.a = a;
    p.c = c;
    p.alpha = alpha;
    p.alpha_degenerate = (alpha == 0 || alpha == 1);
    p.regime = p.odd() ? Regime::odd_outer : Regime::even_outer;
    return p;
}

ParamSet validate(int n, const Rational& a, const Rational& c, const Rational& alpha) {
    if (n < 1) throw RegimeViolation("N must be >= 1, got " + std::to_string(n));
    if (alpha < 0 || alpha > 1) {
        throw RegimeViolation("alpha must lie in [0, 1], got " + to_string(alpha));
    }
    if (a == c) {
        throw DegenerateParameters("a = c collapses the deformation (u_{j+1} vanishes identically)");
    }
    ParamSet p = unchecked_params(n, a, c, alpha);

    auto regime = match_regime(n, p.j, a, c);
    if (!regime) {
        throw RegimeViolation("no positivity regime holds for N=" + std::to_string(n) + ", a=" +
                              to_string(a) + ", c=" + to_string(c));
    }
    p.regime = *regime;

    for (const auto& f : denominator_factors(n, p.j, a, c)) {
        if (pochhammer(f.base, f.length) == 0) {
            throw DegenerateParameters("denominator factor " + f.label + " vanishes (base " +
                                       to_string(f.base) + ")");
        }
    }

    // The regime inequalities are necessary but the strict sign of every u_n
    // is the actual contract; check it outright.
    RecurrenceTable table = recurrence_table(p);
    for (int m = 1; m <= n; ++m) {
        const Rational& u = table.u[static_cast<std::size_t>(m)];
        if (p.alpha_degenerate) {
            bool may_vanish = p.odd() ? (m == p.j + 1)
                                      : (p.alpha == 0 ? m == p.j + 1 : m == p.j);
            if (may_vanish) {
                if (u != 0) throw RegimeViolation("expected u_" + std::to_string(m) + " = 0 at degenerate alpha");
                continue;
            }
        }
        if (u <= 0) {
            throw RegimeViolation("u_" + std::to_string(m) + " = " + to_string(u) +
                                  " is not positive");
        }
    }
    return p;
}

std::map<long, int> spectrum_degeneracy(const ParamSet& params) {
    std::map<long, int> mult;
    for (long n = 0; n <= params.n_max; ++n) {
        mult[-n * (params.n_max - n)] += 1;
    }
    return mult;
}

} // namespace pararacah
