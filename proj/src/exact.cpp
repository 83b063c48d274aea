#include "para_racah/exact.hpp"

#include <cctype>

namespace pararacah {

namespace {

bool valid_rational_text(std::string_view s) {
    // [+-]?digits(/[+-]?digits)?
    std::size_t i = 0;
    auto digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return i > start;
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (!digits()) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (!digits()) return false;
    return i == s.size();
}

} // namespace

Rational rational_from_string(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty() || !valid_rational_text(s)) {
        throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
    }
    std::string normalized(s);
    if (normalized.front() == '+') normalized.erase(0, 1);
    auto slash = normalized.find('/');
    if (slash != std::string::npos && normalized[slash + 1] == '+') normalized.erase(slash + 1, 1);
    Rational q;
    if (q.set_str(normalized, 10) != 0) {
        throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
    }
    if (q.get_den() == 0) {
        throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw PoleAtX("0 raised to a negative power");
        return 1 / rational_pow(base, -exponent);
    }
    Rational r(1);
    Rational b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Gaussian operator+(const Gaussian& x, const Gaussian& y) { return {x.re + y.re, x.im + y.im}; }

Gaussian operator-(const Gaussian& x, const Gaussian& y) { return {x.re - y.re, x.im - y.im}; }

Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }

Gaussian operator*(const Gaussian& x, const Gaussian& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Gaussian operator/(const Gaussian& x, const Gaussian& y) {
    Rational n2 = y.norm2();
    if (n2 == 0) throw PoleAtX("division by zero Gaussian rational");
    return {(x.re * y.re + x.im * y.im) / n2, (x.im * y.re - x.re * y.im) / n2};
}

bool operator==(const Gaussian& x, const Gaussian& y) { return x.re == y.re && x.im == y.im; }

std::string to_string(const Gaussian& z) { return z.re.get_str() + (z.im < 0 ? "" : "+") + z.im.get_str() + "i"; }

Rational pochhammer(const Rational& a, long k) {
    Rational r(1);
    Rational f = a;
    for (long m = 0; m < k; ++m) {
        r *= f;
        f += 1;
    }
    return r;
}

Gaussian pochhammer(const Gaussian& a, long k) {
    Gaussian r(Rational(1), Rational(0));
    Gaussian f = a;
    for (long m = 0; m < k; ++m) {
        r = r * f;
        f.re += 1;
    }
    return r;
}

Rational phi_k(const Rational& lambda, const Rational& a, long k) {
    Rational r(1);
    Rational shifted = a;
    for (long m = 0; m < k; ++m) {
        r *= shifted * shifted + lambda;
        shifted += 1;
    }
    return r;
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace pararacah
