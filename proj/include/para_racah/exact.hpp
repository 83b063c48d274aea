#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "para_racah/errors.hpp"

namespace pararacah {

// Exact arbitrary-precision rational. GMP keeps values canonical (reduced,
// positive denominator) as long as they are built through these helpers.
using Rational = mpq_class;

// Parses "p/q" or "p" (optionally signed). Anything else, including decimal
// or exponent notation, is rejected: the exact paths never parse floats.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

Rational rational_pow(const Rational& base, long exponent);

// Complex number with exact rational real and imaginary parts.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit Gaussian(const Rational& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Gaussian conj() const { return {re, -im}; }
    // |z|^2 = re^2 + im^2, always a nonnegative rational.
    Rational norm2() const { return re * re + im * im; }
};

Gaussian operator+(const Gaussian& x, const Gaussian& y);
Gaussian operator-(const Gaussian& x, const Gaussian& y);
Gaussian operator-(const Gaussian& x);
Gaussian operator*(const Gaussian& x, const Gaussian& y);
Gaussian operator/(const Gaussian& x, const Gaussian& y); // throws PoleAtX on y == 0
bool operator==(const Gaussian& x, const Gaussian& y);

std::string to_string(const Gaussian& z);

// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);
Gaussian pochhammer(const Gaussian& a, long k);

// Phi_k(lambda) = prod_{m=0}^{k-1} ((a+m)^2 + lambda), the real form of
// (a-ix)_k (a+ix)_k under lambda = x^2. Evaluated with no complex arithmetic.
Rational phi_k(const Rational& lambda, const Rational& a, long k);

mpz_class factorial(long n);
mpz_class binomial(long n, long k);

} // namespace pararacah
