#include <doctest.h>

#include <random>

#include "para_racah/exact.hpp"

using namespace pararacah;

TEST_SUITE("exact") {

TEST_CASE("rational parsing accepts p/q and integers only") {
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-3/4") == Rational(-3, 4));
    CHECK(rational_from_string("6/8") == Rational(3, 4));
    CHECK(rational_from_string("  12 ") == Rational(12));
    CHECK(rational_from_string("+5/+10") == Rational(1, 2));
    CHECK(rational_from_string("3/-4") == Rational(-3, 4));
    CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1e3"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("3 / 4"), ParseError);
}

TEST_CASE("rational round-trips through canonical strings") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 999);
    for (int i = 0; i < 200; ++i) {
        Rational q(num(rng));
        q /= den(rng);
        CHECK(rational_from_string(to_string(q)) == q);
    }
}

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(5, 3), 0) == 1);
    CHECK(pochhammer(Rational(1), 4) == 24);
    CHECK(pochhammer(Rational(-3), 5) == 0);
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer recursion (a)_{k+1} = (a)_k (a+k)") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), len(0, 20);
    for (int i = 0; i < 100; ++i) {
        Rational a(num(rng));
        a /= den(rng);
        long k = len(rng);
        CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + k));
    }
}

TEST_CASE("phi_k edge cases") {
    Rational lambda(7, 5), a(2, 3);
    CHECK(phi_k(lambda, a, 0) == 1);
    CHECK(phi_k(lambda, a, 1) == a * a + lambda);
    CHECK(phi_k(-a * a, a, 2) == 0);
}

TEST_CASE("phi_k agrees with the Gaussian Pochhammer product") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7), len(0, 8);
    for (int i = 0; i < 60; ++i) {
        Rational a(num(rng));
        a /= den(rng);
        Rational x(num(rng));
        x /= den(rng);
        long k = len(rng);

        // Real x: (a-ix)_k (a+ix)_k computed in Gaussian arithmetic.
        Gaussian lhs = pochhammer(Gaussian(a, -x), k) * pochhammer(Gaussian(a, x), k);
        CHECK(lhs.im == 0);
        CHECK(lhs.re == phi_k(x * x, a, k));

        // Purely imaginary x = i r: lambda = x^2 = -r^2 and both Pochhammers
        // become real.
        Gaussian ir(Rational(0), x);
        Gaussian lhs2 = pochhammer(Gaussian(a) - Gaussian(Rational(0), Rational(1)) * ir, k) *
                        pochhammer(Gaussian(a) + Gaussian(Rational(0), Rational(1)) * ir, k);
        CHECK(lhs2.im == 0);
        CHECK(lhs2.re == phi_k(-x * x, a, k));
    }
}

TEST_CASE("Gaussian arithmetic: conjugation and modulus") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    auto draw = [&] {
        Rational re(num(rng)), im(num(rng));
        return Gaussian(re / den(rng), im / den(rng));
    };
    for (int i = 0; i < 60; ++i) {
        Gaussian z = draw(), w = draw();
        CHECK(z.conj().conj() == z);
        CHECK((z * w).conj() == z.conj() * w.conj());
        CHECK(z.norm2() >= 0);
        CHECK(z.norm2() == (z * z.conj()).re);
        if (!w.is_zero()) CHECK((z / w) * w == z);
    }
    CHECK_THROWS_AS(Gaussian(Rational(1)) / Gaussian(), PoleAtX);
}

TEST_CASE("conjugation symmetry of real polynomials at conjugate points") {
    // p(z) = z^3 - (2/3) z + 5 evaluated at z and conj(z).
    auto p = [](const Gaussian& z) {
        return z * z * z - Gaussian(Rational(2, 3)) * z + Gaussian(Rational(5));
    };
    Gaussian z(Rational(3, 7), Rational(-2, 5));
    CHECK(p(z.conj()) == p(z).conj());
}

} // TEST_SUITE
