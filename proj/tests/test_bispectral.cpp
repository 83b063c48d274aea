#include <doctest.h>

#include "para_racah/bispectral.hpp"
#include "test_support.hpp"

using namespace pararacah;
using pararacah::testing::ParamSampler;

TEST_SUITE("bispectral") {

TEST_CASE("poles and zeros of D(x)") {
    ParamSet p = validate(3, Rational(1), Rational(5, 4), Rational(1, 2));
    CHECK_THROWS_AS(d_of_x(p, Gaussian()), PoleAtX);                       // x = 0
    CHECK_THROWS_AS(d_of_x(p, Gaussian(Rational(0), Rational(1, 2))), PoleAtX); // 2ix = -1
    // x = i a annihilates the (a+ix) factor.
    Gaussian at_ia = d_of_x(p, Gaussian(Rational(0), p.a));
    CHECK(at_ia.is_zero());
}

TEST_CASE("conjugation symmetry for real x") {
    ParamSet p = validate(4, Rational(1), Rational(3, 2), Rational(1, 4));
    for (Rational x : {Rational(3, 7), Rational(-2, 5), Rational(11, 3)}) {
        Gaussian d = d_of_x(p, Gaussian(x, Rational(0)));
        Gaussian dm = d_of_x(p, Gaussian(-x, Rational(0)));
        CHECK(dm == d.conj()); // x -> -x is i -> -i for real x
    }
}

TEST_CASE("difference residual vanishes exactly") {
    ParamSampler sampler(503);
    for (int i = 0; i < 8; ++i) {
        Parity parity = (i % 2 == 0) ? Parity::odd : Parity::even;
        ParamSet p = sampler.params(parity, 1, 11, pararacah::testing::AlphaMode::full);
        RecurrenceTable t = recurrence_table(p);
        for (int k = 0; k < 5; ++k) {
            Rational x(0);
            while (x == 0) x = sampler.rational(-12, 12, 7);
            auto res = difference_residuals(p, t, x);
            for (int n = 0; n <= p.n_max; ++n) {
                CAPTURE(n);
                CHECK(res[static_cast<std::size_t>(n)].is_zero());
            }
        }
    }
}

TEST_CASE("frozen example: N=3 reference set, n=2, x=3/7") {
    ParamSet p = validate(3, Rational(1), Rational(5, 4), Rational(1, 2));
    RecurrenceTable t = recurrence_table(p);
    CHECK(difference_residual(p, t, 2, Rational(3, 7)).is_zero());
    CHECK(difference_residual(p, t, 0, Rational(1, 2)).is_zero());
}

TEST_CASE("residual is invariant under x -> -x") {
    ParamSet p = validate(5, Rational(1), Rational(3, 2), Rational(1, 3));
    RecurrenceTable t = recurrence_table(p);
    for (Rational x : {Rational(2, 3), Rational(7, 4)}) {
        auto plus = difference_residuals(p, t, x);
        auto minus = difference_residuals(p, t, -x);
        for (int n = 0; n <= p.n_max; ++n) {
            CHECK(plus[static_cast<std::size_t>(n)] == minus[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("x = 0 is a pole of the residual") {
    ParamSet p = validate(3, Rational(1), Rational(5, 4), Rational(1, 2));
    RecurrenceTable t = recurrence_table(p);
    CHECK_THROWS_AS(difference_residual(p, t, 1, Rational(0)), PoleAtX);
}

TEST_CASE("n and N-n share the eigenvalue -n(N-n)") {
    ParamSet p = validate(5, Rational(1), Rational(3, 2), Rational(1, 2));
    auto mult = spectrum_degeneracy(p);
    for (int n = 0; n <= p.n_max; ++n) {
        long ev = -static_cast<long>(n) * (p.n_max - n);
        CHECK(mult.at(ev) == 2);
        CHECK(ev == -static_cast<long>(p.n_max - n) * n);
    }
}

} // TEST_SUITE
