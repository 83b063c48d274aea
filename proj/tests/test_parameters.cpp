#include <doctest.h>

#include "para_racah/parameters.hpp"
#include "para_racah/recurrence.hpp"
#include "test_support.hpp"

using namespace pararacah;
using pararacah::testing::ParamSampler;

TEST_SUITE("parameters") {

TEST_CASE("regime classification of known sets") {
    ParamSet p = validate(3, Rational(1), Rational(5, 4), Rational(1, 2));
    CHECK(p.regime == Regime::odd_outer);
    CHECK(p.j == 1);
    CHECK(p.parity == Parity::odd);

    ParamSet q = validate(4, Rational(1), Rational(3, 2), Rational(1, 4));
    CHECK(q.regime == Regime::even_outer);
    CHECK(q.j == 2);

    ParamSet inner_odd = validate(7, Rational(-29, 8), Rational(1, 8), Rational(1, 2));
    CHECK(inner_odd.regime == Regime::odd_inner);

    ParamSet inner_even = validate(6, Rational(-23, 8), Rational(1, 4), Rational(1, 2));
    CHECK(inner_even.regime == Regime::even_inner);
}

TEST_CASE("a = c is rejected outright") {
    CHECK_THROWS_AS(validate(3, Rational(1), Rational(1), Rational(1, 2)), DegenerateParameters);
}

TEST_CASE("alpha outside [0,1] and bad N are rejected") {
    CHECK_THROWS_AS(validate(3, Rational(1), Rational(5, 4), Rational(3, 2)), RegimeViolation);
    CHECK_THROWS_AS(validate(3, Rational(1), Rational(5, 4), Rational(-1, 8)), RegimeViolation);
    CHECK_THROWS_AS(validate(0, Rational(1), Rational(5, 4), Rational(1, 2)), RegimeViolation);
}

TEST_CASE("degenerate denominators are rejected with the factor named") {
    // a = 0 makes (a)_s vanish inside the closed-form weights.
    CHECK_THROWS_AS(validate(3, Rational(0), Rational(1, 2), Rational(1, 2)),
                    DegenerateParameters);
    // a+c a nonpositive integer in range kills (a+c)_N.
    CHECK_THROWS_AS(validate(5, Rational(-11, 4), Rational(-1, 4), Rational(1, 2)),
                    DegenerateParameters);
    try {
        validate(5, Rational(-11, 4), Rational(-1, 4), Rational(1, 2));
    } catch (const DegenerateParameters& e) {
        CHECK(std::string(e.what()).find("(a+c)_N") != std::string::npos);
    }
}

TEST_CASE("alpha endpoints are accepted and flagged") {
    ParamSet p0 = validate(5, Rational(1), Rational(3, 2), Rational(0));
    CHECK(p0.alpha_degenerate);
    ParamSet p1 = validate(5, Rational(1), Rational(3, 2), Rational(1));
    CHECK(p1.alpha_degenerate);
    ParamSet ph = validate(5, Rational(1), Rational(3, 2), Rational(1, 2));
    CHECK_FALSE(ph.alpha_degenerate);
}

TEST_CASE("validated sets have strictly positive u (exhaustive over samples)") {
    ParamSampler sampler(101);
    for (int i = 0; i < 40; ++i) {
        Parity parity = (i % 2 == 0) ? Parity::odd : Parity::even;
        ParamSet p = sampler.params(parity, 1, 17);
        RecurrenceTable t = recurrence_table(p);
        for (int n = 1; n <= p.n_max; ++n) {
            CHECK(t.u[static_cast<std::size_t>(n)] > 0);
        }
    }
}

// Sampling just outside each inequality: the raw (unvalidated) table must
// contain a nonpositive u_n, and validate must refuse.
TEST_CASE("boundary violations produce nonpositive u") {
    struct Sample {
        int n;
        Rational a, c;
    };
    const Sample samples[] = {
        {3, Rational(1), Rational(19, 8)},     // odd outer, |c-a| > 1
        {3, Rational(-3, 10), Rational(1, 5)}, // odd outer, a+c slips below 0
        {5, Rational(-33, 16), Rational(-3, 16)}, // odd inner, |c-a| < j
        {4, Rational(3, 2), Rational(1)},      // even outer, c-a < 0
        {4, Rational(1), Rational(9, 4)},      // even outer, c-a > 1
        {4, Rational(-55, 32), Rational(25, 32)}, // even inner, a+c above -j+1
    };
    for (const auto& s : samples) {
        CAPTURE(s.n);
        CHECK_THROWS_AS(validate(s.n, s.a, s.c, Rational(1, 2)), Error);
        ParamSet raw = unchecked_params(s.n, s.a, s.c, Rational(1, 2));
        RecurrenceTable t = recurrence_table(raw);
        bool some_nonpositive = false;
        for (int n = 1; n <= s.n; ++n) {
            if (t.u[static_cast<std::size_t>(n)] <= 0) some_nonpositive = true;
        }
        CHECK(some_nonpositive);
    }
}

// The odd-N inner inequality display admits a+c down to -N, but positivity
// actually confines it to (-j-1, -j+1); such sets must be rejected even
// though the displayed constraints hold.
TEST_CASE("odd inner display is not sufficient below a+c = -j-1") {
    ParamSet raw = unchecked_params(3, Rational(-2), Rational(-1, 2), Rational(1, 2));
    RecurrenceTable t = recurrence_table(raw);
    CHECK(t.u[1] == Rational(-25, 64));
    CHECK_THROWS_AS(validate(3, Rational(-2), Rational(-1, 2), Rational(1, 2)), Error);
}

TEST_CASE("spectrum degeneracy map") {
    auto m3 = spectrum_degeneracy(validate(3, Rational(1), Rational(5, 4), Rational(1, 2)));
    CHECK(m3 == std::map<long, int>{{0, 2}, {-2, 2}});

    auto m4 = spectrum_degeneracy(validate(4, Rational(1), Rational(3, 2), Rational(1, 4)));
    CHECK(m4 == std::map<long, int>{{0, 2}, {-3, 2}, {-4, 1}});

    auto m1 = spectrum_degeneracy(validate(1, Rational(1), Rational(5, 4), Rational(1, 2)));
    CHECK(m1 == std::map<long, int>{{0, 2}});
}

} // TEST_SUITE
