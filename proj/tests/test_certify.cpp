#include <doctest.h>

#include "para_racah/certify.hpp"
#include "test_support.hpp"

using namespace pararacah;
using pararacah::testing::ParamSampler;

namespace {

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

} // namespace

TEST_SUITE("certify") {

TEST_CASE("full suite passes on sampled parameter sets") {
    ParamSampler sampler(701);
    for (int i = 0; i < 6; ++i) {
        Parity parity = (i % 2 == 0) ? Parity::odd : Parity::even;
        ParamSet p = sampler.params(parity, 1, 9, pararacah::testing::AlphaMode::full);
        auto results = certify(p);
        for (const auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("alpha-specific checks appear exactly when applicable") {
    auto half = certify(validate(5, Rational(1), Rational(3, 2), Rational(1, 2)));
    CHECK(find(half, "persymmetry"));
    CHECK(find(half, "pn-node-values"));
    CHECK_FALSE(find(half, "block-structure"));

    auto skew = certify(validate(5, Rational(1), Rational(3, 2), Rational(1, 3)));
    CHECK_FALSE(find(skew, "persymmetry"));
    CHECK(find(skew, "alpha-perturbation"));

    auto end = certify(validate(5, Rational(1), Rational(3, 2), Rational(1)));
    CHECK(find(end, "block-structure"));
    CHECK(all_passed(end));
}

TEST_CASE("injected corruption fails by name") {
    ParamSet p = validate(4, Rational(1), Rational(3, 2), Rational(1, 3));
    RecurrenceTable good = recurrence_table(p);

    RecurrenceTable bad_b = good;
    bad_b.b[1] += Rational(1, 100);
    auto r1 = certify(p, bad_b);
    CHECK_FALSE(all_passed(r1));
    CHECK_FALSE(find(r1, "coefficient-paths")->pass);
    CHECK_FALSE(find(r1, "evaluation-paths")->pass);

    RecurrenceTable bad_u = good;
    bad_u.u[3] *= Rational(2);
    auto r2 = certify(p, bad_u);
    CHECK_FALSE(all_passed(r2));
    CHECK_FALSE(find(r2, "coefficient-paths")->pass);
    CHECK_FALSE(find(r2, "weights")->pass);

    auto good_results = certify(p, good);
    CHECK(all_passed(good_results));
}

} // TEST_SUITE
