#include <doctest.h>

#include "para_racah/spectral.hpp"
#include "test_support.hpp"

using namespace pararacah;
using pararacah::testing::ParamSampler;

TEST_SUITE("spectral") {

TEST_CASE("bi-lattice nodes for known sets") {
    ParamSet p = validate(3, Rational(1), Rational(5, 4), Rational(1, 2));
    BiLattice g = bi_lattice(p);
    REQUIRE(g.size() == 4);
    CHECK(g.nodes[0].lambda == Rational(-1));
    CHECK(g.nodes[1].lambda == Rational(-25, 16));
    CHECK(g.nodes[2].lambda == Rational(-4));
    CHECK(g.nodes[3].lambda == Rational(-81, 16));
    CHECK(g.nodes[0].family == BiLattice::Family::a_family);
    CHECK(g.nodes[1].family == BiLattice::Family::c_family);

    ParamSet q = validate(4, Rational(1), Rational(3, 2), Rational(1, 4));
    BiLattice h = bi_lattice(q);
    REQUIRE(h.size() == 5);
    CHECK(h.nodes[0].lambda == Rational(-1));
    CHECK(h.nodes[1].lambda == Rational(-9, 4));
    CHECK(h.nodes[2].lambda == Rational(-4));
    CHECK(h.nodes[3].lambda == Rational(-25, 4));
    CHECK(h.nodes[4].lambda == Rational(-9));
    CHECK(h.nodes[4].family == BiLattice::Family::a_family);

    ParamSet one = validate(1, Rational(1), Rational(5, 4), Rational(1, 2));
    BiLattice g1 = bi_lattice(one);
    REQUIRE(g1.size() == 2);
    CHECK(g1.nodes[0].lambda == -one.a * one.a);
    CHECK(g1.nodes[1].lambda == -one.c * one.c);
}

TEST_CASE("sorted view is strictly increasing") {
    ParamSampler sampler(401);
    for (int i = 0; i < 10; ++i) {
        Parity parity = (i % 2 == 0) ? Parity::odd : Parity::even;
        ParamSet p = sampler.params(parity, 1, 15);
        BiLattice g = bi_lattice(p);
        for (int r = 1; r <= p.n_max; ++r) {
            CHECK(g.nodes[static_cast<std::size_t>(g.sorted_order[static_cast<std::size_t>(r - 1)])].lambda <
                  g.nodes[static_cast<std::size_t>(g.sorted_order[static_cast<std::size_t>(r)])].lambda);
        }
    }
}

TEST_CASE("colliding nodes are detected") {
    // c - a = 1 makes (1+a)^2 collide with (0+c)^2.
    ParamSet raw = unchecked_params(3, Rational(1), Rational(2), Rational(1, 2));
    CHECK_THROWS_AS(bi_lattice(raw), CollidingNodes);
}

TEST_CASE("closed-form and spectral weights coincide, sum correctly, positive") {
    ParamSampler sampler(409);
    for (int i = 0; i < 12; ++i) {
        Parity parity = (i % 2 == 0) ? Parity::odd : Parity::even;
        ParamSet p = sampler.params(parity, 1, 13);
        BiLattice g = bi_lattice(p);
        auto closed = weights_closed_form(p);
        auto spectral = weights_spectral(p);
        REQUIRE(closed.size() == spectral.size());
        Rational sum_a(0), sum_c(0);
        for (int s = 0; s <= p.n_max; ++s) {
            CHECK(closed[static_cast<std::size_t>(s)] == spectral[static_cast<std::size_t>(s)]);
            CHECK(closed[static_cast<std::size_t>(s)] > 0);
            if (g.nodes[static_cast<std::size_t>(s)].family == BiLattice::Family::a_family) {
                sum_a += closed[static_cast<std::size_t>(s)];
            } else {
                sum_c += closed[static_cast<std::size_t>(s)];
            }
        }
        CHECK(sum_a == 1 - p.alpha);
        CHECK(sum_c == p.alpha);
    }
}

TEST_CASE("alpha endpoints: one family's weights vanish, spectral formula unavailable") {
    ParamSet p0 = validate(5, Rational(1), Rational(3, 2), Rational(0));
    BiLattice g = bi_lattice(p0);
    auto w0 = weights_closed_form(p0);
    for (int s = 0; s <= p0.n_max; ++s) {
        const bool c_fam = g.nodes[static_cast<std::size_t>(s)].family == BiLattice::Family::c_family;
        if (c_fam) {
            CHECK(w0[static_cast<std::size_t>(s)] == 0);
        } else {
            CHECK(w0[static_cast<std::size_t>(s)] > 0);
        }
    }
    CHECK_THROWS_AS(weights_spectral(p0), ZeroAtNode);

    ParamSet p1 = validate(4, Rational(1), Rational(3, 2), Rational(1));
    BiLattice g1 = bi_lattice(p1);
    auto w1 = weights_closed_form(p1);
    for (int s = 0; s <= p1.n_max; ++s) {
        const bool a_fam = g1.nodes[static_cast<std::size_t>(s)].family == BiLattice::Family::a_family;
        CHECK((a_fam ? w1[static_cast<std::size_t>(s)] == 0 : w1[static_cast<std::size_t>(s)] > 0));
    }
}

TEST_CASE("Gram matrix is exactly diagonal with entries prod u") {
    ParamSet p = validate(3, Rational(1), Rational(5, 4), Rational(1, 2));
    RecurrenceTable t = recurrence_table(p);
    auto gram = gram_matrix(p, t);
    CHECK(gram[0][0] == 1); // sum of weights
    CHECK(gram[1][1] == t.u[1]);
    CHECK(gram[2][2] == t.u[1] * t.u[2]);
    CHECK(gram[3][3] == t.u[1] * t.u[2] * t.u[3]);
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            if (n != m) CHECK(gram[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] == 0);
        }
    }
    OrthogonalityReport report = orthogonality_check(p, t);
    CHECK(report.exact());
    CHECK(report.max_offdiag_abs == 0);
    CHECK(report.max_diag_ratio_error == 0);
}

TEST_CASE("orthogonality survives the degenerate alpha split") {
    ParamSet p = validate(5, Rational(1), Rational(3, 2), Rational(1));
    CHECK(orthogonality_check(p).exact());
}

TEST_CASE("persymmetric node values at alpha = 1/2") {
    ParamSampler sampler(419);
    for (int i = 0; i < 8; ++i) {
        Parity parity = (i % 2 == 0) ? Parity::odd : Parity::even;
        ParamSet p = sampler.params(parity, 1, 11, pararacah::testing::AlphaMode::half);
        PersymmetricNodeValues v = persymmetric_node_values(p);
        CHECK(v.squares_match);
        CHECK(v.alternating_sorted);
        // P_N is positive beyond its largest zero, so the top sorted node
        // always carries sign +1 and rank r carries (-1)^(N-r).
        CHECK(v.sign_at_top == 1);
    }
}

TEST_CASE("corrupted tables break the Gram diagonal") {
    ParamSet p = validate(4, Rational(1), Rational(3, 2), Rational(1, 3));
    RecurrenceTable t = recurrence_table(p);
    t.b[2] += Rational(1, 7);
    OrthogonalityReport report = orthogonality_check(p, t);
    CHECK_FALSE(report.exact());
}

} // TEST_SUITE
