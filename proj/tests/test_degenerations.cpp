#include <doctest.h>

#include "para_racah/degenerations.hpp"
#include "para_racah/spectral.hpp"
#include "test_support.hpp"

using namespace pararacah;
using pararacah::testing::ParamSampler;

TEST_SUITE("degenerations") {

TEST_CASE("pk limit coefficients: odd N displays") {
    const int n = 5;
    Rational delta(1, 3);
    ParaKrawtchoukTarget t = pk_limit_coefficients(n, delta);
    for (int m = 0; m <= n; ++m) {
        CHECK(t.coeffs.b[static_cast<std::size_t>(m)] == Rational(n - 1 + 2 * delta) / 2);
    }
    // u_1 = N(1-N-2D)(1-N+2D) / (4(2-N)(-N))
    Rational u1 = Rational(n) * (1 - n - 2 * delta) * (1 - n + 2 * delta) /
                  Rational(4 * (2 - n) * (-n));
    CHECK(t.coeffs.u[0] == u1);
}

TEST_CASE("pk limit at Delta = 1/2 collapses to n(N+1-n)/4") {
    const int n = 7;
    ParaKrawtchoukTarget t = pk_limit_coefficients(n, Rational(1, 2));
    for (int m = 1; m <= n; ++m) {
        CHECK(t.coeffs.u[static_cast<std::size_t>(m - 1)] == Rational(m * (n + 1 - m)) / 4);
        CHECK(t.coeffs.u[static_cast<std::size_t>(m - 1)] ==
              t.coeffs.u[static_cast<std::size_t>(n - m)]); // u_m = u_{N+1-m}
    }
}

TEST_CASE("pk limit tables are a positive orthogonal family") {
    for (auto [n, delta] : {std::pair<int, Rational>{5, Rational(1, 3)},
                            std::pair<int, Rational>{6, Rational(2, 5)}}) {
        ParaKrawtchoukTarget t = pk_limit_coefficients(n, delta);
        for (const Rational& u : t.coeffs.u) CHECK(u > 0);
    }
}

// The limit tables, grid and weights must be mutually consistent: the
// spectral-formula weights of the limit recurrence on the limit grid equal
// the displayed pk weights, exactly.
TEST_CASE("pk weights displays agree with the spectral formula on the limit family") {
    for (auto [n, delta] : {std::pair<int, Rational>{3, Rational(1, 2)},
                            std::pair<int, Rational>{5, Rational(1, 3)},
                            std::pair<int, Rational>{4, Rational(2, 5)},
                            std::pair<int, Rational>{6, Rational(1, 2)}}) {
        ParaKrawtchoukTarget t = pk_limit_coefficients(n, delta);
        RecurrenceTable table;
        table.b = t.coeffs.b;
        table.u.assign(1, Rational(0));
        table.u.insert(table.u.end(), t.coeffs.u.begin(), t.coeffs.u.end());
        table.u.push_back(Rational(0));

        std::vector<Rational> nodes = pk_node_targets(n, delta);
        std::vector<Rational> expected = pk_weights(n, delta);
        Rational u_product(1);
        for (const Rational& u : t.coeffs.u) u_product *= u;
        Rational total(0);
        for (int s = 0; s <= n; ++s) {
            const Rational& y = nodes[static_cast<std::size_t>(s)];
            Rational pn = eval_poly(table, n, y);
            Rational dp(1);
            for (int r = 0; r <= n; ++r) {
                if (r != s) dp *= y - nodes[static_cast<std::size_t>(r)];
            }
            REQUIRE(pn != 0);
            CHECK(u_product / (pn * dp) == expected[static_cast<std::size_t>(s)]);
            total += expected[static_cast<std::size_t>(s)];
        }
        CHECK(total == 1);
    }
}

TEST_CASE("pk convergence study: first-order coefficients and grid") {
    PkStudy study = pk_convergence_study(5, Rational(1, 3), 16, 4096);
    REQUIRE(study.rows.size() == 9);
    for (std::size_t i = 1; i < study.rows.size(); ++i) {
        CHECK(study.rows[i].coeff_b_error < study.rows[i - 1].coeff_b_error);
        CHECK(study.rows[i].coeff_u_error < study.rows[i - 1].coeff_u_error);
        CHECK(study.rows[i].grid_error < study.rows[i - 1].grid_error);
        CHECK(study.rows[i].weight_error < study.rows[i - 1].weight_error);
    }
    CHECK(study.order_b >= 0.9);
    CHECK(study.order_u >= 0.9);
    CHECK(study.order_grid >= 0.9);
    CHECK(study.order_weights >= 0.9);

    PkStudy even = pk_convergence_study(6, Rational(2, 5), 16, 4096);
    CHECK(even.order_b >= 0.9);
    CHECK(even.order_u >= 0.9);
    CHECK(even.order_grid >= 0.9);
}

TEST_CASE("pk study propagates parameter rejection for out-of-range Delta") {
    // c - a = Delta leaves every positivity regime once Delta is not in (0,1).
    CHECK_THROWS_AS(pk_convergence_study(5, Rational(3, 2), 16, 256), RegimeViolation);
}

TEST_CASE("pk grid targets: even nodes 2s, odd nodes 2s+2Delta") {
    Rational delta(1, 3);
    auto targets = pk_node_targets(5, delta);
    REQUIRE(targets.size() == 6);
    CHECK(targets[0] == 0);
    CHECK(targets[1] == 2 * delta);
    CHECK(targets[2] == 2);
    CHECK(targets[3] == 2 + 2 * delta);
    CHECK(targets[4] == 4);
    CHECK(targets[5] == 4 + 2 * delta);
}

TEST_CASE("affine covariance of the monic recurrence") {
    ParamSampler sampler(601);
    ParamSet p = sampler.params(Parity::odd, 3, 9);
    RecurrenceTable t = recurrence_table(p);
    Rational scale(-3, 8), shift(5, 7);
    MonicTable q = affine_transform(t, scale, shift);

    RecurrenceTable qt;
    qt.b = q.b;
    qt.u.assign(1, Rational(0));
    qt.u.insert(qt.u.end(), q.u.begin(), q.u.end());
    qt.u.push_back(Rational(0));

    // P_n(p y + q) = p^n Q_n(y)
    for (Rational y : {Rational(0), Rational(2, 3), Rational(-7, 5)}) {
        Rational lambda = scale * y + shift;
        for (int n = 0; n <= p.n_max; ++n) {
            CHECK(eval_poly(t, n, lambda) == rational_pow(scale, n) * eval_poly(qt, n, y));
        }
    }
}

TEST_CASE("dual-Hahn fixtures: N=5, a=1") {
    // Frozen from the monic dual-Hahn data r_n(y; N, 3/2, 3/2).
    MonicTable ref = dual_hahn_monic(5, Rational(3, 2), Rational(3, 2));
    CHECK(ref.b == std::vector<Rational>{Rational(25, 2), Rational(41, 2), Rational(49, 2),
                                         Rational(49, 2), Rational(41, 2), Rational(25, 2)});
    CHECK(ref.u == std::vector<Rational>{Rational(325, 4), Rational(154), Rational(729, 4),
                                         Rational(154), Rational(325, 4)});
    DualHahnReport report = dual_hahn_check(5, Rational(1));
    CHECK(report.match);
    CHECK(report.first_mismatch == -1);
    CHECK(report.transformed == ref);
}

TEST_CASE("dual-Hahn fixtures: N=4, a=3/4") {
    MonicTable ref = dual_hahn_monic(4, Rational(1), Rational(1));
    CHECK(ref.b == std::vector<Rational>{Rational(8), Rational(14), Rational(16), Rational(14),
                                         Rational(8)});
    CHECK(ref.u == std::vector<Rational>{Rational(40), Rational(72), Rational(72), Rational(40)});
    DualHahnReport report = dual_hahn_check(4, Rational(3, 4));
    CHECK(report.match);
    CHECK(report.transformed == ref);
}

TEST_CASE("dual-Hahn grid collapses to the single lattice -(s/2+a)^2") {
    for (auto [n, a] : {std::pair<int, Rational>{5, Rational(1)},
                        std::pair<int, Rational>{6, Rational(2)}}) {
        ParamSet p = validate(n, a, a + Rational(1, 2), Rational(1, 2));
        BiLattice g = bi_lattice(p);
        for (int rank = 0; rank <= n; ++rank) {
            // Largest node first in s: sorted ascending means s = N - rank.
            Rational step = Rational(n - rank) / 2 + a;
            CHECK(g.nodes[static_cast<std::size_t>(g.sorted_order[static_cast<std::size_t>(rank)])].lambda ==
                  -step * step);
        }
    }
}

} // TEST_SUITE
