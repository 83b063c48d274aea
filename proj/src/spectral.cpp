#include "para_racah/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace pararacah {

const char* family_name(BiLattice::Family f) {
    return f == BiLattice::Family::a_family ? "A" : "C";
}

BiLattice bi_lattice(const ParamSet& p) {
    BiLattice grid;
    const int j = p.j;
    const int c_count = p.odd() ? j + 1 : j;
    grid.nodes.reserve(static_cast<std::size_t>(p.n_max) + 1);
    for (int s = 0; s <= j; ++s) {
        Rational fa = p.a + s;
        grid.nodes.push_back({BiLattice::Family::a_family, s, -fa * fa});
        if (s < c_count) {
            Rational fc = p.c + s;
            grid.nodes.push_back({BiLattice::Family::c_family, s, -fc * fc});
        }
    }
    grid.sorted_order.resize(grid.nodes.size());
    std::iota(grid.sorted_order.begin(), grid.sorted_order.end(), 0);
    std::sort(grid.sorted_order.begin(), grid.sorted_order.end(), [&](int x, int y) {
        return grid.nodes[static_cast<std::size_t>(x)].lambda < grid.nodes[static_cast<std::size_t>(y)].lambda;
    });
    for (std::size_t r = 1; r < grid.sorted_order.size(); ++r) {
        const auto& lo = grid.nodes[static_cast<std::size_t>(grid.sorted_order[r - 1])];
        const auto& hi = grid.nodes[static_cast<std::size_t>(grid.sorted_order[r])];
        if (lo.lambda == hi.lambda) {
            throw CollidingNodes("grid nodes " + std::string(family_name(lo.family)) +
                                 std::to_string(lo.s) + " and " + family_name(hi.family) +
                                 std::to_string(hi.s) + " coincide at lambda = " + to_string(lo.lambda));
        }
    }
    return grid;
}

namespace {

Rational kappa(const ParamSet& p) {
    const int j = p.j;
    const int N = p.n_max;
    if (p.odd()) {
        Rational num = pochhammer(p.a - p.c - j, N) * pochhammer(p.a + p.c, N);
        Rational den = Rational(2 * ((j + 1) % 2 == 0 ? 1 : -1)) * Rational(binomial(2 * j, j)) *
                       Rational(factorial(j));
        return num / den;
    }
    Rational num = pochhammer(p.a - p.c - j + 1, N) * pochhammer(p.a + p.c, N);
    Rational den = Rational(j % 2 == 0 ? 1 : -1) * Rational(binomial(2 * j, j));
    return num / den;
}

Rational odd_weight_a(const ParamSet& p, const Rational& kap, int s) {
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    Rational num = kap * pochhammer(Rational(-j), s) * pochhammer(2 * a, s) * pochhammer(a + 1, s) *
                   pochhammer(a - c - j, s) * pochhammer(a + c, s);
    Rational den = pochhammer(a + c, j + 1) * pochhammer(c - a, j + 1) * pochhammer(2 * a + 1, j) *
                   Rational(factorial(s)) * pochhammer(a, s) * pochhammer(2 * a + 1 + j, s) *
                   pochhammer(a - c + 1, s) * pochhammer(a + c + j + 1, s);
    return 2 * (1 - p.alpha) * num / den;
}

Rational odd_weight_c(const ParamSet& p, const Rational& kap, int s) {
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    Rational num = -kap * pochhammer(Rational(-j), s) * pochhammer(2 * c, s) * pochhammer(c + 1, s) *
                   pochhammer(c - a - j, s) * pochhammer(a + c, s);
    Rational den = pochhammer(a + c, j + 1) * pochhammer(a - c, j + 1) * pochhammer(2 * c + 1, j) *
                   Rational(factorial(s)) * pochhammer(c, s) * pochhammer(2 * c + 1 + j, s) *
                   pochhammer(c - a + 1, s) * pochhammer(a + c + j + 1, s);
    return 2 * p.alpha * num / den;
}

Rational even_weight_a(const ParamSet& p, const Rational& kap, int s) {
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    Rational num = 2 * (1 - p.alpha) * kap * pochhammer(Rational(-j), s) * pochhammer(2 * a, s) *
                   pochhammer(a + 1, s) * pochhammer(a - c - j + 1, s) * pochhammer(a + c, s);
    Rational den = Rational(factorial(j)) * pochhammer(a + c, j) * pochhammer(c - a, j) *
                   pochhammer(2 * a + 1, j) * pochhammer(a, s) * Rational(factorial(s)) *
                   pochhammer(2 * a + 1 + j, s) * pochhammer(a - c + 1, s) * pochhammer(a + c + j, s);
    return num / den;
}

Rational even_weight_c(const ParamSet& p, const Rational& kap, int s) {
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    Rational num = -2 * p.alpha * kap * pochhammer(Rational(-j + 1), s) * pochhammer(2 * c, s) *
                   pochhammer(c + 1, s) * pochhammer(c - a - j, s) * pochhammer(a + c, s);
    Rational den = Rational(factorial(j - 1)) * pochhammer(a + c, j + 1) * pochhammer(a - c, j + 1) *
                   pochhammer(2 * c + 1, j - 1) * pochhammer(c, s) * Rational(factorial(s)) *
                   pochhammer(2 * c + j, s) * pochhammer(c - a + 1, s) * pochhammer(a + c + j + 1, s);
    return num / den;
}

} // namespace

std::vector<Rational> weights_closed_form(const ParamSet& p) {
    BiLattice grid = bi_lattice(p);
    const Rational kap = kappa(p);
    std::vector<Rational> w;
    w.reserve(grid.nodes.size());
    for (const auto& node : grid.nodes) {
        if (node.family == BiLattice::Family::a_family) {
            w.push_back(p.odd() ? odd_weight_a(p, kap, node.s) : even_weight_a(p, kap, node.s));
        } else {
            w.push_back(p.odd() ? odd_weight_c(p, kap, node.s) : even_weight_c(p, kap, node.s));
        }
    }
    return w;
}

std::vector<Rational> weights_spectral(const ParamSet& p, const RecurrenceTable& table) {
    BiLattice grid = bi_lattice(p);
    const int N = p.n_max;
    Rational u_product(1);
    for (int n = 1; n <= N; ++n) u_product *= table.u[static_cast<std::size_t>(n)];

    std::vector<Rational> w;
    w.reserve(grid.nodes.size());
    for (int s = 0; s <= N; ++s) {
        const Rational& x = grid.nodes[static_cast<std::size_t>(s)].lambda;
        Rational pn = eval_poly(table, N, x);
        if (pn == 0) {
            throw ZeroAtNode("P_N vanishes at node " + std::to_string(s) +
                             "; use the closed-form weights (alpha is 0 or 1)");
        }
        // P'_{N+1}(x_s) from the product over nodes: only the term dropping
        // the vanishing factor survives.
        Rational dp(1);
        for (int t = 0; t <= N; ++t) {
            if (t != s) dp *= x - grid.nodes[static_cast<std::size_t>(t)].lambda;
        }
        w.push_back(u_product / (pn * dp));
    }
    return w;
}

std::vector<Rational> weights_spectral(const ParamSet& p) {
    return weights_spectral(p, recurrence_table(p));
}

std::vector<std::vector<Rational>> gram_matrix(const ParamSet& p, const RecurrenceTable& table) {
    BiLattice grid = bi_lattice(p);
    std::vector<Rational> w = weights_closed_form(p);
    const int N = p.n_max;

    // P_n(x_s) for all degrees at every node, one recurrence pass per node.
    std::vector<std::vector<Rational>> values;
    values.reserve(grid.nodes.size());
    for (const auto& node : grid.nodes) values.push_back(eval_poly_sequence(table, node.lambda));

    std::vector<std::vector<Rational>> gram(static_cast<std::size_t>(N) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(0)));
    for (int n = 0; n <= N; ++n) {
        for (int m = n; m <= N; ++m) {
            Rational acc(0);
            for (int s = 0; s <= N; ++s) {
                acc += values[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)] *
                       values[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)] *
                       w[static_cast<std::size_t>(s)];
            }
            gram[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = acc;
            gram[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = acc;
        }
    }
    return gram;
}

std::vector<std::vector<Rational>> gram_matrix(const ParamSet& p) {
    return gram_matrix(p, recurrence_table(p));
}

OrthogonalityReport orthogonality_check(const ParamSet& p, const RecurrenceTable& table) {
    const int N = p.n_max;
    auto gram = gram_matrix(p, table);

    OrthogonalityReport report;
    report.offdiag_zero = true;
    report.diag_match = true;
    report.max_offdiag_abs = 0;
    report.max_diag_ratio_error = 0;

    Rational expected(1);
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) expected *= table.u[static_cast<std::size_t>(n)];
        const Rational& d = gram[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
        if (d != expected) {
            report.diag_match = false;
            if (report.first_bad_row < 0) {
                report.first_bad_row = n;
                report.first_bad_col = n;
            }
        }
        if (expected != 0) {
            Rational err = abs(d / expected - 1);
            report.max_diag_ratio_error = std::max(report.max_diag_ratio_error, err);
        }
        for (int m = n + 1; m <= N; ++m) {
            const Rational& g = gram[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            if (g != 0) {
                report.offdiag_zero = false;
                if (report.first_bad_row < 0) {
                    report.first_bad_row = n;
                    report.first_bad_col = m;
                }
            }
            Rational ag = abs(g);
            if (ag > report.max_offdiag_abs) report.max_offdiag_abs = ag;
        }
    }
    return report;
}

OrthogonalityReport orthogonality_check(const ParamSet& p) {
    return orthogonality_check(p, recurrence_table(p));
}

PersymmetricNodeValues persymmetric_node_values(const ParamSet& p, const RecurrenceTable& table) {
    if (p.alpha != Rational(1, 2)) {
        throw Error(Errc::internal, "persymmetric node values are defined at alpha = 1/2 only");
    }
    BiLattice grid = bi_lattice(p);
    const int N = p.n_max;
    Rational u_product(1);
    for (int n = 1; n <= N; ++n) u_product *= table.u[static_cast<std::size_t>(n)];

    PersymmetricNodeValues result;
    result.squares_match = true;
    result.alternating_sorted = true;

    std::vector<int> signs;
    signs.reserve(grid.nodes.size());
    for (int rank = 0; rank <= N; ++rank) {
        const auto& node = grid.nodes[static_cast<std::size_t>(grid.sorted_order[static_cast<std::size_t>(rank)])];
        Rational v = eval_poly(table, N, node.lambda);
        if (v * v != u_product) result.squares_match = false;
        signs.push_back(sgn(v));
    }
    for (std::size_t r = 1; r < signs.size(); ++r) {
        if (signs[r] == 0 || signs[r] == signs[r - 1]) result.alternating_sorted = false;
    }
    result.sign_at_top = signs.empty() ? 0 : signs.back();
    return result;
}

PersymmetricNodeValues persymmetric_node_values(const ParamSet& p) {
    return persymmetric_node_values(p, recurrence_table(p));
}

} // namespace pararacah
