#include "para_racah/certify.hpp"

#include <cmath>
#include <functional>

#include "para_racah/bispectral.hpp"
#include "para_racah/explicit_form.hpp"
#include "para_racah/spectral.hpp"

namespace pararacah {

namespace {

using Check = std::function<std::string()>; // returns "" on pass, reason on fail

void run_check(std::vector<CheckResult>& out, const std::string& name, const Check& check) {
    CheckResult r;
    r.name = name;
    try {
        std::string reason = check();
        r.pass = reason.empty();
        r.detail = r.pass ? "ok" : reason;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    out.push_back(r);
}

std::string check_coefficient_paths(const ParamSet& p, const RecurrenceTable& t) {
    RecurrenceTable w = recurrence_table_from_wilson(p);
    for (int n = 0; n <= p.n_max; ++n) {
        if (t.b[static_cast<std::size_t>(n)] != w.b[static_cast<std::size_t>(n)]) {
            return "b_" + std::to_string(n) + " = " + to_string(t.b[static_cast<std::size_t>(n)]) +
                   " differs from A_n+C_n-a^2 = " + to_string(w.b[static_cast<std::size_t>(n)]);
        }
    }
    for (int n = 1; n <= p.n_max + 1; ++n) {
        if (t.u[static_cast<std::size_t>(n)] != w.u[static_cast<std::size_t>(n)]) {
            return "u_" + std::to_string(n) + " = " + to_string(t.u[static_cast<std::size_t>(n)]) +
                   " differs from A_{n-1}C_n = " + to_string(w.u[static_cast<std::size_t>(n)]);
        }
    }
    return "";
}

std::string check_positivity(const ParamSet& p, const RecurrenceTable& t) {
    for (int n = 1; n <= p.n_max; ++n) {
        const Rational& u = t.u[static_cast<std::size_t>(n)];
        bool may_vanish = p.alpha_degenerate &&
                          (p.odd() ? n == p.j + 1 : (p.alpha == 0 ? n == p.j + 1 : n == p.j));
        if (may_vanish ? u != 0 : u <= 0) {
            return "u_" + std::to_string(n) + " = " + to_string(u) + " breaks the positivity pattern";
        }
    }
    return "";
}

std::string check_persymmetry(const ParamSet& p, const RecurrenceTable& t) {
    const int N = p.n_max;
    for (int n = 0; n <= N; ++n) {
        if (t.b[static_cast<std::size_t>(n)] != t.b[static_cast<std::size_t>(N - n)]) {
            return "b_" + std::to_string(n) + " != b_" + std::to_string(N - n);
        }
    }
    for (int n = 1; n <= N; ++n) {
        if (t.u[static_cast<std::size_t>(n)] != t.u[static_cast<std::size_t>(N - n + 1)]) {
            return "u_" + std::to_string(n) + " != u_" + std::to_string(N - n + 1);
        }
    }
    return "";
}

// Entrywise comparison against the alpha = 1/2 table. Only the middle rows
// move, and they move by the exact factors 4a(1-a) (odd N, u_{j+1}) resp.
// 2(1-a), 2a (even N, u_j and u_{j+1}); odd-N b_j, b_{j+1} trade alpha for
// 1-alpha while every even-N b_n is alpha-free.
std::string check_alpha_perturbation(const ParamSet& p, const RecurrenceTable& t) {
    ParamSet mirror = p;
    mirror.alpha = Rational(1, 2);
    mirror.alpha_degenerate = false;
    RecurrenceTable half = recurrence_table(mirror);
    const int N = p.n_max;
    const int j = p.j;
    const Rational al = p.alpha;

    for (int n = 0; n <= N; ++n) {
        bool movable = p.odd() && (n == j || n == j + 1);
        if (!movable && t.b[static_cast<std::size_t>(n)] != half.b[static_cast<std::size_t>(n)]) {
            return "b_" + std::to_string(n) + " moved away from the alpha=1/2 table";
        }
    }
    if (p.odd()) {
        Rational shift = (al - Rational(1, 2)) * (p.a - p.c) * (1 + j) * (p.a + p.c + j);
        if (t.b[static_cast<std::size_t>(j)] != half.b[static_cast<std::size_t>(j)] + shift) {
            return "b_j does not carry the alpha shift";
        }
        if (t.b[static_cast<std::size_t>(j) + 1] != half.b[static_cast<std::size_t>(j) + 1] - shift) {
            return "b_{j+1} does not carry the alpha shift";
        }
    }
    for (int n = 1; n <= N; ++n) {
        Rational expected = half.u[static_cast<std::size_t>(n)];
        if (p.odd() && n == j + 1) {
            expected *= 4 * al * (1 - al);
        } else if (!p.odd() && n == j) {
            expected *= 2 * (1 - al);
        } else if (!p.odd() && n == j + 1) {
            expected *= 2 * al;
        }
        if (t.u[static_cast<std::size_t>(n)] != expected) {
            return "u_" + std::to_string(n) + " does not match the alpha-scaling law";
        }
    }
    return "";
}

std::vector<Rational> sample_lambdas(int count) {
    std::vector<Rational> xs;
    for (int i = 0; i < count; ++i) xs.push_back(Rational(3 * i - 2) + Rational(i % 5) / 7);
    return xs;
}

std::string check_evaluation_paths(const ParamSet& p, const RecurrenceTable& t) {
    const int n_top = (p.alpha == 0) ? p.j : p.n_max;
    for (const Rational& lambda : sample_lambdas(6)) {
        for (int n = 0; n <= n_top; ++n) {
            if (eval_explicit(p, n, lambda) != eval_poly(t, n, lambda)) {
                return "P_" + std::to_string(n) + "(" + to_string(lambda) +
                       "): explicit and recurrence paths differ";
            }
        }
    }
    return "";
}

std::string check_characteristic_polynomial(const ParamSet& p, const RecurrenceTable& t) {
    for (const Rational& lambda : sample_lambdas(p.n_max + 2)) {
        if (eval_poly(t, p.n_max + 1, lambda) != char_poly_explicit(p, lambda)) {
            return "P_{N+1}(" + to_string(lambda) + ") differs from the product form";
        }
    }
    for (const auto& node : bi_lattice(p).nodes) {
        if (eval_poly(t, p.n_max + 1, node.lambda) != 0) {
            return "P_{N+1} does not vanish at node lambda = " + to_string(node.lambda);
        }
    }
    return "";
}

std::string check_grid(const ParamSet& p) {
    BiLattice grid = bi_lattice(p); // throws CollidingNodes on repeats
    if (grid.size() != p.n_max + 1) return "grid has wrong cardinality";
    return "";
}

std::string check_weights(const ParamSet& p, const RecurrenceTable& t) {
    BiLattice grid = bi_lattice(p);
    std::vector<Rational> closed = weights_closed_form(p);
    Rational sum_a(0), sum_c(0);
    for (int s = 0; s <= p.n_max; ++s) {
        const bool a_fam = grid.nodes[static_cast<std::size_t>(s)].family == BiLattice::Family::a_family;
        (a_fam ? sum_a : sum_c) += closed[static_cast<std::size_t>(s)];
    }
    if (sum_a != 1 - p.alpha) return "A-family weights sum to " + to_string(sum_a);
    if (sum_c != p.alpha) return "C-family weights sum to " + to_string(sum_c);
    if (p.alpha_degenerate) {
        for (int s = 0; s <= p.n_max; ++s) {
            const bool a_fam = grid.nodes[static_cast<std::size_t>(s)].family == BiLattice::Family::a_family;
            const bool should_vanish = (p.alpha == 0) ? !a_fam : a_fam;
            const Rational& w = closed[static_cast<std::size_t>(s)];
            if (should_vanish ? w != 0 : w <= 0) {
                return "weight " + std::to_string(s) + " = " + to_string(w) +
                       " breaks the degenerate-alpha pattern";
            }
        }
        return "";
    }
    std::vector<Rational> spectral = weights_spectral(p, t);
    for (int s = 0; s <= p.n_max; ++s) {
        if (closed[static_cast<std::size_t>(s)] <= 0) {
            return "weight " + std::to_string(s) + " is not positive";
        }
        if (closed[static_cast<std::size_t>(s)] != spectral[static_cast<std::size_t>(s)]) {
            return "closed-form and spectral weights differ at node " + std::to_string(s);
        }
    }
    return "";
}

std::string check_orthogonality(const ParamSet& p, const RecurrenceTable& t) {
    OrthogonalityReport r = orthogonality_check(p, t);
    if (!r.exact()) {
        return "Gram matrix deviates at (" + std::to_string(r.first_bad_row) + ", " +
               std::to_string(r.first_bad_col) + ")";
    }
    return "";
}

std::string check_bispectrality(const ParamSet& p, const RecurrenceTable& t) {
    const Rational xs[] = {Rational(1, 2), Rational(3, 2), Rational(-1, 3), Rational(7, 5),
                           Rational(5, 2)};
    for (const Rational& x : xs) {
        std::vector<Gaussian> res = difference_residuals(p, t, x);
        for (int n = 0; n <= p.n_max; ++n) {
            if (!res[static_cast<std::size_t>(n)].is_zero()) {
                return "difference residual nonzero at n = " + std::to_string(n) +
                       ", x = " + to_string(x);
            }
        }
    }
    return "";
}

std::string check_spectrum(const ParamSet& p, const RecurrenceTable& t) {
    std::vector<double> eig = eigenvalues(jacobi_matrix(t));
    BiLattice grid = bi_lattice(p);
    for (int r = 0; r <= p.n_max; ++r) {
        double node = to_double(
            grid.nodes[static_cast<std::size_t>(grid.sorted_order[static_cast<std::size_t>(r)])].lambda);
        if (std::abs(eig[static_cast<std::size_t>(r)] - node) > 1e-10) {
            return "eigenvalue " + std::to_string(r) + " deviates from the grid by more than 1e-10";
        }
    }
    return "";
}

std::string check_degeneracy_pattern(const ParamSet& p) {
    auto mult = spectrum_degeneracy(p);
    const int expected_levels = p.odd() ? (p.n_max + 1) / 2 : p.n_max / 2 + 1;
    if (static_cast<int>(mult.size()) != expected_levels) return "wrong number of distinct levels";
    for (const auto& [ev, m] : mult) {
        const bool middle = !p.odd() && ev == -static_cast<long>(p.j) * p.j;
        if (m != (middle ? 1 : 2)) {
            return "eigenvalue " + std::to_string(ev) + " has multiplicity " + std::to_string(m);
        }
    }
    return "";
}

std::string check_node_values(const ParamSet& p, const RecurrenceTable& t) {
    PersymmetricNodeValues v = persymmetric_node_values(p, t);
    if (!v.squares_match) return "P_N(x_s)^2 != u_1...u_N at some node";
    if (!v.alternating_sorted) return "P_N signs do not alternate along the sorted grid";
    return "";
}

std::string check_block_structure(const ParamSet& p, const RecurrenceTable& t) {
    auto [first, second] = block_split(p);
    if (first + second != p.n_max + 1) return "block sizes do not add up";
    const int zero_index = first; // u_{first} couples the blocks
    for (int n = 1; n <= p.n_max; ++n) {
        const Rational& u = t.u[static_cast<std::size_t>(n)];
        if (n == zero_index ? u != 0 : u <= 0) {
            return "u_" + std::to_string(n) + " breaks the block pattern";
        }
    }
    return "";
}

std::vector<CheckResult> certify_impl(const ParamSet& p, const RecurrenceTable& t) {
    std::vector<CheckResult> results;
    run_check(results, "coefficient-paths", [&] { return check_coefficient_paths(p, t); });
    run_check(results, "positivity", [&] { return check_positivity(p, t); });
    if (p.alpha == Rational(1, 2)) {
        run_check(results, "persymmetry", [&] { return check_persymmetry(p, t); });
    }
    run_check(results, "alpha-perturbation", [&] { return check_alpha_perturbation(p, t); });
    run_check(results, "evaluation-paths", [&] { return check_evaluation_paths(p, t); });
    run_check(results, "characteristic-polynomial",
              [&] { return check_characteristic_polynomial(p, t); });
    run_check(results, "grid-nodes", [&] { return check_grid(p); });
    run_check(results, "weights", [&] { return check_weights(p, t); });
    run_check(results, "orthogonality", [&] { return check_orthogonality(p, t); });
    run_check(results, "bispectrality", [&] { return check_bispectrality(p, t); });
    run_check(results, "spectrum", [&] { return check_spectrum(p, t); });
    run_check(results, "degeneracy-pattern", [&] { return check_degeneracy_pattern(p); });
    if (p.alpha == Rational(1, 2)) {
        run_check(results, "pn-node-values", [&] { return check_node_values(p, t); });
    }
    if (p.alpha_degenerate) {
        run_check(results, "block-structure", [&] { return check_block_structure(p, t); });
    }
    return results;
}

} // namespace

std::vector<CheckResult> certify(const ParamSet& params) {
    return certify_impl(params, recurrence_table(params));
}

std::vector<CheckResult> certify(const ParamSet& params, const RecurrenceTable& table) {
    return certify_impl(params, table);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

} // namespace pararacah
