#include "para_racah/degenerations.hpp"

#include <cmath>
#include <limits>

#include "para_racah/spectral.hpp"

namespace pararacah {

namespace {

int parity_j(int n) { return (n % 2 == 1) ? (n - 1) / 2 : n / 2; }

Rational sign_of(int exponent) { return Rational(exponent % 2 == 0 ? 1 : -1); }

} // namespace

ParaKrawtchoukTarget pk_limit_coefficients(int n, const Rational& delta) {
    if (n < 1) throw RegimeViolation("N must be >= 1, got " + std::to_string(n));
    ParaKrawtchoukTarget t;
    t.n_max = n;
    t.delta = delta;
    const bool odd = (n % 2 == 1);
    const Rational base = Rational(n - 1 + 2 * delta) / 2;
    for (int m = 0; m <= n; ++m) {
        if (odd) {
            t.coeffs.b.push_back(base);
        } else {
            Rational corr = (2 * delta - 1) * (n + 1) / 4 *
                            (Rational(1) / (2 * m - n - 1) - Rational(1) / (2 * m - n + 1));
            t.coeffs.b.push_back(base + corr);
        }
    }
    for (int m = 1; m <= n; ++m) {
        if (odd) {
            t.coeffs.u.push_back(Rational(m) * (n + 1 - m) * (2 * m - n - 1 - 2 * delta) *
                                 (2 * m - n - 1 + 2 * delta) /
                                 Rational(4 * (2 * m - n) * (2 * m - n - 2)));
        } else {
            t.coeffs.u.push_back(Rational(m) * (n + 1 - m) * (2 * m - n - 2 * delta) *
                                 (2 * m - n - 2 + 2 * delta) /
                                 Rational(4 * (2 * m - n - 1) * (2 * m - n - 1)));
        }
    }
    return t;
}

std::vector<Rational> pk_node_targets(int n, const Rational& delta) {
    const int j = parity_j(n);
    const int c_count = (n % 2 == 1) ? j + 1 : j;
    std::vector<Rational> targets;
    targets.reserve(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= j; ++s) {
        targets.push_back(Rational(2 * s));
        if (s < c_count) targets.push_back(2 * s + 2 * delta);
    }
    return targets;
}

std::vector<Rational> pk_weights(int n, const Rational& delta) {
    const int j = parity_j(n);
    const bool odd = (n % 2 == 1);
    const int c_count = odd ? j + 1 : j;
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(n) + 1);
    const Rational bc = Rational(binomial(2 * j, j));
    for (int s = 0; s <= j; ++s) {
        if (odd) {
            Rational num = pochhammer(-delta - j, n) * pochhammer(Rational(-j), s) *
                           pochhammer(-delta - j, s);
            Rational den = 2 * sign_of(j + 1) * bc * Rational(factorial(s)) *
                           Rational(factorial(j)) * pochhammer(delta, j + 1) *
                           pochhammer(1 - delta, s);
            w.push_back(num / den);
        } else {
            Rational num = pochhammer(-delta - j + 1, n) * pochhammer(Rational(-j), s) *
                           pochhammer(-delta - j + 1, s);
            Rational den = sign_of(j) * bc * Rational(factorial(s)) * Rational(factorial(j)) *
                           pochhammer(delta, j) * pochhammer(1 - delta, s);
            w.push_back(num / den);
        }
        if (s < c_count) {
            if (odd) {
                Rational num = pochhammer(-delta - j, n) * pochhammer(Rational(-j), s) *
                               pochhammer(delta - j, s);
                Rational den = 2 * sign_of(j) * bc * Rational(factorial(s)) *
                               Rational(factorial(j)) * pochhammer(-delta, j + 1) *
                               pochhammer(1 + delta, s);
                w.push_back(num / den);
            } else {
                Rational num = pochhammer(-delta - j + 1, n) * pochhammer(Rational(-j + 1), s) *
                               pochhammer(delta - j, s);
                Rational den = sign_of(j + 1) * bc * Rational(factorial(s)) *
                               Rational(factorial(j - 1)) * pochhammer(-delta, j + 1) *
                               pochhammer(1 + delta, s);
                w.push_back(num / den);
            }
        }
    }
    return w;
}

namespace {

double fit_order(const std::vector<std::pair<long, double>>& points) {
    // Least-squares slope of log(err) vs log(theta); order is its negative.
    std::vector<std::pair<double, double>> logs;
    for (const auto& [theta, err] : points) {
        if (err > 1e-14) logs.emplace_back(std::log(static_cast<double>(theta)), std::log(err));
    }
    if (logs.size() < 2) return std::numeric_limits<double>::infinity();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : logs) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(logs.size());
    return -(m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace

PkStudy pk_convergence_study(int n, const Rational& delta, long theta_min, long theta_max) {
    if (theta_min < 2 || theta_max < theta_min) {
        throw Error(Errc::internal, "bad theta range");
    }
    PkStudy study;
    study.n_max = n;
    study.delta = delta;

    const ParaKrawtchoukTarget target = pk_limit_coefficients(n, delta);
    const std::vector<Rational> node_targets = pk_node_targets(n, delta);
    const std::vector<Rational> weight_targets = pk_weights(n, delta);
    const Rational half(1, 2);

    std::vector<std::pair<long, double>> eb, eu, eg, ew;
    for (long theta = theta_min; theta <= theta_max; theta *= 2) {
        const Rational a = (theta - delta) / 2;
        const Rational c = (theta + delta) / 2;
        ParamSet p = validate(n, a, c, half); // RegimeViolation propagates at small theta
        RecurrenceTable table = recurrence_table(p);
        const Rational a2 = a * a;

        PkStudyRow row;
        row.theta = theta;
        for (int m = 0; m <= n; ++m) {
            Rational scaled = -(2 * table.b[static_cast<std::size_t>(m)] + 2 * a2) / theta;
            double err = std::abs(to_double(scaled - target.coeffs.b[static_cast<std::size_t>(m)]));
            row.coeff_b_error = std::max(row.coeff_b_error, err);
        }
        for (int m = 1; m <= n; ++m) {
            Rational scaled = 4 * table.u[static_cast<std::size_t>(m)] / (Rational(theta) * theta);
            double err = std::abs(to_double(scaled - target.coeffs.u[static_cast<std::size_t>(m - 1)]));
            row.coeff_u_error = std::max(row.coeff_u_error, err);
        }
        BiLattice grid = bi_lattice(p);
        for (int s = 0; s <= n; ++s) {
            Rational scaled = -2 * (grid.nodes[static_cast<std::size_t>(s)].lambda + a2) / theta;
            double err = std::abs(to_double(scaled - node_targets[static_cast<std::size_t>(s)]));
            row.grid_error = std::max(row.grid_error, err);
        }
        std::vector<Rational> w = weights_closed_form(p);
        for (int s = 0; s <= n; ++s) {
            Rational rel = w[static_cast<std::size_t>(s)] / weight_targets[static_cast<std::size_t>(s)] - 1;
            row.weight_error = std::max(row.weight_error, std::abs(to_double(rel)));
        }
        study.rows.push_back(row);
        eb.emplace_back(theta, row.coeff_b_error);
        eu.emplace_back(theta, row.coeff_u_error);
        eg.emplace_back(theta, row.grid_error);
        ew.emplace_back(theta, row.weight_error);
    }
    study.order_b = fit_order(eb);
    study.order_u = fit_order(eu);
    study.order_grid = fit_order(eg);
    study.order_weights = fit_order(ew);
    return study;
}

MonicTable dual_hahn_monic(int n, const Rational& gamma, const Rational& delta) {
    auto coeff_a = [&](int m) -> Rational { return (m + gamma + 1) * Rational(m - n); };
    auto coeff_c = [&](int m) -> Rational { return Rational(m) * (m - delta - n - 1); };
    MonicTable t;
    for (int m = 0; m <= n; ++m) t.b.push_back(-(coeff_a(m) + coeff_c(m)));
    for (int m = 1; m <= n; ++m) t.u.push_back(coeff_a(m - 1) * coeff_c(m));
    return t;
}

MonicTable affine_transform(const RecurrenceTable& table, const Rational& p, const Rational& q) {
    if (p == 0) throw Error(Errc::internal, "affine map needs p != 0");
    MonicTable t;
    const int n = table.n_max();
    const Rational p2 = p * p;
    for (int m = 0; m <= n; ++m) t.b.push_back((table.b[static_cast<std::size_t>(m)] - q) / p);
    for (int m = 1; m <= n; ++m) t.u.push_back(table.u[static_cast<std::size_t>(m)] / p2);
    return t;
}

DualHahnReport dual_hahn_check(int n, const Rational& a) {
    DualHahnReport report;
    report.n_max = n;
    report.a = a;
    report.gamma = (4 * a - 1) / 2;

    ParamSet p = validate(n, a, a + Rational(1, 2), Rational(1, 2));
    RecurrenceTable table = recurrence_table(p);
    report.transformed = affine_transform(table, Rational(-1, 4), -a * a);
    report.reference = dual_hahn_monic(n, report.gamma, report.gamma);

    report.match = true;
    for (int m = 0; m <= n; ++m) {
        bool b_ok = report.transformed.b[static_cast<std::size_t>(m)] ==
                    report.reference.b[static_cast<std::size_t>(m)];
        bool u_ok = m == 0 || report.transformed.u[static_cast<std::size_t>(m - 1)] ==
                                  report.reference.u[static_cast<std::size_t>(m - 1)];
        if (!(b_ok && u_ok)) {
            report.match = false;
            report.first_mismatch = m;
            break;
        }
    }
    return report;
}

} // namespace pararacah
