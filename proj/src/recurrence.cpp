#include "para_racah/recurrence.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace pararacah {

namespace {

void check_coeff_index(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi) {
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(n) + " outside [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

} // namespace

Rational wilson_a(const ParamSet& p, int n) {
    check_coeff_index(n, 0, p.n_max, "A_n");
    const int N = p.n_max;
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    if (p.odd()) {
        if (n == j) return p.alpha * (j + 1) * (j + a + c) * (a - c);
        return Rational(n - N) * (n + a + c) * (n + a - c - j) / (2 * (2 * n - N));
    }
    if (n == j) return p.alpha * j * (j + a + c) * (c - a - 1);
    return Rational(n - N) * (n + a + c) * (n + a - c - j + 1) / (2 * (2 * n + 1 - N));
}

Rational wilson_c(const ParamSet& p, int n) {
    check_coeff_index(n, 0, p.n_max + 1, "C_n");
    const int N = p.n_max;
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    if (p.odd()) {
        if (n == j + 1) return (1 - p.alpha) * (j + 1) * (j + a + c) * (a - c);
        return Rational(n) * (n - j - 1 - a + c) * (n - N - a - c) * (n - j - 1) /
               Rational((2 * n - 1 - N) * (2 * n - N));
    }
    if (n == j) return (1 - p.alpha) * j * (j + a + c) * (c - a - 1);
    return Rational(n) * (n - N - a - c) * (n - j - 1 + c - a) / (2 * (2 * n - 1 - N));
}

std::pair<Rational, Rational> wilson_ac(const ParamSet& p, int n) {
    return {wilson_a(p, n), wilson_c(p, n)};
}

namespace {

Rational b_closed(const ParamSet& p, int n) {
    const int N = p.n_max;
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    if (p.odd()) {
        if (n == j || n == j + 1) {
            const Rational& w = (n == j) ? p.alpha : 1 - p.alpha;
            return -a * a - Rational(j) * (1 + a - c) * (1 + a + c + j) / 2 +
                   w * (a - c) * (1 + j) * (a + c + j);
        }
        return -(a * (a + j) + c * (c + j) + n * (N - n)) / 2;
    }
    // Even N: a single display valid at every n. Its integer denominators
    // 2n+1-N and 2n-1-N are odd, hence never zero for even N.
    assert((2 * n + 1 - N) % 2 != 0 && (2 * n - 1 - N) % 2 != 0);
    return Rational(n - N) * (n + a + c) * (n + a - c - j + 1) / (2 * (2 * n + 1 - N)) +
           Rational(n) * (n - N - a - c) * (n - j - 1 + c - a) / (2 * (2 * n - 1 - N)) - a * a;
}

Rational u_closed(const ParamSet& p, int n) {
    const int N = p.n_max;
    const int j = p.j;
    const Rational& a = p.a;
    const Rational& c = p.c;
    if (p.odd()) {
        if (n == j + 1) {
            return p.alpha * (1 - p.alpha) * (a - c) * (a - c) * (1 + j) * (1 + j) *
                   (a + c + j) * (a + c + j);
        }
        return Rational(n) * (N + 1 - n) * (N - n + a + c) * (n - 1 + a + c) *
               (Rational((n - j - 1) * (n - j - 1)) - (a - c) * (a - c)) /
               Rational(4 * (N - 2 * n) * (N - 2 * n + 2));
    }
    if (n == j || n == j + 1) {
        const Rational& w = (n == j) ? 1 - p.alpha : p.alpha;
        return -w * j * (j + 1) * (a - c) * (a - c + 1) * (a + c + j - 1) * (a + c + j) / 2;
    }
    return Rational(n) * (2 * j - n + 1) * (a + c + n - 1) * (a - c + j - n + 1) *
           (-a + c + j - n) * (a + c + 2 * j - n) / Rational(4 * (N - 2 * n + 1) * (N - 2 * n + 1));
}

} // namespace

RecurrenceTable recurrence_table(const ParamSet& p) {
    RecurrenceTable t;
    const int N = p.n_max;
    t.b.reserve(static_cast<std::size_t>(N) + 1);
    t.u.assign(static_cast<std::size_t>(N) + 2, Rational(0));
    for (int n = 0; n <= N; ++n) t.b.push_back(b_closed(p, n));
    for (int n = 1; n <= N; ++n) t.u[static_cast<std::size_t>(n)] = u_closed(p, n);
    return t;
}

RecurrenceTable recurrence_table_from_wilson(const ParamSet& p) {
    RecurrenceTable t;
    const int N = p.n_max;
    t.b.reserve(static_cast<std::size_t>(N) + 1);
    t.u.assign(static_cast<std::size_t>(N) + 2, Rational(0));
    Rational a_prev;
    for (int n = 0; n <= N; ++n) {
        auto [an, cn] = wilson_ac(p, n);
        t.b.push_back(an + cn - p.a * p.a);
        if (n >= 1) t.u[static_cast<std::size_t>(n)] = a_prev * cn;
        a_prev = an;
    }
    // Truncation: u_{N+1} = A_N C_{N+1} with A_N = 0.
    t.u[static_cast<std::size_t>(N) + 1] = a_prev * wilson_c(p, N + 1);
    return t;
}

namespace {

template <typename Scalar>
std::vector<Scalar> eval_sequence_impl(const RecurrenceTable& table, const Scalar& lambda) {
    const int N = table.n_max();
    std::vector<Scalar> p;
    p.reserve(static_cast<std::size_t>(N) + 2);
    p.push_back(Scalar(Rational(1)));
    for (int n = 0; n <= N; ++n) {
        Scalar next = (lambda - Scalar(table.b[static_cast<std::size_t>(n)])) * p.back();
        if (n >= 1) {
            next = next - Scalar(table.u[static_cast<std::size_t>(n)]) * p[static_cast<std::size_t>(n) - 1];
        }
        p.push_back(std::move(next));
    }
    return p;
}

} // namespace

std::vector<Rational> eval_poly_sequence(const RecurrenceTable& table, const Rational& lambda) {
    return eval_sequence_impl<Rational>(table, lambda);
}

std::vector<Gaussian> eval_poly_sequence(const RecurrenceTable& table, const Gaussian& lambda) {
    return eval_sequence_impl<Gaussian>(table, lambda);
}

namespace {

void check_eval_index(const RecurrenceTable& table, int n) {
    if (n < 0 || n > table.n_max() + 1) {
        throw IndexOutOfRange("polynomial degree " + std::to_string(n) + " outside [0, N+1]");
    }
}

} // namespace

Rational eval_poly(const RecurrenceTable& table, int n, const Rational& lambda) {
    check_eval_index(table, n);
    Rational prev(0), cur(1);
    for (int m = 0; m < n; ++m) {
        Rational next = (lambda - table.b[static_cast<std::size_t>(m)]) * cur -
                        table.u[static_cast<std::size_t>(m)] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Gaussian eval_poly(const RecurrenceTable& table, int n, const Gaussian& lambda) {
    check_eval_index(table, n);
    Gaussian prev, cur(Rational(1), Rational(0));
    for (int m = 0; m < n; ++m) {
        Gaussian next = (lambda - Gaussian(table.b[static_cast<std::size_t>(m)])) * cur -
                        Gaussian(table.u[static_cast<std::size_t>(m)]) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

TridiagonalMatrix jacobi_matrix(const RecurrenceTable& table) {
    TridiagonalMatrix m;
    const int N = table.n_max();
    m.diag.reserve(static_cast<std::size_t>(N) + 1);
    m.offdiag.reserve(static_cast<std::size_t>(N));
    for (int n = 0; n <= N; ++n) m.diag.push_back(to_double(table.b[static_cast<std::size_t>(n)]));
    for (int n = 1; n <= N; ++n) {
        const Rational& u = table.u[static_cast<std::size_t>(n)];
        if (u < 0) {
            throw NegativeOffdiagonal("u_" + std::to_string(n) + " = " + to_string(u) +
                                      " < 0; no real Jacobi matrix");
        }
        m.offdiag.push_back(std::sqrt(to_double(u)));
    }
    return m;
}

TridiagonalMatrix jacobi_matrix(const ParamSet& params) {
    return jacobi_matrix(recurrence_table(params));
}

std::vector<double> eigenvalues(const TridiagonalMatrix& matrix) {
    const int n = matrix.size();
    if (n == 0) return {};
    std::vector<double> e2(static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i < n; ++i) {
        e2[static_cast<std::size_t>(i)] =
            matrix.offdiag[static_cast<std::size_t>(i - 1)] * matrix.offdiag[static_cast<std::size_t>(i - 1)];
    }

    // Gershgorin interval containing the whole spectrum.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(matrix.offdiag[static_cast<std::size_t>(i - 1)]);
        if (i + 1 < n) r += std::abs(matrix.offdiag[static_cast<std::size_t>(i)]);
        lo = std::min(lo, matrix.diag[static_cast<std::size_t>(i)] - r);
        hi = std::max(hi, matrix.diag[static_cast<std::size_t>(i)] + r);
    }
    lo = std::nexttoward(lo, -std::numeric_limits<long double>::infinity());
    hi = std::nexttoward(hi, std::numeric_limits<long double>::infinity());

    double e2max = 1.0;
    for (int i = 1; i < n; ++i) e2max = std::max(e2max, e2[static_cast<std::size_t>(i)]);
    const double pivmin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon() * e2max;

    // Sturm count: number of eigenvalues strictly below x.
    auto count_below = [&](double x) {
        int count = 0;
        double q = 1.0;
        for (int i = 0; i < n; ++i) {
            q = matrix.diag[static_cast<std::size_t>(i)] - x -
                (i > 0 ? e2[static_cast<std::size_t>(i)] / q : 0.0);
            if (std::abs(q) < pivmin) q = -pivmin;
            if (q < 0.0) ++count;
        }
        return count;
    };

    constexpr int kMaxIterations = 256;
    constexpr double kAbsTol = 1e-13;
    constexpr double kRelTol = 1e-13;

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        int it = 0;
        for (; it < kMaxIterations; ++it) {
            double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break; // interval at machine resolution
            if (count_below(mid) >= k + 1) {
                b = mid;
            } else {
                a = mid;
            }
            double width = b - a;
            if (width <= kAbsTol + kRelTol * std::max(std::abs(a), std::abs(b))) break;
        }
        if (it == kMaxIterations) {
            throw ConvergenceFailure("bisection did not bracket eigenvalue " + std::to_string(k));
        }
        eig[static_cast<std::size_t>(k)] = 0.5 * (a + b);
    }
    return eig;
}

std::pair<int, int> block_split(const ParamSet& p) {
    if (!p.alpha_degenerate) {
        throw NotBlockDegenerate("Jacobi matrix splits only at alpha = 0 or 1, got alpha = " +
                                 to_string(p.alpha));
    }
    if (p.odd()) return {p.j + 1, p.j + 1};
    if (p.alpha == 0) return {p.j + 1, p.j};
    return {p.j, p.j + 1};
}

} // namespace pararacah
