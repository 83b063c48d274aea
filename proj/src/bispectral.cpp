#include "para_racah/bispectral.hpp"

namespace pararacah {

Gaussian d_of_x(const ParamSet& p, const Gaussian& x) {
    const Gaussian ix(-x.im, x.re);
    const Gaussian two_ix = ix + ix;
    Gaussian denom = two_ix * (two_ix + Gaussian(Rational(1)));
    if (denom.is_zero()) {
        throw PoleAtX("D(x) has a pole at x = " + to_string(x) + " (2ix in {0, -1})");
    }
    const Rational e = p.odd() ? Rational(-p.c - p.j) : Rational(1 - p.c - p.j);
    Gaussian num = (Gaussian(p.a) + ix) * (Gaussian(-p.a - p.j) + ix) * (Gaussian(p.c) + ix) *
                   (Gaussian(e) + ix);
    return num / denom;
}

std::vector<Gaussian> difference_residuals(const ParamSet& p, const RecurrenceTable& table,
                                           const Rational& x) {
    const Gaussian gx{x, Rational(0)};
    const Gaussian d = d_of_x(p, gx);
    const Gaussian dbar = d.conj(); // conjugate variant: i -> -i for real x

    const Rational lambda0 = x * x;
    const Gaussian lambda_up{x * x - 1, 2 * x};   // (x+i)^2
    const Gaussian lambda_dn{x * x - 1, -2 * x};  // (x-i)^2

    const std::vector<Rational> p0 = eval_poly_sequence(table, lambda0);
    const std::vector<Gaussian> pu = eval_poly_sequence(table, lambda_up);
    const std::vector<Gaussian> pd = eval_poly_sequence(table, lambda_dn);

    const int N = p.n_max;
    std::vector<Gaussian> res;
    res.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const Gaussian pn0{p0[static_cast<std::size_t>(n)], Rational(0)};
        Gaussian r = dbar * pu[static_cast<std::size_t>(n)] - (dbar + d) * pn0 +
                     d * pd[static_cast<std::size_t>(n)] +
                     Gaussian(Rational(n) * (N - n)) * pn0;
        res.push_back(r);
    }
    return res;
}

Gaussian difference_residual(const ParamSet& p, const RecurrenceTable& table, int n,
                             const Rational& x) {
    if (n < 0 || n > p.n_max) {
        throw IndexOutOfRange("degree " + std::to_string(n) + " outside [0, N]");
    }
    return difference_residuals(p, table, x)[static_cast<std::size_t>(n)];
}

} // namespace pararacah
