#include "uqh/deformmap.hpp"

#include <cmath>

namespace uqh {

namespace {

using C = std::complex<double>;

HPoly h_power(int k, const Rational& c) { return HPoly::monomial(k, LaurentScalar(c)); }

std::complex<double> q_int(int n, const NumericContext& ctx) {
    return eval_numeric(q_integer(n), ctx);
}

/// ([j-m]! [j+m+p]! / ([j+m]! [j-m-p]!))^{1/2} with jm = j-m, jp = j+m;
/// zero when j-m-p < 0. Built as the product of per-step amplitudes
/// sqrt([j-m-t][j+m+t+1]) so the branch choice matches the matrix entries
/// at complex q; the single-sqrt reading agrees wherever it is branch-free.
C raising_amplitude(int jm, int jp, int p, const NumericContext& ctx) {
    if (p < 0 || jm - p < 0) return 0.0;
    C amp = 1.0;
    for (int t = 0; t < p; ++t)
        amp *= std::sqrt(q_int(jm - t, ctx) * q_int(jp + t + 1, ctx));
    return amp;
}

} // namespace

int series_nmax(int dim) {
    const int truncation = dim - 1;
    return truncation >= 1 ? (truncation - 1) / 2 : 0;
}

DeformedSet build_deformed(const ExactGeneratorSet& gen) {
    DeformedSet d;
    d.source = gen;
    d.truncation = gen.dim - 1;
    d.nmax = series_nmax(gen.dim);

    LaurentScalar den(1);
    for (int n = 1; n <= d.nmax; ++n) den *= q_integer(2 * n + 1);
    d.xhat_den = den;

    d.xhat_num = RingMatrix<HPoly>(gen.dim);
    RingMatrix<HPoly> jp_odd = gen.jp; // Jp^{2n+1}
    const RingMatrix<HPoly> jp2 = gen.jp * gen.jp;
    for (int n = 0; n <= d.nmax; ++n) {
        const LaurentScalar coeff =
            den.exact_divide(q_integer(2 * n + 1)) * legendre_at_xi(n);
        d.xhat_num = d.xhat_num + jp_odd.scaled(h_power(2 * n, rational_pow(Rational(1, 4), n)) * coeff);
        if (n < d.nmax) jp_odd = jp_odd * jp2;
    }

    const RingMatrix<HPoly> s = sqrt_dressing(gen.jp, d.truncation);
    d.yhat = s * gen.jm * s;
    return d;
}

NumericDeformedSet build_deformed_numeric(const NumericGeneratorSet& gen,
                                          const NumericContext& ctx) {
    NumericDeformedSet d;
    d.source = gen;
    d.truncation = gen.dim - 1;
    d.nmax = series_nmax(gen.dim);
    ctx.require_generic(2 * d.nmax + 1);

    const C h2 = ctx.h / 2.0;
    d.xhat = RingMatrix<C>(gen.dim);
    RingMatrix<C> jp_odd = gen.jp;
    const RingMatrix<C> jp2 = gen.jp * gen.jp;
    C h_even = 1.0; // (h/2)^{2n}
    for (int n = 0; n <= d.nmax; ++n) {
        const C alpha = eval_numeric(alpha_coeff(n), ctx, 2 * n + 1);
        d.xhat = d.xhat + jp_odd.scaled(alpha * h_even);
        if (n < d.nmax) {
            jp_odd = jp_odd * jp2;
            h_even *= h2 * h2;
        }
    }

    const RingMatrix<C> s = sqrt_dressing_numeric(gen.jp, d.truncation, ctx);
    d.yhat = s * gen.jm * s;
    return d;
}

RingMatrix<HPoly> sqrt_dressing(const RingMatrix<HPoly>& jp, int truncation) {
    const int kmax = truncation / 2;
    std::vector<HPoly> coeffs(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        Rational c = binomial_rational(Rational(1, 2), k) * rational_pow(Rational(-1, 4), k);
        coeffs[static_cast<size_t>(k)] = h_power(2 * k, c);
    }
    return nilpotent_series_eval(coeffs, jp * jp);
}

RingMatrix<C> sqrt_dressing_numeric(const RingMatrix<C>& jp, int truncation,
                                    const NumericContext& ctx) {
    const int kmax = truncation / 2;
    const C h2 = ctx.h / 2.0;
    std::vector<C> coeffs(static_cast<size_t>(kmax) + 1);
    C hp = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        coeffs[static_cast<size_t>(k)] =
            to_double(binomial_rational(Rational(1, 2), k)) * std::pow(-1.0, k) * hp;
        hp *= h2 * h2;
    }
    return nilpotent_series_eval(coeffs, jp * jp);
}

RingMatrix<HPoly> invert_map(const DeformedSet& d) {
    const int nmax = d.nmax;
    std::vector<LaurentQuotient> alpha(static_cast<size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) alpha[static_cast<size_t>(n)] = alpha_coeff(n);
    const std::vector<LaurentQuotient> beta = beta_recursive(alpha, nmax);

    // Common denominator: D^{2 nmax + 1} * prod_n beta_den_n. Every term is
    // brought onto it with Laurent-polynomial factors only.
    LaurentScalar common = d.xhat_den.pow(2 * nmax + 1);
    for (int n = 1; n <= nmax; ++n) common *= beta[static_cast<size_t>(n)].den();

    RingMatrix<HPoly> acc(d.source.dim);
    RingMatrix<HPoly> x_odd = d.xhat_num; // xhat_num^{2n+1}
    const RingMatrix<HPoly> x2 = d.xhat_num * d.xhat_num;
    for (int n = 0; n <= nmax; ++n) {
        LaurentScalar factor = d.xhat_den.pow(2 * (nmax - n));
        for (int m = 1; m <= nmax; ++m)
            if (m != n) factor *= beta[static_cast<size_t>(m)].den();
        const LaurentScalar num = (n == 0) ? LaurentScalar(1) : beta[static_cast<size_t>(n)].num();
        acc = acc + x_odd.scaled(h_power(2 * n, rational_pow(Rational(1, 4), n)) * (factor * num));
        if (n < nmax) x_odd = x_odd * x2;
    }
    const HPoly common_poly(common);
    return acc.map_entries([&](const HPoly& e) { return e.exact_divide(common_poly); });
}

RingMatrix<C> invert_map_numeric(const NumericDeformedSet& d, const NumericContext& ctx) {
    const int nmax = d.nmax;
    std::vector<LaurentQuotient> alpha(static_cast<size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) alpha[static_cast<size_t>(n)] = alpha_coeff(n);
    const std::vector<LaurentQuotient> beta = beta_recursive(alpha, nmax);

    const C h2 = ctx.h / 2.0;
    RingMatrix<C> acc(d.source.dim);
    RingMatrix<C> x_odd = d.xhat;
    const RingMatrix<C> x2 = d.xhat * d.xhat;
    C h_even = 1.0;
    for (int n = 0; n <= nmax; ++n) {
        acc = acc + x_odd.scaled(eval_numeric(beta[static_cast<size_t>(n)], ctx) * h_even);
        if (n < nmax) {
            x_odd = x_odd * x2;
            h_even *= h2 * h2;
        }
    }
    return acc;
}

JordanianSet build_jordanian(int two_j) {
    JordanianSet j;
    j.source = classical_generators(two_j);
    const int dim = j.source.dim;
    const int truncation = dim - 1;
    const int nmax = series_nmax(dim);

    j.x = RingMatrix<HPoly>(dim);
    RingMatrix<HPoly> jp_odd = j.source.jp;
    const RingMatrix<HPoly> jp2 = j.source.jp * j.source.jp;
    for (int n = 0; n <= nmax; ++n) {
        j.x = j.x + jp_odd.scaled(
                        h_power(2 * n, rational_pow(Rational(1, 4), n) / Rational(2 * n + 1)));
        if (n < nmax) jp_odd = jp_odd * jp2;
    }

    const RingMatrix<HPoly> s = sqrt_dressing(j.source.jp, truncation);
    j.y = s * j.source.jm * s;
    return j;
}

namespace {

RingMatrix<HPoly> entire_series_h(const RingMatrix<HPoly>& x, int parity, int h_shift,
                                  bool alternate) {
    // sum over k of h^{k + h_shift} x^k / k!, restricted to the given parity of k.
    const int dim = x.dim();
    std::vector<HPoly> coeffs(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        if (parity >= 0 && k % 2 != parity) continue;
        Rational c = Rational(1) / Rational(factorial(k));
        if (alternate && k % 2 == 1) c = -c;
        coeffs[static_cast<size_t>(k)] = h_power(k + h_shift, c);
    }
    return nilpotent_series_eval(coeffs, x);
}

} // namespace

RingMatrix<HPoly> sinh_h_times(const RingMatrix<HPoly>& x) { return entire_series_h(x, 1, 0, false); }

RingMatrix<HPoly> sinh_h_times_over_h(const RingMatrix<HPoly>& x) {
    return entire_series_h(x, 1, -1, false);
}

RingMatrix<HPoly> cosh_h_times(const RingMatrix<HPoly>& x) { return entire_series_h(x, 0, 0, false); }

RingMatrix<HPoly> exp_h_times(const RingMatrix<HPoly>& x, int sign) {
    return entire_series_h(x, -1, 0, sign < 0);
}

RingMatrix<HPoly> casimir_cleared(const ExactGeneratorSet& gen, bool lowering_first) {
    const LaurentScalar cleared = q_power_diff(2) * q_power_diff(2);
    RingMatrix<HPoly> c = (lowering_first ? gen.jp * gen.jm : gen.jm * gen.jp)
                              .scaled(HPoly(cleared));
    for (int i = 0; i < gen.dim; ++i) {
        const int two_m = gen.two_m[static_cast<size_t>(i)];
        const int shifted = lowering_first ? two_m - 2 : two_m + 2;
        c.at(i, i) += HPoly(q_power_diff(two_m) * q_power_diff(shifted));
    }
    return c;
}

LaurentScalar casimir_eigenvalue_cleared(int two_j) {
    return q_power_diff(two_j) * q_power_diff(two_j + 2);
}

RingMatrix<C> yhat_normal_ordered(const NumericGeneratorSet& gen, const NumericContext& ctx) {
    const int dim = gen.dim;
    const C h2s = -(ctx.h * ctx.h) / 4.0; // (-h^2/4)
    RingMatrix<C> y(dim);
    for (int k = 0; 2 * k <= dim + 1; ++k) {
        for (int l = 0; 2 * l <= dim + 1; ++l) {
            const C weight = std::pow(h2s, k + l) *
                             to_double(binomial_rational(Rational(1, 2), k)) *
                             to_double(binomial_rational(Rational(1, 2), l));
            RingMatrix<C> term = gen.jm * gen.jp.pow(2 * (k + l));
            if (k >= 1 && 2 * k + 2 * l - 1 <= dim) {
                RingMatrix<C> diag(dim);
                for (int i = 0; i < dim; ++i)
                    diag.at(i, i) = q_int(gen.two_m[static_cast<size_t>(i)] + 2 * k + 4 * l - 1, ctx);
                term = term + gen.jp.pow(2 * k + 2 * l - 1).scaled(q_int(2 * k, ctx)) * diag;
            }
            y = y + term.scaled(weight);
        }
    }
    return y;
}

RingMatrix<C> yhat_basis_action(const RepSpec& spec, const NumericContext& ctx) {
    const int dim = spec.dimension();
    RingMatrix<C> y(dim);
    const C h2s = -(ctx.h * ctx.h) / 4.0;
    for (int col = 0; col < dim; ++col) {
        const int two_m = spec.two_j - 2 * col;
        const int jm = (spec.two_j - two_m) / 2; // j-m
        const int jp = (spec.two_j + two_m) / 2; // j+m
        for (int k = 0; 2 * k <= dim + 1; ++k) {
            for (int l = 0; 2 * l <= dim + 1; ++l) {
                const int shift = 2 * k + 2 * l - 1; // target is m + shift
                const int row = col - shift;
                if (row < 0 || row >= dim) continue;
                const C weight = std::pow(h2s, k + l) *
                                 to_double(binomial_rational(Rational(1, 2), k)) *
                                 to_double(binomial_rational(Rational(1, 2), l));
                // lowering after a raising string of length 2(k+l)
                C t1 = 0.0;
                if (jm - 2 * (k + l) >= 0) {
                    t1 = std::sqrt(q_int(jp + 2 * (k + l), ctx) *
                                   q_int(jm - 2 * (k + l) + 1, ctx)) *
                         raising_amplitude(jm, jp, 2 * (k + l), ctx);
                }
                // diagonal q-bracket followed by an odd raising string
                C t2 = 0.0;
                if (k >= 1 && shift >= 0) {
                    t2 = q_int(2 * k, ctx) * q_int(2 * k + 4 * l + two_m - 1, ctx) *
                         raising_amplitude(jm, jp, shift, ctx);
                }
                y.at(row, col) += weight * (t1 + t2);
            }
        }
    }
    return y;
}

RingMatrix<C> xhat_basis_action(const RepSpec& spec, const NumericContext& ctx) {
    const int dim = spec.dimension();
    RingMatrix<C> x(dim);
    const C h2 = ctx.h / 2.0;
    for (int col = 0; col < dim; ++col) {
        const int two_m = spec.two_j - 2 * col;
        const int jm = (spec.two_j - two_m) / 2;
        const int jp = (spec.two_j + two_m) / 2;
        C h_even = 1.0;
        for (int k = 0; 2 * k + 1 <= dim; ++k) {
            const int row = col - (2 * k + 1);
            if (row >= 0) {
                const C coeff = eval_numeric(alpha_coeff(k), ctx, 2 * k + 1) * h_even;
                x.at(row, col) += coeff * raising_amplitude(jm, jp, 2 * k + 1, ctx);
            }
            h_even *= h2 * h2;
        }
    }
    return x;
}

} // namespace uqh
