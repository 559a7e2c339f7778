#include "uqh/repcore.hpp"

#include <cmath>

namespace uqh {

namespace {

std::vector<int> magnetic_numbers(int two_j) {
    std::vector<int> two_m(static_cast<size_t>(two_j) + 1);
    for (int i = 0; i <= two_j; ++i) two_m[static_cast<size_t>(i)] = two_j - 2 * i;
    return two_m;
}

std::complex<double> q_integer_numeric(int n, const NumericContext& ctx) {
    return eval_numeric(q_integer(n), ctx);
}

} // namespace

ExactGeneratorSet build_uq_rep(const RepSpec& spec) {
    if (spec.basis != Basis::polynomial)
        throw ConfigError("the symmetric basis contains square roots and is numeric-only");
    const int dim = spec.dimension();
    ExactGeneratorSet g;
    g.dim = dim;
    g.two_m = magnetic_numbers(spec.two_j);
    g.jp = RingMatrix<HPoly>(dim);
    g.jm = RingMatrix<HPoly>(dim);
    g.j0 = RingMatrix<HPoly>(dim);
    g.q_j0_pos = RingMatrix<HPoly>(dim);
    g.q_j0_neg = RingMatrix<HPoly>(dim);
    for (int i = 0; i < dim; ++i) {
        const int two_m = g.two_m[static_cast<size_t>(i)];
        g.j0.at(i, i) = HPoly(LaurentScalar(Rational(two_m, 2)));
        g.q_j0_pos.at(i, i) = HPoly(LaurentScalar::s_power(two_m));
        g.q_j0_neg.at(i, i) = HPoly(LaurentScalar::s_power(-two_m));
        // raising lowers the row index (descending-m ordering)
        if (i > 0) g.jp.at(i - 1, i) = HPoly(1);
        if (i < dim - 1) {
            // [j+m][j-m+1] with 2j = spec.two_j, 2m = two_m
            const int jp_m = (spec.two_j + two_m) / 2;
            const int jm_m1 = (spec.two_j - two_m) / 2 + 1;
            g.jm.at(i + 1, i) = HPoly(q_integer(jp_m) * q_integer(jm_m1));
        }
    }
    return g;
}

NumericGeneratorSet build_uq_rep_numeric(const RepSpec& spec, const NumericContext& ctx,
                                         bool require_real) {
    const int dim = spec.dimension();
    ctx.require_generic(dim);
    NumericGeneratorSet g;
    g.dim = dim;
    g.two_m = magnetic_numbers(spec.two_j);
    g.jp = RingMatrix<std::complex<double>>(dim);
    g.jm = RingMatrix<std::complex<double>>(dim);
    g.j0 = RingMatrix<std::complex<double>>(dim);
    g.q_j0_pos = RingMatrix<std::complex<double>>(dim);
    g.q_j0_neg = RingMatrix<std::complex<double>>(dim);
    const std::complex<double> s = ctx.s();
    for (int i = 0; i < dim; ++i) {
        const int two_m = g.two_m[static_cast<size_t>(i)];
        g.j0.at(i, i) = two_m / 2.0;
        g.q_j0_pos.at(i, i) = std::pow(s, two_m);
        g.q_j0_neg.at(i, i) = std::pow(s, -two_m);
        const int a = (spec.two_j + two_m) / 2;     // j+m
        const int b = (spec.two_j - two_m) / 2;     // j-m
        if (spec.basis == Basis::polynomial) {
            if (i > 0) g.jp.at(i - 1, i) = 1.0;
            if (i < dim - 1)
                g.jm.at(i + 1, i) = q_integer_numeric(a, ctx) * q_integer_numeric(b + 1, ctx);
        } else {
            // J+- |jm> = ([j-+m][j+-m+1])^{1/2} |j m+-1>
            if (i > 0) {
                const std::complex<double> rad =
                    q_integer_numeric(b, ctx) * q_integer_numeric(a + 1, ctx);
                if (require_real && std::abs(rad.imag()) < 1e-14 && rad.real() < 0.0)
                    throw NonGenericQ(a + 1, "negative radicand; no real matrix exists at this q");
                g.jp.at(i - 1, i) = std::sqrt(rad);
            }
            if (i < dim - 1) {
                const std::complex<double> rad =
                    q_integer_numeric(a, ctx) * q_integer_numeric(b + 1, ctx);
                if (require_real && std::abs(rad.imag()) < 1e-14 && rad.real() < 0.0)
                    throw NonGenericQ(a, "negative radicand; no real matrix exists at this q");
                g.jm.at(i + 1, i) = std::sqrt(rad);
            }
        }
    }
    return g;
}

ExactGeneratorSet classical_generators(int two_j) {
    const int dim = two_j + 1;
    ExactGeneratorSet g;
    g.dim = dim;
    g.two_m = magnetic_numbers(two_j);
    g.jp = RingMatrix<HPoly>(dim);
    g.jm = RingMatrix<HPoly>(dim);
    g.j0 = RingMatrix<HPoly>(dim);
    g.q_j0_pos = RingMatrix<HPoly>::identity(dim);
    g.q_j0_neg = RingMatrix<HPoly>::identity(dim);
    for (int i = 0; i < dim; ++i) {
        const int two_m = g.two_m[static_cast<size_t>(i)];
        g.j0.at(i, i) = HPoly(LaurentScalar(Rational(two_m, 2)));
        if (i > 0) g.jp.at(i - 1, i) = HPoly(1);
        if (i < dim - 1) {
            const int a = (two_j + two_m) / 2;     // j+m
            const int b = (two_j - two_m) / 2 + 1; // j-m+1
            g.jm.at(i + 1, i) = HPoly(a * b);
        }
    }
    return g;
}

VerificationReport power_action_check(const RepSpec& spec, int p, const NumericContext& ctx) {
    RepSpec sym = spec;
    sym.basis = Basis::symmetric;
    const NumericGeneratorSet g = build_uq_rep_numeric(sym, ctx);
    const int dim = g.dim;
    const auto lhs = g.jp.pow(p);

    RingMatrix<std::complex<double>> rhs(dim);
    for (int c = 0; c < dim; ++c) {
        const int two_m = g.two_m[static_cast<size_t>(c)];
        const int jm = (sym.two_j - two_m) / 2; // j-m
        const int jp = (sym.two_j + two_m) / 2; // j+m
        if (jm - p < 0) continue;               // annihilated
        // ([j-m]![j+m+p]!/([j+m]![j-m-p]!))^{1/2} as the product of per-step
        // amplitudes, branch-consistent with the generator entries.
        std::complex<double> amp = 1.0;
        for (int t = 0; t < p; ++t)
            amp *= std::sqrt(q_integer_numeric(jm - t, ctx) * q_integer_numeric(jp + t + 1, ctx));
        rhs.at(c - p, c) = amp;
    }
    const double res = scaled_residual(lhs, rhs);
    return VerificationReport::numeric("raising_power_action", "Eq41",
                                       "two_j=" + std::to_string(spec.two_j) +
                                           ",p=" + std::to_string(p),
                                       res, ctx.tol_abs);
}

RingMatrix<std::complex<double>> basis_similarity(const RepSpec& spec, const NumericContext& ctx) {
    const int dim = spec.dimension();
    RingMatrix<std::complex<double>> d(dim);
    // Column dim-1 is the lowest-weight state; walk upward multiplying the
    // symmetric-basis raising amplitudes.
    std::complex<double> acc = 1.0;
    d.at(dim - 1, dim - 1) = 1.0;
    for (int i = dim - 1; i > 0; --i) {
        const int two_m = spec.two_j - 2 * i; // m of the source state
        const int a = (spec.two_j - two_m) / 2;
        const int b = (spec.two_j + two_m) / 2 + 1;
        acc *= std::sqrt(q_integer_numeric(a, ctx) * q_integer_numeric(b, ctx));
        d.at(i - 1, i - 1) = acc;
    }
    return d;
}

} // namespace uqh
