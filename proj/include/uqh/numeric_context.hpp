#pragma once

#include <cmath>
#include <complex>

#include "uqh/errors.hpp"
#include "uqh/hpoly.hpp"
#include "uqh/quotient.hpp"

namespace uqh {

/// Complex evaluation point (q, h) plus floating-point tolerances.
struct NumericContext {
    std::complex<double> q{1.3, 0.0};
    std::complex<double> h{0.5, 0.0};
    double tol_abs = 1e-10;
    double tol_rel = 1e-8;

    /// Principal branch of s = q^{1/2}.
    std::complex<double> s() const { return std::sqrt(q); }

    /// Throws NonGenericQ when some q-integer [n], n <= max_index, vanishes at
    /// this q (q a primitive 2n-th root of unity). q = +-1 passes: the
    /// expanded form gives [n] = +-n there.
    void require_generic(int max_index) const {
        if (std::abs(q) < 1e-12) throw NonGenericQ(0, "q = 0 is not allowed");
        const std::complex<double> t = q + 1.0 / q;
        const double growth = std::max(std::abs(q), 1.0 / std::abs(q));
        std::complex<double> prev = 0.0, cur = 1.0; // [0], [1]
        double scale = 1.0;
        for (int n = 2; n <= max_index; ++n) {
            const std::complex<double> next = t * cur - prev; // [n]
            prev = cur;
            cur = next;
            scale *= growth;
            if (std::abs(cur) < 1e-9 * scale)
                throw NonGenericQ(n, "q-integer [" + std::to_string(n) + "] vanishes at this q");
        }
    }

    /// q - q^{-1}, guarded: identities divided by it are ill-defined at q = +-1.
    std::complex<double> q_minus_q_inverse() const {
        const std::complex<double> d = q - 1.0 / q;
        if (std::abs(d) < 1e-9)
            throw NonGenericQ(1, "q - q^{-1} vanishes at this q (q = +-1)");
        return d;
    }
};

inline std::complex<double> eval_numeric(const LaurentScalar& x, const NumericContext& ctx) {
    return x.eval_s(ctx.s());
}

inline std::complex<double> eval_numeric(const HPoly& x, const NumericContext& ctx) {
    return x.eval(ctx.s(), ctx.h);
}

inline std::complex<double> eval_numeric(const LaurentQuotient& x, const NumericContext& ctx,
                                         int index_hint = -1) {
    return x.eval_s(ctx.s(), index_hint);
}

} // namespace uqh
