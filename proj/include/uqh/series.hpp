#pragma once

#include <vector>

namespace uqh {

/// Truncated product of coefficient vectors: keeps orders 0..trunc inclusive.
template <class R>
std::vector<R> series_mul(const std::vector<R>& a, const std::vector<R>& b, int trunc) {
    std::vector<R> r(static_cast<size_t>(trunc) + 1);
    const R zero{};
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(trunc); ++i) {
        if (a[i] == zero) continue;
        const size_t jmax = std::min(b.size(), static_cast<size_t>(trunc) + 1 - i);
        for (size_t j = 0; j < jmax; ++j) {
            if (b[j] == zero) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

/// Compose the odd series f(y) = sum_m coeff[m] y^{2m+1} (coeff[0] treated as 1)
/// with the series g given by full coefficient vector; truncated at `trunc`.
template <class R>
std::vector<R> compose_odd_series(const std::vector<R>& coeff, const std::vector<R>& g,
                                  int trunc) {
    std::vector<R> result(static_cast<size_t>(trunc) + 1);
    std::vector<R> g2 = series_mul(g, g, trunc);
    std::vector<R> gp = g;
    gp.resize(static_cast<size_t>(trunc) + 1);
    const int mmax = (trunc - 1) / 2;
    for (int m = 0; m <= mmax; ++m) {
        const R c = (m == 0) ? R(1) : coeff[static_cast<size_t>(m)];
        const R zero{};
        if (!(c == zero)) {
            for (size_t k = 0; k < result.size(); ++k) result[k] += gp[k] * c;
        }
        if (m < mmax) gp = series_mul(gp, g2, trunc);
    }
    return result;
}

} // namespace uqh
