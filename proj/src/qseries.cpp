#include "uqh/qseries.hpp"

#include <cmath>
#include <limits>

#include "uqh/errors.hpp"

namespace uqh {

LaurentScalar q_integer(int n) {
    if (n == 0) return {};
    if (n < 0) return -q_integer(-n);
    LaurentScalar r;
    for (int k = 0; k < n; ++k) r += LaurentScalar::s_power(2 * (n - 1 - 2 * k));
    return r;
}

LaurentScalar q_power_diff(int twoX) {
    return LaurentScalar::s_power(twoX) - LaurentScalar::s_power(-twoX);
}

LaurentScalar q_factorial(int n) {
    LaurentScalar r(1);
    for (int k = 2; k <= n; ++k) r *= q_integer(k);
    return r;
}

LaurentScalar xi_value() {
    return (LaurentScalar::s_power(4) + LaurentScalar::s_power(-4)) * Rational(1, 2);
}

std::vector<Rational> legendre_coeffs(int n) {
    std::vector<Rational> prev{1};     // P_0
    if (n == 0) return prev;
    std::vector<Rational> cur{0, 1};   // P_1
    for (int k = 1; k < n; ++k) {
        std::vector<Rational> next(static_cast<size_t>(k) + 2, Rational(0));
        for (size_t i = 0; i < cur.size(); ++i)
            next[i + 1] += Rational(2 * k + 1) * cur[i];
        for (size_t i = 0; i < prev.size(); ++i)
            next[i] -= Rational(k) * prev[i];
        for (auto& c : next) c /= (k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentScalar legendre_at_xi(int n) {
    const std::vector<Rational> coeffs = legendre_coeffs(n);
    const LaurentScalar xi = xi_value();
    LaurentScalar r;
    LaurentScalar xp(1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) r += xp * coeffs[i];
        if (i + 1 < coeffs.size()) xp *= xi;
    }
    return r;
}

LaurentQuotient alpha_coeff(int n) {
    if (n == 0) return LaurentQuotient(1);
    return {legendre_at_xi(n), q_integer(2 * n + 1)};
}

namespace {

void enumerate_rec(int remaining, int max_part, int parts_left, std::map<int, int>& acc,
                   int m, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition part;
        part.multiplicities = acc;
        part.m = m;
        int total_nu = 0;
        Integer denom = 1;
        for (const auto& [p, nu] : acc) {
            total_nu += nu;
            denom *= factorial(nu);
        }
        part.zeta = factorial(2 * m + 1) / (factorial(2 * m + 1 - total_nu) * denom);
        out.push_back(std::move(part));
        return;
    }
    if (max_part == 0 || parts_left == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        const int max_nu = std::min(remaining / p, parts_left);
        for (int nu = 1; nu <= max_nu; ++nu) {
            acc[p] = nu;
            enumerate_rec(remaining - p * nu, p - 1, parts_left - nu, acc, m, out);
        }
        acc.erase(p);
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int m) {
    if (m < 1 || m > n) throw ConfigError("enumerate_partitions requires 1 <= m <= n");
    std::vector<Partition> out;
    std::map<int, int> acc;
    enumerate_rec(n - m, n - m, 2 * m + 1, acc, m, out);
    return out;
}

std::vector<Rational> tanh_reversion_coeffs(int max_n) {
    std::vector<Rational> alpha(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) alpha[static_cast<size_t>(n)] = Rational(1, 2 * n + 1);
    return beta_oracle(alpha, max_n);
}

std::vector<Rational> bernoulli_numbers(int max) {
    std::vector<Rational> b(static_cast<size_t>(max) + 1);
    b[0] = 1;
    for (int m = 1; m <= max; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[static_cast<size_t>(k)];
        b[static_cast<size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

Rational tanh_coefficient_bernoulli(int n) {
    const Rational b2n = bernoulli_numbers(2 * n)[static_cast<size_t>(2 * n)];
    const Integer p = Integer(1) << (2 * n); // 2^{2n}
    return Rational(p) * Rational(p - 1) * b2n / Rational(factorial(2 * n));
}

std::vector<Rational> binomial_series_negated(const Rational& exponent, int max_k) {
    // (1 - w)^r = sum_k (r choose k)(-1)^k w^k
    std::vector<Rational> c(static_cast<size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        Rational v = binomial_rational(exponent, k);
        if (k % 2 != 0) v = -v;
        c[static_cast<size_t>(k)] = v;
    }
    return c;
}

std::vector<LaurentScalar> f_series(int max_n) {
    const int trunc = 2 * max_n; // powers of x
    // w = 2 xi x^2 - x^4, so the generating function is (1 - w)^{-1/2}.
    std::vector<LaurentScalar> w(static_cast<size_t>(trunc) + 1);
    if (trunc >= 2) w[2] = xi_value() * Rational(2);
    if (trunc >= 4) w[4] = LaurentScalar(-1);

    const std::vector<Rational> bin = binomial_series_negated(Rational(-1, 2), max_n);
    std::vector<LaurentScalar> acc(static_cast<size_t>(trunc) + 1);
    std::vector<LaurentScalar> wp(static_cast<size_t>(trunc) + 1);
    wp[0] = LaurentScalar(1);
    for (int k = 0; k <= max_n; ++k) {
        const Rational& c = bin[static_cast<size_t>(k)];
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += wp[i] * c;
        if (k < max_n) wp = series_mul(wp, w, trunc);
    }
    std::vector<LaurentScalar> out(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out[static_cast<size_t>(n)] = acc[static_cast<size_t>(2 * n)];
    return out;
}

std::vector<LaurentScalar> f_series_product_form(int max_n) {
    // (1-(qx)^2)^{-1/2}: coefficient of x^{2k} is (-1/2 choose k)(-1)^k q^{2k}
    const std::vector<Rational> bin = binomial_series_negated(Rational(-1, 2), max_n);
    std::vector<LaurentScalar> a(static_cast<size_t>(max_n) + 1), b(a.size());
    for (int k = 0; k <= max_n; ++k) {
        a[static_cast<size_t>(k)] = LaurentScalar::monomial(4 * k, bin[static_cast<size_t>(k)]);
        b[static_cast<size_t>(k)] = LaurentScalar::monomial(-4 * k, bin[static_cast<size_t>(k)]);
    }
    std::vector<LaurentScalar> out(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            out[static_cast<size_t>(n)] +=
                a[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
    return out;
}

std::complex<double> u_of_v(std::complex<double> v, const NumericContext& ctx) {
    const std::complex<double> qv = ctx.q * v;
    const std::complex<double> vq = v / ctx.q;
    return v / (std::sqrt(1.0 - qv * qv) * std::sqrt(1.0 - vq * vq));
}

std::complex<double> v_of_u(std::complex<double> u, const NumericContext& ctx) {
    if (std::abs(u) == 0.0) return 0.0;
    const std::complex<double> xi = (ctx.q * ctx.q + 1.0 / (ctx.q * ctx.q)) / 2.0;
    const std::complex<double> x = xi + 1.0 / (2.0 * u * u);
    const std::complex<double> root = std::sqrt(x * x - 1.0);
    // The "minus" branch x - root cancels catastrophically for small u;
    // evaluate it as the reciprocal of the "plus" branch instead.
    const std::complex<double> plus = x + root;
    const std::complex<double> v2_candidates[2] = {1.0 / plus, plus};

    std::complex<double> best = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    for (const auto& v2 : v2_candidates) {
        const std::complex<double> r = std::sqrt(v2);
        for (const auto& v : {r, -r}) {
            const double err = std::abs(u_of_v(v, ctx) - u);
            if (err < best_err) {
                best_err = err;
                best = v;
            }
        }
    }
    if (best_err > 1e-6 * std::max(1.0, std::abs(u)))
        throw BranchAmbiguity("no square-root branch satisfies the u <-> v round trip");
    return best;
}

SeriesCoeffs<LaurentQuotient> alpha_series(int max_n) {
    SeriesCoeffs<LaurentQuotient> s{SeriesKind::alpha, {}, max_n};
    for (int n = 0; n <= max_n; ++n) s.values.push_back(alpha_coeff(n));
    return s;
}

SeriesCoeffs<LaurentQuotient> beta_series(int max_n) {
    std::vector<LaurentQuotient> alpha(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) alpha[static_cast<size_t>(n)] = alpha_coeff(n);
    SeriesCoeffs<LaurentQuotient> s{SeriesKind::beta, beta_recursive(alpha, max_n), max_n};
    return s;
}

SeriesCoeffs<LaurentScalar> legendre_series(int max_n) {
    SeriesCoeffs<LaurentScalar> s{SeriesKind::legendre, {}, max_n};
    for (int n = 0; n <= max_n; ++n) s.values.push_back(legendre_at_xi(n));
    return s;
}

SeriesCoeffs<Rational> tanh_classical_series(int max_n) {
    return {SeriesKind::tanh_classical, tanh_reversion_coeffs(max_n), max_n};
}

} // namespace uqh
