#pragma once

#include <complex>
#include <map>
#include <vector>

#include "uqh/numeric_context.hpp"
#include "uqh/quotient.hpp"
#include "uqh/series.hpp"

namespace uqh {

/// q-integer [n] = (q^n - q^{-n})/(q - q^{-1}) expanded as a Laurent polynomial
/// in s = q^{1/2}: sum_{k=0}^{n-1} s^{2(n-1-2k)}. [0] = 0, [-n] = -[n].
LaurentScalar q_integer(int n);

/// q^x - q^{-x} = s^{2x} - s^{-2x} for half-integer x given as twoX = 2x.
/// This is the numerator of [x]; for half-integer x the quotient itself is
/// not a Laurent polynomial, so identities are cleared by (q - q^{-1}) powers.
LaurentScalar q_power_diff(int twoX);

/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentScalar q_factorial(int n);

/// xi = (q^2 + q^{-2})/2 as a Laurent polynomial in s.
LaurentScalar xi_value();

/// Coefficients of the Legendre polynomial P_n in powers of its argument,
/// by the Bonnet recurrence (n+1)P_{n+1} = (2n+1) x P_n - n P_{n-1}.
std::vector<Rational> legendre_coeffs(int n);

/// P_n evaluated at xi = (q^2 + q^{-2})/2.
LaurentScalar legendre_at_xi(int n);

/// alpha_n = P_n(xi)/[2n+1], kept as an exact Laurent quotient (divisibility
/// is not assumed). alpha_0 = 1.
LaurentQuotient alpha_coeff(int n);

/// A multiset {p -> nu_p} with sum p*nu_p = n - m and sum nu_p <= 2m+1,
/// together with its multinomial symmetry factor
/// zeta = (2m+1)! / ((2m+1 - sum nu_p)! * prod nu_p!).
struct Partition {
    std::map<int, int> multiplicities;
    int m = 0;
    Integer zeta = 1;
};

/// All partitions entering the inversion recursion at (n, m); for n == m the
/// single empty partition with zeta = 1.
std::vector<Partition> enumerate_partitions(int n, int m);

/// Inverse-series coefficients by the partition recursion:
/// beta_0 = 1, beta_n = -sum_{m=1}^{n} alpha_m * Z_{n,m}. Works over any
/// commutative ring R with R(int), +, *, unary -, and scaling by Rational;
/// alpha[m] is read for 1 <= m <= max_n.
template <class R>
std::vector<R> beta_recursive(const std::vector<R>& alpha, int max_n) {
    std::vector<R> beta(static_cast<size_t>(max_n) + 1);
    beta[0] = R(1);
    for (int n = 1; n <= max_n; ++n) {
        R acc{};
        for (int m = 1; m <= n; ++m) {
            R z{};
            for (const Partition& part : enumerate_partitions(n, m)) {
                R prod = R(1);
                for (const auto& [p, nu] : part.multiplicities)
                    for (int i = 0; i < nu; ++i) prod = prod * beta[static_cast<size_t>(p)];
                z += prod * Rational(part.zeta);
            }
            acc += alpha[static_cast<size_t>(m)] * z;
        }
        beta[static_cast<size_t>(n)] = -acc;
    }
    return beta;
}

/// Independent check: compositional inverse of x + sum alpha_n x^{2n+1} by
/// generic order-by-order reversion (substitute the unknown odd series and
/// match powers). Same ring requirements and indexing as beta_recursive.
template <class R>
std::vector<R> beta_oracle(const std::vector<R>& alpha, int max_n) {
    const int deg = 2 * max_n + 1;
    std::vector<R> g(static_cast<size_t>(deg) + 1);
    g[1] = R(1);
    std::vector<R> beta(static_cast<size_t>(max_n) + 1);
    beta[0] = R(1);
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<R> fg = compose_odd_series(alpha, g, 2 * n + 1);
        // alpha_0 = 1, so the unknown coefficient enters linearly with weight 1.
        const R defect = fg[static_cast<size_t>(2 * n + 1)];
        g[static_cast<size_t>(2 * n + 1)] = -defect;
        beta[static_cast<size_t>(n)] = -defect;
    }
    return beta;
}

/// Taylor coefficients of tanh: reversion of the arctanh series, i.e.
/// beta_oracle at alpha_n = 1/(2n+1). Entry n multiplies x^{2n+1}.
std::vector<Rational> tanh_reversion_coeffs(int max_n);

/// B_0, B_1, ..., B_max (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(int max);

/// 2^{2n}(2^{2n}-1) B_{2n} / (2n)! — the Bernoulli closed form for tanh
/// coefficients; equals the coefficient of x^{2n-1}, i.e. the classical
/// beta_{n-1}, not beta_n (the off-by-one is surfaced in reports).
Rational tanh_coefficient_bernoulli(int n);

/// Coefficients of x^{2n} in (1 - 2 xi x^2 + x^4)^{-1/2}, n = 0..max_n,
/// via the binomial expansion in w = x^4 - 2 xi x^2.
std::vector<LaurentScalar> f_series(int max_n);

/// Same generating function expanded as the product
/// (1-(qx)^2)^{-1/2} (1-(q^{-1}x)^2)^{-1/2} — an independent route.
std::vector<LaurentScalar> f_series_product_form(int max_n);

/// (r choose k)(-1)^k style square-root series: coefficients c_k with
/// (1 - w)^{r} = sum_k c_k w^k for rational exponent r.
std::vector<Rational> binomial_series_negated(const Rational& exponent, int max_k);

/// u(v) = v / sqrt((1-(qv)^2)(1-(q^{-1}v)^2)), principal branches per factor.
std::complex<double> u_of_v(std::complex<double> v, const NumericContext& ctx);

/// Closed-form inverse of u_of_v: v^2 = xi + 1/(2u^2) -+ sqrt((xi+1/(2u^2))^2 - 1),
/// branch and sign fixed by the round trip (v ~ u as u -> 0). Throws
/// BranchAmbiguity if no candidate round-trips.
std::complex<double> v_of_u(std::complex<double> u, const NumericContext& ctx);

enum class SeriesKind { alpha, beta, legendre, tanh_classical };

template <class V>
struct SeriesCoeffs {
    SeriesKind kind;
    std::vector<V> values; // index n
    int truncation_order;
};

SeriesCoeffs<LaurentQuotient> alpha_series(int max_n);
SeriesCoeffs<LaurentQuotient> beta_series(int max_n);
SeriesCoeffs<LaurentScalar> legendre_series(int max_n);
SeriesCoeffs<Rational> tanh_classical_series(int max_n);

} // namespace uqh
