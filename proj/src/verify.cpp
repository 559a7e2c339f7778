#include "uqh/verify.hpp"

#include <cmath>

namespace uqh {

namespace {

using C = std::complex<double>;

HPoly h_power(int k, const Rational& c) { return HPoly::monomial(k, LaurentScalar(c)); }

C q_int(int n, const NumericContext& ctx) { return eval_numeric(q_integer(n), ctx); }

/// [x] at half-integer x = twoX/2: (s^{2x} - s^{-2x})/(q - q^{-1}).
C q_int_half(int two_x, const NumericContext& ctx) {
    const C s = ctx.s();
    auto sp = [&](int e) { return std::pow(s, e); };
    return (sp(two_x) - sp(-two_x)) / ctx.q_minus_q_inverse();
}

double combined_residual(std::initializer_list<const RingMatrix<HPoly>*> mats) {
    double r = 0.0;
    for (const auto* m : mats) r = std::max(r, max_abs_coefficient(*m));
    return r;
}

RingMatrix<HPoly> q_bracket_diag(const ExactGeneratorSet& gen) {
    RingMatrix<HPoly> d(gen.dim);
    for (int i = 0; i < gen.dim; ++i)
        d.at(i, i) = HPoly(q_integer(gen.two_m[static_cast<size_t>(i)]));
    return d;
}

/// F(q^{qshift} (h/2) Jp) = sum_n P_n(xi) q^{2n*qshift} (h/2)^{2n} Jp^{2n},
/// terminating by nilpotency.
RingMatrix<HPoly> f_matrix_exact(const RingMatrix<HPoly>& jp, int truncation, int qshift) {
    const int kmax = truncation / 2;
    std::vector<HPoly> coeffs(static_cast<size_t>(kmax) + 1);
    for (int n = 0; n <= kmax; ++n) {
        LaurentScalar c = legendre_at_xi(n) * LaurentScalar::s_power(4 * n * qshift);
        coeffs[static_cast<size_t>(n)] = h_power(2 * n, rational_pow(Rational(1, 4), n)) * c;
    }
    return nilpotent_series_eval(coeffs, jp * jp);
}

/// (1 - (q^{qshift} (h/2) Jp)^2)^{-1/2} as a terminating binomial series.
RingMatrix<HPoly> inv_sqrt_factor_exact(const RingMatrix<HPoly>& jp, int truncation, int qshift) {
    const int kmax = truncation / 2;
    std::vector<HPoly> coeffs(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        const Rational b = binomial_rational(Rational(-1, 2), k) * rational_pow(Rational(-1), k);
        coeffs[static_cast<size_t>(k)] =
            h_power(2 * k, b * rational_pow(Rational(1, 4), k)) *
            LaurentScalar::s_power(4 * k * qshift);
    }
    return nilpotent_series_eval(coeffs, jp * jp);
}

RingMatrix<C> f_matrix_numeric(const RingMatrix<C>& jp, int truncation, int qshift,
                               const NumericContext& ctx) {
    const int kmax = truncation / 2;
    const C factor = std::pow(ctx.q, qshift) * ctx.h / 2.0;
    std::vector<C> coeffs(static_cast<size_t>(kmax) + 1);
    C fp = 1.0;
    for (int n = 0; n <= kmax; ++n) {
        coeffs[static_cast<size_t>(n)] = eval_numeric(legendre_at_xi(n), ctx) * fp;
        fp *= factor * factor;
    }
    return nilpotent_series_eval(coeffs, jp * jp);
}

/// (1+A)(1-A)^{-1} with A = ((h/2) Jp)^2, by the terminating geometric series.
RingMatrix<HPoly> rational_weight_exact(const RingMatrix<HPoly>& jp, int truncation) {
    const RingMatrix<HPoly> a = (jp * jp).scaled(h_power(2, Rational(1, 4)));
    std::vector<HPoly> ones(static_cast<size_t>(truncation) + 1, HPoly(1));
    const RingMatrix<HPoly> inv = nilpotent_series_eval(ones, a);
    return (RingMatrix<HPoly>::identity(jp.dim()) + a) * inv;
}

RingMatrix<C> rational_weight_numeric(const RingMatrix<C>& jp, int truncation,
                                      const NumericContext& ctx) {
    const C h2 = ctx.h / 2.0;
    const RingMatrix<C> a = (jp * jp).scaled(h2 * h2);
    std::vector<C> ones(static_cast<size_t>(truncation) + 1, C(1.0));
    const RingMatrix<C> inv = nilpotent_series_eval(ones, a);
    return (RingMatrix<C>::identity(jp.dim()) + a) * inv;
}

} // namespace

VerificationReport check_uq_relations_exact(const ExactGeneratorSet& gen,
                                            const std::string& context, const std::string& tag) {
    const auto r1 = commutator(gen.j0, gen.jp) - gen.jp;
    const auto r2 = commutator(gen.j0, gen.jm) + gen.jm;
    const auto r3 = commutator(gen.jp, gen.jm) - q_bracket_diag(gen);
    const auto r4 = gen.q_j0_pos * gen.q_j0_neg - RingMatrix<HPoly>::identity(gen.dim);
    return VerificationReport::exact("uq_defining_relations", tag, context,
                                     combined_residual({&r1, &r2, &r3, &r4}));
}

VerificationReport check_power_identity_exact(const ExactGeneratorSet& gen, int p,
                                              const std::string& context) {
    const LaurentScalar q_minus_qinv = q_power_diff(2);
    const RingMatrix<HPoly> jp_pm1 = gen.jp.pow(p - 1);
    const auto lhs = commutator(gen.jp.pow(p), gen.jm).scaled(HPoly(q_minus_qinv));
    const auto rhs = (gen.q_j0_pos * jp_pm1 * gen.q_j0_pos -
                      gen.q_j0_neg * jp_pm1 * gen.q_j0_neg)
                         .scaled(HPoly(q_integer(p)));
    const auto res = lhs - rhs;
    return VerificationReport::exact("raising_power_commutator", "Eq9",
                                     context + ",p=" + std::to_string(p),
                                     combined_residual({&res}));
}

std::vector<VerificationReport> check_conjugation_identity_exact(const ExactGeneratorSet& gen,
                                                                 const std::string& context) {
    std::vector<VerificationReport> out;
    const auto r1 = gen.q_j0_pos * gen.jp * gen.q_j0_neg - gen.jp.scaled(HPoly(LaurentScalar::s_power(2)));
    const auto r2 = gen.q_j0_neg * gen.jp * gen.q_j0_pos - gen.jp.scaled(HPoly(LaurentScalar::s_power(-2)));
    const auto r3 = gen.q_j0_pos * gen.jm * gen.q_j0_neg - gen.jm.scaled(HPoly(LaurentScalar::s_power(-2)));
    out.push_back(VerificationReport::exact("q_conjugation_scales_generators", "Eq25", context,
                                            combined_residual({&r1, &r2, &r3})));

    const int truncation = gen.dim - 1;
    const auto f0 = f_matrix_exact(gen.jp, truncation, 0);
    const auto rp = gen.q_j0_pos * f0 * gen.q_j0_neg - f_matrix_exact(gen.jp, truncation, +1);
    const auto rm = gen.q_j0_neg * f0 * gen.q_j0_pos - f_matrix_exact(gen.jp, truncation, -1);
    out.push_back(VerificationReport::exact("q_conjugation_of_series", "Eq25", context,
                                            combined_residual({&rp, &rm})));
    return out;
}

VerificationReport check_closure_commutator_exact(const DeformedSet& d, const std::string& context,
                                                  const std::string& tag) {
    const auto res =
        commutator(d.xhat_num, d.yhat) - q_bracket_diag(d.source).scaled(HPoly(d.xhat_den));
    return VerificationReport::exact("closure_commutator_xy", tag, context,
                                     combined_residual({&res}));
}

VerificationReport check_hx_commutator_exact(const DeformedSet& d, const std::string& context,
                                             const std::string& tag) {
    const auto lhs = commutator(d.source.j0, d.xhat_num);
    RingMatrix<HPoly> rhs(d.source.dim);
    RingMatrix<HPoly> jp_odd = d.source.jp;
    const RingMatrix<HPoly> jp2 = d.source.jp * d.source.jp;
    for (int n = 0; n <= d.nmax; ++n) {
        const LaurentScalar c =
            d.xhat_den.exact_divide(q_integer(2 * n + 1)) * legendre_at_xi(n) * Rational(2 * n + 1);
        rhs = rhs + jp_odd.scaled(h_power(2 * n, rational_pow(Rational(1, 4), n)) * c);
        if (n < d.nmax) jp_odd = jp_odd * jp2;
    }
    const auto res = lhs - rhs;
    return VerificationReport::exact("cartan_x_commutator", tag, context,
                                     combined_residual({&res}));
}

std::vector<VerificationReport> check_hy_commutator_exact(const DeformedSet& d,
                                                          const std::string& context,
                                                          const std::string& tag) {
    std::vector<VerificationReport> out;
    const auto g = rational_weight_exact(d.source.jp, d.truncation);
    const auto lhs = commutator(d.source.j0, d.yhat);
    const auto rhs = (g * d.yhat + d.yhat * g).scaled(HPoly(Rational(-1, 2)));
    const auto res = lhs - rhs;
    out.push_back(
        VerificationReport::exact("cartan_y_commutator", tag, context, combined_residual({&res})));

    // The rhs may equivalently be built from the series-reconstructed raising
    // generator; both readings must agree.
    const auto jp_rec = invert_map(d);
    const auto g2 = rational_weight_exact(jp_rec, d.truncation);
    const auto rhs2 = (g2 * d.yhat + d.yhat * g2).scaled(HPoly(Rational(-1, 2)));
    const auto res2 = rhs - rhs2;
    auto r = VerificationReport::exact("cartan_y_commutator_series_reading", tag + "b", context,
                                       combined_residual({&res2}));
    r.note = "rhs built from the source raising generator vs from its inverse-series reconstruction";
    out.push_back(std::move(r));
    return out;
}

std::vector<VerificationReport> check_x_lowering_commutator_exact(const DeformedSet& d,
                                                                  const std::string& context) {
    std::vector<VerificationReport> out;
    const LaurentScalar q_minus_qinv = q_power_diff(2);
    const auto f0 = f_matrix_exact(d.source.jp, d.truncation, 0);
    const auto lhs = commutator(d.xhat_num, d.source.jm).scaled(HPoly(q_minus_qinv));
    const auto rhs = (d.source.q_j0_pos * f0 * d.source.q_j0_pos -
                      d.source.q_j0_neg * f0 * d.source.q_j0_neg)
                         .scaled(HPoly(d.xhat_den));
    const auto res = lhs - rhs;
    out.push_back(VerificationReport::exact("x_lowering_commutator", "Eq23", context,
                                            combined_residual({&res})));

    const auto prod = inv_sqrt_factor_exact(d.source.jp, d.truncation, +1) *
                      inv_sqrt_factor_exact(d.source.jp, d.truncation, -1);
    const auto res2 = f0 - prod;
    out.push_back(VerificationReport::exact("generating_function_product_form", "Eq24", context,
                                            combined_residual({&res2})));
    return out;
}

VerificationReport check_uv_series_exact(const DeformedSet& d, const std::string& context) {
    // u cleared by (q - q^{-1}) * D: conjugate (h/2) Xhat_num by q^{+-J0}.
    const auto m = d.xhat_num.scaled(h_power(1, Rational(1, 2)));
    const auto lhs = d.source.q_j0_pos * m * d.source.q_j0_neg -
                     d.source.q_j0_neg * m * d.source.q_j0_pos;

    RingMatrix<HPoly> series(d.source.dim);
    RingMatrix<HPoly> jp_odd = d.source.jp;
    const RingMatrix<HPoly> jp2 = d.source.jp * d.source.jp;
    for (int n = 0; n <= d.nmax; ++n) {
        series = series +
                 jp_odd.scaled(h_power(2 * n + 1, rational_pow(Rational(1, 2), 2 * n + 1)) *
                               legendre_at_xi(n));
        if (n < d.nmax) jp_odd = jp_odd * jp2;
    }
    const auto rhs = series.scaled(HPoly(q_power_diff(2) * d.xhat_den));
    const auto res = lhs - rhs;
    return VerificationReport::exact("uv_legendre_series", "Eq35", context,
                                     combined_residual({&res}));
}

VerificationReport check_inversion_exact(const DeformedSet& d, const std::string& context,
                                         const std::string& tag) {
    const auto rec = invert_map(d);
    const auto res = rec - d.source.jp;
    return VerificationReport::exact("inverse_series_round_trip", tag, context,
                                     combined_residual({&res}));
}

VerificationReport check_jacobi_exact(const DeformedSet& d, const std::string& context) {
    const auto& x = d.xhat_num;
    const auto& y = d.yhat;
    const auto& h0 = d.source.j0;
    const auto res = commutator(commutator(x, y), h0) + commutator(commutator(y, h0), x) +
                     commutator(commutator(h0, x), y);
    return VerificationReport::exact("jacobi_identity", "Jacobi", context,
                                     combined_residual({&res}));
}

VerificationReport check_h_zero_exact(const DeformedSet& d, const std::string& context) {
    const auto x0 = d.xhat_num.map_entries([](const HPoly& e) { return HPoly(e.h_zero_part()); });
    const auto y0 = d.yhat.map_entries([](const HPoly& e) { return HPoly(e.h_zero_part()); });
    const auto rx = x0 - d.source.jp.scaled(HPoly(d.xhat_den));
    const auto ry = y0 - d.source.jm;
    return VerificationReport::exact("h_zero_limit", "h0", context,
                                     combined_residual({&rx, &ry}));
}

VerificationReport check_grading_exact(const DeformedSet& d, const std::string& context) {
    int violations = 0;
    const HPoly zero;
    for (int r = 0; r < d.source.dim; ++r) {
        for (int c = 0; c < d.source.dim; ++c) {
            const int shift =
                (d.source.two_m[static_cast<size_t>(r)] - d.source.two_m[static_cast<size_t>(c)]) / 2;
            if (!(d.xhat_num.at(r, c) == zero) && (shift < 1 || shift % 2 == 0)) ++violations;
            if (!(d.yhat.at(r, c) == zero) && (shift < -1 || (std::abs(shift) % 2) == 0)) ++violations;
        }
    }
    // Hhat spectrum must be exactly {-j, ..., j}.
    for (int i = 0; i < d.source.dim; ++i) {
        const HPoly expected(LaurentScalar(Rational(d.source.two_m[static_cast<size_t>(i)], 2)));
        if (!(d.source.j0.at(i, i) == expected)) ++violations;
    }
    auto r = VerificationReport::exact("grading_and_spectrum", "grading", context,
                                       static_cast<double>(violations));
    r.note = "raising shifts m by positive odd steps; lowering by odd steps >= -1";
    return r;
}

std::vector<VerificationReport> check_casimir_exact(const ExactGeneratorSet& gen, int two_j,
                                                    const std::string& context) {
    std::vector<VerificationReport> out;
    const auto a = casimir_cleared(gen, true);
    const auto b = casimir_cleared(gen, false);
    const auto res_forms = a - b;
    out.push_back(VerificationReport::exact("casimir_orderings_agree", "Eq48", context,
                                            combined_residual({&res_forms})));
    const auto eig = RingMatrix<HPoly>::identity(gen.dim)
                         .scaled(HPoly(casimir_eigenvalue_cleared(two_j)));
    const auto res_eig = a - eig;
    out.push_back(VerificationReport::exact("casimir_scalar_eigenvalue", "Eq50", context,
                                            combined_residual({&res_eig})));
    return out;
}

std::vector<VerificationReport> jordanian_limit_suite(int two_j) {
    std::vector<VerificationReport> out;
    const std::string context = "two_j=" + std::to_string(two_j);
    const JordanianSet j = build_jordanian(two_j);
    const auto& h0 = j.source.j0;

    const auto r3 = commutator(h0, j.x) - sinh_h_times_over_h(j.x);
    out.push_back(VerificationReport::exact("jordanian_hx_relation", "Eq3", context,
                                            combined_residual({&r3})));

    const auto ch = cosh_h_times(j.x);
    const auto r4 = commutator(h0, j.y) + (j.y * ch + ch * j.y).scaled(HPoly(Rational(1, 2)));
    out.push_back(VerificationReport::exact("jordanian_hy_relation", "Eq4", context,
                                            combined_residual({&r4})));

    const auto r5 = commutator(j.x, j.y) - h0.scaled(HPoly(2));
    out.push_back(VerificationReport::exact("jordanian_xy_relation", "Eq5", context,
                                            combined_residual({&r5})));

    const auto sh = sinh_h_times(j.x);
    const auto sh_over_2h = sinh_h_times_over_h(j.x).scaled(HPoly(Rational(1, 2)));
    const auto c_map = sh_over_2h * j.y + j.y * sh_over_2h + (sh * sh).scaled(HPoly(Rational(1, 4))) +
                       h0 * h0;
    const auto c_classical = (j.source.jp * j.source.jm + j.source.jm * j.source.jp)
                                 .scaled(HPoly(Rational(1, 2))) +
                             h0 * h0;
    const auto eig = RingMatrix<HPoly>::identity(j.source.dim)
                         .scaled(HPoly(Rational(two_j * (two_j + 2), 4)));
    const auto r6a = c_map - c_classical;
    const auto r6b = c_map - eig;
    out.push_back(VerificationReport::exact("jordanian_casimir", "Eq6", context,
                                            combined_residual({&r6a, &r6b})));
    return out;
}

VerificationReport check_jordanian_numeric(int two_j, const NumericContext& ctx) {
    const JordanianSet j = build_jordanian(two_j);
    NumericContext classical = ctx;
    classical.q = {1.0, 0.0};
    auto ev = [&](const RingMatrix<HPoly>& m) {
        RingMatrix<C> r(m.dim());
        for (int a = 0; a < m.dim(); ++a)
            for (int b = 0; b < m.dim(); ++b) r.at(a, b) = eval_numeric(m.at(a, b), classical);
        return r;
    };
    const auto x = ev(j.x);
    const auto y = ev(j.y);
    const auto h0 = ev(j.source.j0);
    double res = scaled_residual(commutator(h0, x), ev(sinh_h_times_over_h(j.x)));
    const auto ch = ev(cosh_h_times(j.x));
    res = std::max(res, scaled_residual(commutator(h0, y), (y * ch + ch * y).scaled(C(-0.5))));
    res = std::max(res, scaled_residual(commutator(x, y), h0.scaled(C(2.0))));
    const auto sh2h = ev(sinh_h_times_over_h(j.x)).scaled(C(0.5));
    const auto sh = ev(sinh_h_times(j.x));
    const auto c_map = sh2h * y + y * sh2h + (sh * sh).scaled(C(0.25)) + h0 * h0;
    const auto eig = RingMatrix<C>::identity(j.source.dim)
                         .scaled(C(two_j * (two_j + 2) / 4.0));
    res = std::max(res, scaled_residual(c_map, eig));
    return VerificationReport::numeric("jordanian_relations", "Eq3",
                                       "two_j=" + std::to_string(two_j), res, ctx.tol_abs);
}

VerificationReport check_limit_coherence(int two_j) {
    const std::string context = "two_j=" + std::to_string(two_j);
    const RepSpec spec{two_j, Basis::polynomial};
    const DeformedSet d = build_deformed(build_uq_rep(spec));
    const JordanianSet j = build_jordanian(two_j);
    const Rational den_classical = d.xhat_den.substitute_q_one();

    const auto x_sub = d.xhat_num.map_entries([](const HPoly& e) { return e.substitute_q_one(); });
    const auto y_sub = d.yhat.map_entries([](const HPoly& e) { return e.substitute_q_one(); });
    const auto rx = x_sub - j.x.scaled(HPoly(LaurentScalar(den_classical)));
    const auto ry = y_sub - j.y;
    return VerificationReport::exact("classical_limit_coherence", "q1", context,
                                     combined_residual({&rx, &ry}));
}

// ---------------------------------------------------------------------------
// numeric checks
// ---------------------------------------------------------------------------

VerificationReport check_uq_relations_numeric(const NumericGeneratorSet& gen,
                                              const NumericContext& ctx, const std::string& context,
                                              const std::string& tag) {
    RingMatrix<C> bracket(gen.dim);
    for (int i = 0; i < gen.dim; ++i)
        bracket.at(i, i) = q_int(gen.two_m[static_cast<size_t>(i)], ctx);
    double res = scaled_residual(commutator(gen.j0, gen.jp), gen.jp);
    res = std::max(res, scaled_residual(commutator(gen.j0, gen.jm), -gen.jm));
    res = std::max(res, scaled_residual(commutator(gen.jp, gen.jm), bracket));
    res = std::max(res, scaled_residual(gen.q_j0_pos * gen.q_j0_neg,
                                        RingMatrix<C>::identity(gen.dim)));
    return VerificationReport::numeric("uq_defining_relations", tag, context, res, ctx.tol_abs);
}

VerificationReport check_power_identity_numeric(const NumericGeneratorSet& gen, int p,
                                                const NumericContext& ctx,
                                                const std::string& context) {
    const C q_minus_qinv = ctx.q_minus_q_inverse();
    const auto jp_pm1 = gen.jp.pow(p - 1);
    const auto lhs = commutator(gen.jp.pow(p), gen.jm);
    const auto rhs = (gen.q_j0_pos * jp_pm1 * gen.q_j0_pos -
                      gen.q_j0_neg * jp_pm1 * gen.q_j0_neg)
                         .scaled(q_int(p, ctx) / q_minus_qinv);
    return VerificationReport::numeric("raising_power_commutator", "Eq9",
                                       context + ",p=" + std::to_string(p),
                                       scaled_residual(lhs, rhs), ctx.tol_abs);
}

std::vector<VerificationReport> check_conjugation_identity_numeric(const NumericGeneratorSet& gen,
                                                                   const NumericContext& ctx,
                                                                   const std::string& context) {
    std::vector<VerificationReport> out;
    double res = scaled_residual(gen.q_j0_pos * gen.jp * gen.q_j0_neg, gen.jp.scaled(ctx.q));
    res = std::max(res, scaled_residual(gen.q_j0_neg * gen.jp * gen.q_j0_pos,
                                        gen.jp.scaled(1.0 / ctx.q)));
    res = std::max(res, scaled_residual(gen.q_j0_pos * gen.jm * gen.q_j0_neg,
                                        gen.jm.scaled(1.0 / ctx.q)));
    out.push_back(VerificationReport::numeric("q_conjugation_scales_generators", "Eq25", context,
                                              res, ctx.tol_abs));
    const int truncation = gen.dim - 1;
    const auto f0 = f_matrix_numeric(gen.jp, truncation, 0, ctx);
    double res2 = scaled_residual(gen.q_j0_pos * f0 * gen.q_j0_neg,
                                  f_matrix_numeric(gen.jp, truncation, +1, ctx));
    res2 = std::max(res2, scaled_residual(gen.q_j0_neg * f0 * gen.q_j0_pos,
                                          f_matrix_numeric(gen.jp, truncation, -1, ctx)));
    out.push_back(VerificationReport::numeric("q_conjugation_of_series", "Eq25", context, res2,
                                              ctx.tol_abs));
    return out;
}

VerificationReport check_closure_commutator_numeric(const NumericDeformedSet& d,
                                                    const NumericContext& ctx,
                                                    const std::string& context,
                                                    const std::string& tag) {
    RingMatrix<C> bracket(d.source.dim);
    for (int i = 0; i < d.source.dim; ++i)
        bracket.at(i, i) = q_int(d.source.two_m[static_cast<size_t>(i)], ctx);
    return VerificationReport::numeric("closure_commutator_xy", tag, context,
                                       scaled_residual(commutator(d.xhat, d.yhat), bracket),
                                       ctx.tol_abs);
}

VerificationReport check_hx_commutator_numeric(const NumericDeformedSet& d,
                                               const NumericContext& ctx,
                                               const std::string& context,
                                               const std::string& tag) {
    const auto lhs = commutator(d.source.j0, d.xhat);
    RingMatrix<C> rhs(d.source.dim);
    RingMatrix<C> jp_odd = d.source.jp;
    const auto jp2 = d.source.jp * d.source.jp;
    const C h2 = ctx.h / 2.0;
    C h_even = 1.0;
    for (int n = 0; n <= d.nmax; ++n) {
        const C c = eval_numeric(alpha_coeff(n), ctx, 2 * n + 1) * static_cast<double>(2 * n + 1);
        rhs = rhs + jp_odd.scaled(c * h_even);
        if (n < d.nmax) {
            jp_odd = jp_odd * jp2;
            h_even *= h2 * h2;
        }
    }
    return VerificationReport::numeric("cartan_x_commutator", tag, context,
                                       scaled_residual(lhs, rhs), ctx.tol_abs);
}

std::vector<VerificationReport> check_hy_commutator_numeric(const NumericDeformedSet& d,
                                                            const NumericContext& ctx,
                                                            const std::string& context,
                                                            const std::string& tag) {
    std::vector<VerificationReport> out;
    const auto g = rational_weight_numeric(d.source.jp, d.truncation, ctx);
    const auto lhs = commutator(d.source.j0, d.yhat);
    const auto rhs = (g * d.yhat + d.yhat * g).scaled(C(-0.5));
    out.push_back(VerificationReport::numeric("cartan_y_commutator", tag, context,
                                              scaled_residual(lhs, rhs), ctx.tol_abs));
    const auto jp_rec = invert_map_numeric(d, ctx);
    const auto g2 = rational_weight_numeric(jp_rec, d.truncation, ctx);
    const auto rhs2 = (g2 * d.yhat + d.yhat * g2).scaled(C(-0.5));
    out.push_back(VerificationReport::numeric("cartan_y_commutator_series_reading", tag + "b",
                                              context, scaled_residual(rhs, rhs2), ctx.tol_abs));
    return out;
}

std::vector<VerificationReport> check_x_lowering_commutator_numeric(const NumericDeformedSet& d,
                                                                    const NumericContext& ctx,
                                                                    const std::string& context) {
    std::vector<VerificationReport> out;
    const C q_minus_qinv = ctx.q_minus_q_inverse();
    const auto f0 = f_matrix_numeric(d.source.jp, d.truncation, 0, ctx);
    const auto lhs = commutator(d.xhat, d.source.jm);
    const auto rhs = (d.source.q_j0_pos * f0 * d.source.q_j0_pos -
                      d.source.q_j0_neg * f0 * d.source.q_j0_neg)
                         .scaled(1.0 / q_minus_qinv);
    out.push_back(VerificationReport::numeric("x_lowering_commutator", "Eq23", context,
                                              scaled_residual(lhs, rhs), ctx.tol_abs));

    // product form of the generating function vs its Legendre series
    const int kmax = d.truncation / 2;
    const C h2 = ctx.h / 2.0;
    auto factor = [&](int qshift) {
        std::vector<C> coeffs(static_cast<size_t>(kmax) + 1);
        const C base = std::pow(ctx.q, qshift) * h2;
        C fp = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            coeffs[static_cast<size_t>(k)] =
                to_double(binomial_rational(Rational(-1, 2), k)) * std::pow(-1.0, k) * fp;
            fp *= base * base;
        }
        return nilpotent_series_eval(coeffs, d.source.jp * d.source.jp);
    };
    const auto prod = factor(+1) * factor(-1);
    out.push_back(VerificationReport::numeric("generating_function_product_form", "Eq24", context,
                                              scaled_residual(f0, prod), ctx.tol_abs));
    return out;
}

VerificationReport check_uv_series_numeric(const NumericDeformedSet& d, const NumericContext& ctx,
                                           const std::string& context) {
    const C q_minus_qinv = ctx.q_minus_q_inverse();
    const auto m = d.xhat.scaled(ctx.h / 2.0);
    const auto lhs = (d.source.q_j0_pos * m * d.source.q_j0_neg -
                      d.source.q_j0_neg * m * d.source.q_j0_pos)
                         .scaled(1.0 / q_minus_qinv);
    RingMatrix<C> rhs(d.source.dim);
    RingMatrix<C> v_odd = d.source.jp.scaled(ctx.h / 2.0);
    const auto v2 = v_odd * v_odd;
    for (int n = 0; n <= d.nmax; ++n) {
        rhs = rhs + v_odd.scaled(eval_numeric(legendre_at_xi(n), ctx));
        if (n < d.nmax) v_odd = v_odd * v2;
    }
    return VerificationReport::numeric("uv_legendre_series", "Eq35", context,
                                       scaled_residual(lhs, rhs), ctx.tol_abs);
}

VerificationReport check_inversion_numeric(const NumericDeformedSet& d, const NumericContext& ctx,
                                           const std::string& context, const std::string& tag) {
    const auto rec = invert_map_numeric(d, ctx);
    return VerificationReport::numeric("inverse_series_round_trip", tag, context,
                                       scaled_residual(rec, d.source.jp), ctx.tol_abs);
}

VerificationReport check_casimir_numeric(const NumericGeneratorSet& gen, int two_j,
                                         const NumericContext& ctx, const std::string& context) {
    RingMatrix<C> c1 = gen.jp * gen.jm;
    RingMatrix<C> c2 = gen.jm * gen.jp;
    for (int i = 0; i < gen.dim; ++i) {
        const int two_m = gen.two_m[static_cast<size_t>(i)];
        c1.at(i, i) += q_int_half(two_m, ctx) * q_int_half(two_m - 2, ctx);
        c2.at(i, i) += q_int_half(two_m, ctx) * q_int_half(two_m + 2, ctx);
    }
    const auto eig = RingMatrix<C>::identity(gen.dim)
                         .scaled(q_int_half(two_j, ctx) * q_int_half(two_j + 2, ctx));
    double res = scaled_residual(c1, c2);
    res = std::max(res, scaled_residual(c1, eig));
    return VerificationReport::numeric("casimir_scalar_eigenvalue", "Eq50", context, res,
                                       ctx.tol_abs);
}

VerificationReport check_h_zero_numeric(const RepSpec& spec, const NumericContext& ctx) {
    NumericContext small = ctx;
    small.h = {1e-8, 0.0};
    const auto gen = build_uq_rep_numeric(spec, small);
    const auto d = build_deformed_numeric(gen, small);
    double res = scaled_residual(d.xhat, gen.jp);
    res = std::max(res, scaled_residual(d.yhat, gen.jm));
    return VerificationReport::numeric("h_zero_limit_continuity", "h0",
                                       "two_j=" + std::to_string(spec.two_j), res, 1e-7);
}

VerificationReport check_basis_equivalence(const RepSpec& spec, const NumericContext& ctx) {
    RepSpec poly = spec;
    poly.basis = Basis::polynomial;
    RepSpec sym = spec;
    sym.basis = Basis::symmetric;
    const auto gp = build_uq_rep_numeric(poly, ctx);
    const auto gs = build_uq_rep_numeric(sym, ctx);
    const auto dmat = basis_similarity(spec, ctx);
    RingMatrix<C> dinv(gp.dim);
    for (int i = 0; i < gp.dim; ++i) dinv.at(i, i) = 1.0 / dmat.at(i, i);

    double res = scaled_residual(dmat * gp.jp * dinv, gs.jp);
    res = std::max(res, scaled_residual(dmat * gp.jm * dinv, gs.jm));
    res = std::max(res, scaled_residual(dmat * gp.q_j0_pos * dinv, gs.q_j0_pos));

    // Traces of generator words are basis independent.
    auto trace = [](const RingMatrix<C>& m) {
        C t = 0.0;
        for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
        return t;
    };
    const std::vector<std::pair<RingMatrix<C>, RingMatrix<C>>> words = {
        {gp.jp * gp.jm, gs.jp * gs.jm},
        {gp.jp * gp.jp * gp.jm * gp.jm, gs.jp * gs.jp * gs.jm * gs.jm},
        {gp.q_j0_pos * gp.jp * gp.jm * gp.q_j0_neg, gs.q_j0_pos * gs.jp * gs.jm * gs.q_j0_neg},
        {gp.jm * gp.q_j0_pos * gp.jp, gs.jm * gs.q_j0_pos * gs.jp},
    };
    for (const auto& [a, b] : words) {
        const double scale = std::max({1.0, std::abs(trace(a)), std::abs(trace(b))});
        res = std::max(res, std::abs(trace(a) - trace(b)) / scale);
    }
    return VerificationReport::numeric("basis_equivalence", "Eq39",
                                       "two_j=" + std::to_string(spec.two_j), res, ctx.tol_abs);
}

VerificationReport check_xhat_basis_action(const RepSpec& spec, const NumericContext& ctx) {
    RepSpec sym = spec;
    sym.basis = Basis::symmetric;
    const auto gen = build_uq_rep_numeric(sym, ctx);
    const auto d = build_deformed_numeric(gen, ctx);
    const auto formula = xhat_basis_action(sym, ctx);
    return VerificationReport::numeric("x_basis_action_formula", "Eq42",
                                       "two_j=" + std::to_string(spec.two_j),
                                       scaled_residual(d.xhat, formula), ctx.tol_abs);
}

std::vector<VerificationReport> normal_ordered_y_check(const RepSpec& spec,
                                                       const NumericContext& ctx) {
    std::vector<VerificationReport> out;
    const std::string context = "two_j=" + std::to_string(spec.two_j);
    RepSpec sym = spec;
    sym.basis = Basis::symmetric;
    const auto gen = build_uq_rep_numeric(sym, ctx);
    const auto d = build_deformed_numeric(gen, ctx);
    const auto normal = yhat_normal_ordered(gen, ctx);
    const auto action = yhat_basis_action(sym, ctx);

    out.push_back(VerificationReport::numeric("y_normal_ordered_form", "Eq43", context,
                                              scaled_residual(d.yhat, normal), ctx.tol_abs));
    auto r = VerificationReport::numeric("y_basis_action_formula", "Eq45", context,
                                         scaled_residual(d.yhat, action), ctx.tol_abs);
    r.note = "bracket repaired to [j+m+2k+2l]; matrix product is ground truth";
    out.push_back(std::move(r));
    return out;
}

} // namespace uqh
