// Acceptance suite: one criterion per function, one pass/fail line each.
// Exact criteria require identically zero residuals; numeric criteria pin
// their tolerances here, in code.

#include <chrono>
#include <complex>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "uqh/alpha_poly.hpp"
#include "uqh/coalgebra.hpp"
#include "uqh/runner.hpp"
#include "uqh/verify.hpp"

using namespace uqh;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int index, const std::string& label, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

DeformedSet deformed(int two_j) { return build_deformed(build_uq_rep({two_j, Basis::polynomial})); }

bool all_exact_pass(const std::vector<VerificationReport>& rs, std::string& why) {
    for (const auto& r : rs) {
        if (!r.pass || r.max_residual != 0.0) {
            why = r.name + " @ " + r.context;
            return false;
        }
    }
    return true;
}

void criterion_1_exact_closure() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    for (int two_j = 1; two_j <= 8 && ok; ++two_j) {
        const auto r = check_closure_commutator_exact(deformed(two_j), "two_j=" + std::to_string(two_j));
        if (!r.pass || r.max_residual != 0.0) {
            ok = false;
            why = r.context;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed > 60.0) {
        ok = false;
        why = "runtime over budget";
    }
    std::ostringstream detail;
    detail << "two_j <= 8, " << std::fixed << std::setprecision(2) << elapsed << "s";
    report(1, "exact closure commutator equals the q-bracket of 2H", ok,
           ok ? detail.str() : why);
}

void criterion_2_exact_auxiliaries() {
    bool ok = true;
    std::string why;
    for (int two_j = 1; two_j <= 6 && ok; ++two_j) {
        const std::string label = "two_j=" + std::to_string(two_j);
        const ExactGeneratorSet gen = build_uq_rep({two_j, Basis::polynomial});
        const DeformedSet d = build_deformed(gen);
        std::vector<VerificationReport> rs;
        for (int p = 1; p <= gen.dim; ++p) rs.push_back(check_power_identity_exact(gen, p, label));
        for (auto& r : check_conjugation_identity_exact(gen, label)) rs.push_back(r);
        rs.push_back(check_hx_commutator_exact(d, label));
        for (auto& r : check_hy_commutator_exact(d, label)) rs.push_back(r);
        for (auto& r : check_x_lowering_commutator_exact(d, label)) rs.push_back(r);
        rs.push_back(check_uv_series_exact(d, label));
        ok = all_exact_pass(rs, why);
    }
    report(2, "exact auxiliary identities (powers, conjugation, mixed commutators, u-v series)",
           ok, ok ? "two_j <= 6" : why);
}

void criterion_3_coefficient_tables() {
    bool ok = true;
    std::string why;

    // the six symbolic expansions
    auto mono = [](long c, std::vector<int> e) { return AlphaPoly::term(Rational(c), std::move(e)); };
    std::vector<AlphaPoly> expected(7);
    expected[0] = AlphaPoly(1);
    expected[1] = mono(-1, {1});
    expected[2] = mono(-1, {0, 1}) + mono(3, {2});
    expected[3] = mono(-1, {0, 0, 1}) + mono(8, {1, 1}) + mono(-12, {3});
    expected[4] = mono(-1, {0, 0, 0, 1}) + mono(10, {1, 0, 1}) + mono(5, {0, 2}) +
                  mono(-55, {2, 1}) + mono(55, {4});
    expected[5] = mono(-1, {0, 0, 0, 0, 1}) + mono(12, {1, 0, 0, 1}) + mono(12, {0, 1, 1}) +
                  mono(-78, {2, 0, 1}) + mono(-78, {1, 2}) + mono(364, {3, 1}) + mono(-273, {5});
    expected[6] = mono(-1, {0, 0, 0, 0, 0, 1}) + mono(14, {1, 0, 0, 0, 1}) + mono(14, {0, 1, 0, 1}) +
                  mono(-105, {2, 0, 0, 1}) + mono(7, {0, 0, 2}) + mono(-210, {1, 1, 1}) +
                  mono(560, {3, 0, 1}) + mono(-35, {0, 3}) + mono(840, {2, 2}) +
                  mono(-2380, {4, 1}) + mono(1428, {6});

    std::vector<AlphaPoly> symbols(7);
    symbols[0] = AlphaPoly(1);
    for (int i = 1; i <= 6; ++i) symbols[static_cast<size_t>(i)] = AlphaPoly::symbol(i);
    const auto symbolic = beta_recursive(symbols, 6);
    for (int n = 0; n <= 6 && ok; ++n) {
        if (!(symbolic[static_cast<size_t>(n)] == expected[static_cast<size_t>(n)])) {
            ok = false;
            why = "symbolic expansion differs at n=" + std::to_string(n);
        }
    }

    // oracle agreement at 20 random rational assignments, n <= 10
    std::mt19937_64 rng(20260809);
    std::uniform_int_distribution<int> num(-25, 25);
    std::uniform_int_distribution<int> den(1, 12);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        std::vector<Rational> alpha(11);
        alpha[0] = 1;
        for (int n = 1; n <= 10; ++n) alpha[static_cast<size_t>(n)] = Rational(num(rng), den(rng));
        const auto rec = beta_recursive(alpha, 10);
        const auto orc = beta_oracle(alpha, 10);
        for (int n = 0; n <= 10 && ok; ++n) {
            if (rec[static_cast<size_t>(n)] != orc[static_cast<size_t>(n)]) {
                ok = false;
                why = "recursion and reversion oracle differ, trial " + std::to_string(trial) +
                      " n=" + std::to_string(n);
            }
        }
    }
    report(3, "inverse-series coefficients: symbolic expansions and partition recursion vs oracle",
           ok, ok ? "n <= 10, 20 assignments" : why);
}

void criterion_4_classical_collapse() {
    bool ok = true;
    std::string why;
    for (int n = 0; n <= 10 && ok; ++n) {
        if (alpha_coeff(n).substitute_q_one() != Rational(1, 2 * n + 1)) {
            ok = false;
            why = "alpha classical limit wrong at n=" + std::to_string(n);
        }
    }
    const std::vector<Rational> tanh{1,
                                     Rational(-1, 3),
                                     Rational(2, 15),
                                     Rational(-17, 315),
                                     Rational(62, 2835),
                                     Rational(-1382, 155925),
                                     Rational(21844, 6081075)};
    const auto betas = beta_series(6);
    for (int n = 0; n <= 6 && ok; ++n) {
        if (betas.values[static_cast<size_t>(n)].substitute_q_one() != tanh[static_cast<size_t>(n)]) {
            ok = false;
            why = "beta classical limit differs from the tanh coefficient at n=" + std::to_string(n);
        }
    }
    // the Bernoulli closed form as printed is shifted by one index; recorded,
    // not asserted — shifting it must reproduce the tanh coefficients
    bool recorded = true;
    for (int n = 1; n <= 6 && recorded; ++n)
        recorded = tanh_coefficient_bernoulli(n + 1) == tanh[static_cast<size_t>(n)] &&
                   tanh_coefficient_bernoulli(n) == tanh[static_cast<size_t>(n - 1)];
    if (!recorded && ok) {
        ok = false;
        why = "bernoulli comparison table inconsistent";
    }
    report(4, "classical collapse of alpha and beta; bernoulli index shift recorded", ok,
           ok ? "alpha n <= 10, beta n <= 6; formula(n) = tanh coeff of x^{2n-1}" : why);
}

void criterion_5_jordanian_suite() {
    bool ok = true;
    std::string why;
    for (int two_j = 1; two_j <= 6 && ok; ++two_j) ok = all_exact_pass(jordanian_limit_suite(two_j), why);
    report(5, "jordanian limit relations and casimir over the rationals", ok,
           ok ? "two_j <= 6, eigenvalue j(j+1)" : why);
}

void criterion_6_casimir() {
    bool ok = true;
    std::string why;
    for (int two_j = 1; two_j <= 6 && ok; ++two_j) {
        const ExactGeneratorSet gen = build_uq_rep({two_j, Basis::polynomial});
        ok = all_exact_pass(check_casimir_exact(gen, two_j, "two_j=" + std::to_string(two_j)), why);
    }
    report(6, "casimir orderings agree and act as the scalar [j][j+1]", ok,
           ok ? "two_j <= 6" : why);
}

void criterion_7_inversion() {
    bool ok = true;
    std::string why;
    for (int two_j = 1; two_j <= 8 && ok; ++two_j) {
        const DeformedSet d = deformed(two_j);
        if (!(invert_map(d) == d.source.jp)) {
            ok = false;
            why = "matrix round trip failed at two_j=" + std::to_string(two_j);
        }
    }
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mod(0.01, 0.3), arg(0.0, 2.0 * M_PI);
    int count = 0;
    double worst = 0.0;
    while (count < 100 && ok) {
        NumericContext ctx;
        ctx.q = sample_generic_q(rng);
        const std::complex<double> u = std::polar(mod(rng), arg(rng));
        const auto v = v_of_u(u, ctx);
        const double err = std::abs(u_of_v(v, ctx) - u);
        worst = std::max(worst, err);
        if (err >= 1e-10) {
            ok = false;
            std::ostringstream ss;
            ss << "scalar round trip error " << err << " at u=" << u << " q=" << ctx.q;
            why = ss.str();
        }
        ++count;
    }
    std::ostringstream detail;
    detail << "matrix two_j <= 8; scalar worst error " << std::scientific << std::setprecision(2)
           << worst;
    report(7, "inverse map round trips, matrix and scalar closed form", ok,
           ok ? detail.str() : why);
}

void criterion_8_generating_function() {
    bool ok = true;
    std::string why;
    const auto coeffs = f_series(10);
    const auto product = f_series_product_form(10);
    for (int n = 0; n <= 10 && ok; ++n) {
        const auto expected = legendre_at_xi(n);
        if (!(coeffs[static_cast<size_t>(n)] == expected) ||
            !(product[static_cast<size_t>(n)] == expected)) {
            ok = false;
            why = "coefficient differs at n=" + std::to_string(n);
        }
    }
    report(8, "generating function coefficients equal the legendre values", ok,
           ok ? "n <= 10, both expansions" : why);
}

void criterion_9_coproducts() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    NumericContext ctx;
    for (const auto& [a, b] : {std::pair{1, 1}, std::pair{1, 2}}) {
        for (const char* which : {"uq", "qh", "uh"}) {
            if (!ok) break;
            const auto rs = coproduct_suite(a, b, which, "exact", ctx);
            for (const auto& r : rs) {
                if (!r.pass) {
                    ok = false;
                    why = std::string(which) + " " + r.name + " @ " + r.context;
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed > 120.0) {
        ok = false;
        why = "runtime over budget";
    }
    std::ostringstream detail;
    detail << "pairs 1x1 and 1x2, " << std::fixed << std::setprecision(2) << elapsed << "s";
    report(9, "coproduct homomorphism, induced relations, jordanian coproducts", ok,
           ok ? detail.str() : why);
}

void criterion_10_numeric_consistency() {
    bool ok = true;
    std::string why;
    std::mt19937_64 rng(987654321);
    double worst = 0.0;
    for (int point = 0; point < 5 && ok; ++point) {
        NumericContext ctx;
        ctx.q = sample_generic_q(rng);
        ctx.h = sample_h(rng);
        ctx.tol_abs = 1e-10;
        const auto rs = verify_suite_numeric(8, ctx, ",point=" + std::to_string(point));
        for (const auto& r : rs) {
            worst = std::max(worst, r.max_residual);
            if (!r.pass) {
                ok = false;
                std::ostringstream ss;
                ss << r.name << " @ " << r.context << " residual=" << r.max_residual;
                why = ss.str();
                break;
            }
        }
        if (!ok) break;
        for (int two_j = 1; two_j <= 6; ++two_j) {
            const auto r = check_jordanian_numeric(two_j, ctx);
            worst = std::max(worst, r.max_residual);
            if (!r.pass) {
                ok = false;
                why = r.name + " @ " + r.context;
            }
        }
        for (const auto& [a, b] : {std::pair{1, 1}, std::pair{1, 2}}) {
            for (const char* which : {"uq", "qh", "uh"}) {
                for (const auto& r : coproduct_suite(a, b, which, "numeric", ctx)) {
                    worst = std::max(worst, r.max_residual);
                    if (!r.pass) {
                        ok = false;
                        why = std::string(which) + " " + r.name;
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "5 points, worst residual " << std::scientific << std::setprecision(2) << worst
           << " < 1e-10; basis-action formulas two_j <= 4";
    report(10, "numeric re-check of every exact identity at random generic points", ok,
           ok ? detail.str() : why);
}

} // namespace

int main() {
    criterion_1_exact_closure();
    criterion_2_exact_auxiliaries();
    criterion_3_coefficient_tables();
    criterion_4_classical_collapse();
    criterion_5_jordanian_suite();
    criterion_6_casimir();
    criterion_7_inversion();
    criterion_8_generating_function();
    criterion_9_coproducts();
    criterion_10_numeric_consistency();
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
