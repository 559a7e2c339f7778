#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqh/deformmap.hpp"
#include "uqh/verify.hpp"

using namespace uqh;

namespace {

const NumericContext kCtx{{1.7, 0.2}, {0.9, 0.0}};

DeformedSet deformed(int two_j) { return build_deformed(build_uq_rep({two_j, Basis::polynomial})); }

} // namespace

TEST_CASE("spin one-half: nilpotency kills every correction") {
    const DeformedSet d = deformed(1);
    CHECK(d.xhat_den == LaurentScalar(1));
    CHECK(d.xhat_num == d.source.jp);
    CHECK(d.yhat == d.source.jm);
    CHECK(check_closure_commutator_exact(d, "t").pass);
}

TEST_CASE("spin one: x undeformed but y dressed") {
    const DeformedSet d = deformed(2);
    CHECK(d.xhat_num == d.source.jp); // Jp^3 = 0 at dim 3
    CHECK(d.yhat != d.source.jm);
    const auto s = sqrt_dressing(d.source.jp, 2);
    CHECK(d.yhat == s * d.source.jm * s);
}

TEST_CASE("spin three-half: first genuinely deformed raising matrix") {
    const DeformedSet d = deformed(3);
    CHECK(d.xhat_den == q_integer(3));
    const auto expected = d.source.jp.scaled(HPoly(q_integer(3))) +
                          (d.source.jp * d.source.jp * d.source.jp)
                              .scaled(HPoly::monomial(2, xi_value() * Rational(1, 4)));
    CHECK(d.xhat_num == expected);
}

TEST_CASE("closure commutator is exactly [2H]") {
    for (int two_j = 1; two_j <= 8; ++two_j) {
        const auto r = check_closure_commutator_exact(deformed(two_j), "t");
        INFO("two_j = ", two_j);
        CHECK(r.pass);
        CHECK(r.max_residual == 0.0);
    }
}

TEST_CASE("auxiliary commutators, cleared form") {
    // the closed-algebra commutators hold through two_j = 8; the remaining
    // auxiliaries are required through two_j = 6 and checked there too
    for (int two_j = 1; two_j <= 8; ++two_j) {
        const DeformedSet d = deformed(two_j);
        INFO("two_j = ", two_j);
        CHECK(check_hx_commutator_exact(d, "t").pass);
        for (const auto& r : check_hy_commutator_exact(d, "t")) CHECK(r.pass);
        CHECK(check_jacobi_exact(d, "t").pass);
        if (two_j > 6) continue;
        for (const auto& r : check_x_lowering_commutator_exact(d, "t")) CHECK(r.pass);
        CHECK(check_uv_series_exact(d, "t").pass);
    }
}

TEST_CASE("inverse series reconstructs the raising generator") {
    for (int two_j = 1; two_j <= 8; ++two_j) {
        const DeformedSet d = deformed(two_j);
        INFO("two_j = ", two_j);
        CHECK(invert_map(d) == d.source.jp);
    }
    // numeric round trip
    const auto gen = build_uq_rep_numeric({6, Basis::polynomial}, kCtx);
    const auto dn = build_deformed_numeric(gen, kCtx);
    CHECK(scaled_residual(invert_map_numeric(dn, kCtx), gen.jp) < 1e-10);
}

TEST_CASE("h -> 0 limit restores the source generators") {
    for (int two_j = 3; two_j <= 4; ++two_j) {
        const auto r = check_h_zero_exact(deformed(two_j), "t");
        CHECK(r.pass);
    }
    const auto cont = check_h_zero_numeric({4, Basis::polynomial}, kCtx);
    CHECK(cont.pass);
}

TEST_CASE("grading of the deformed generators") {
    for (int two_j = 1; two_j <= 6; ++two_j) CHECK(check_grading_exact(deformed(two_j), "t").pass);
}

TEST_CASE("casimir forms agree and act as a scalar") {
    for (int two_j = 1; two_j <= 6; ++two_j) {
        const ExactGeneratorSet g = build_uq_rep({two_j, Basis::polynomial});
        for (const auto& r : check_casimir_exact(g, two_j, "t")) {
            INFO("two_j = ", two_j, " ", r.name);
            CHECK(r.pass);
        }
    }
    // numeric spot check including half-integer magnetic numbers
    for (int two_j = 1; two_j <= 5; ++two_j) {
        const auto g = build_uq_rep_numeric({two_j, Basis::polynomial}, kCtx);
        CHECK(check_casimir_numeric(g, two_j, kCtx, "t").pass);
    }
}

TEST_CASE("jordanian limit relations over the rationals") {
    SUBCASE("spin one-half collapses to plain sl(2)") {
        const JordanianSet j = build_jordanian(1);
        CHECK(j.x == j.source.jp);
        CHECK(j.y == j.source.jm);
    }
    for (int two_j = 1; two_j <= 6; ++two_j) {
        for (const auto& r : jordanian_limit_suite(two_j)) {
            INFO("two_j = ", two_j, " ", r.name);
            CHECK(r.pass);
            CHECK(r.max_residual == 0.0);
        }
    }
}

TEST_CASE("classical limit commutes with the construction") {
    for (int two_j = 1; two_j <= 6; ++two_j) {
        INFO("two_j = ", two_j);
        CHECK(check_limit_coherence(two_j).pass);
    }
}

TEST_CASE("u matrix from conjugation equals the legendre series and its classical limit") {
    const DeformedSet d = deformed(3);
    CHECK(check_uv_series_exact(d, "t").pass);

    // entrywise (q - q^{-1})-division must be exact, and at q -> 1 the result
    // is (h/2)[H, X], i.e. (1/2) sinh(hX) on the classical side
    const auto m = d.xhat_num.scaled(HPoly::monomial(1, LaurentScalar(Rational(1, 2))));
    const auto n = d.source.q_j0_pos * m * d.source.q_j0_neg -
                   d.source.q_j0_neg * m * d.source.q_j0_pos;
    const HPoly qdiff(q_power_diff(2));
    const auto u_num = n.map_entries([&](const HPoly& e) { return e.exact_divide(qdiff); });

    const JordanianSet j = build_jordanian(3);
    const auto sinh_half = sinh_h_times(j.x).scaled(HPoly(Rational(1, 2)));
    const Rational den_classical = d.xhat_den.substitute_q_one();
    const auto u_classical = u_num.map_entries([](const HPoly& e) { return e.substitute_q_one(); });
    CHECK(u_classical == sinh_half.scaled(HPoly(LaurentScalar(den_classical))));
}

TEST_CASE("numeric identities at a generic point") {
    for (int two_j = 1; two_j <= 5; ++two_j) {
        const auto gen = build_uq_rep_numeric({two_j, Basis::polynomial}, kCtx);
        const auto d = build_deformed_numeric(gen, kCtx);
        INFO("two_j = ", two_j);
        CHECK(check_uq_relations_numeric(gen, kCtx, "t").pass);
        CHECK(check_closure_commutator_numeric(d, kCtx, "t").pass);
        CHECK(check_hx_commutator_numeric(d, kCtx, "t").pass);
        for (const auto& r : check_hy_commutator_numeric(d, kCtx, "t")) CHECK(r.pass);
        for (const auto& r : check_x_lowering_commutator_numeric(d, kCtx, "t")) CHECK(r.pass);
        CHECK(check_uv_series_numeric(d, kCtx, "t").pass);
        for (int p = 1; p <= gen.dim; ++p)
            CHECK(check_power_identity_numeric(gen, p, kCtx, "t").pass);
        for (const auto& r : check_conjugation_identity_numeric(gen, kCtx, "t")) CHECK(r.pass);
    }
}

TEST_CASE("three constructions of the dressed lowering operator agree") {
    for (int two_j = 1; two_j <= 4; ++two_j) {
        INFO("two_j = ", two_j);
        for (const auto& r : normal_ordered_y_check({two_j, Basis::polynomial}, kCtx)) {
            INFO(r.name, " residual = ", r.max_residual);
            CHECK(r.pass);
        }
        CHECK(check_xhat_basis_action({two_j, Basis::polynomial}, kCtx).pass);
    }

    // at h = 0 all constructions reduce to the plain lowering matrix
    NumericContext ctx = kCtx;
    ctx.h = {0.0, 0.0};
    const auto gen = build_uq_rep_numeric({2, Basis::symmetric}, ctx);
    CHECK(scaled_residual(yhat_normal_ordered(gen, ctx), gen.jm) < 1e-12);
    CHECK(scaled_residual(yhat_basis_action({2, Basis::symmetric}, ctx), gen.jm) < 1e-12);
    CHECK(scaled_residual(build_deformed_numeric(gen, ctx).yhat, gen.jm) < 1e-12);
}

TEST_CASE("spin one-half numeric: q = 1.2, h = 0.5 cross checks") {
    NumericContext ctx;
    ctx.q = {1.2, 0.0};
    ctx.h = {0.5, 0.0};
    for (const auto& r : normal_ordered_y_check({2, Basis::polynomial}, ctx)) {
        CHECK(r.pass);
        CHECK(r.max_residual < 1e-10);
    }
}
