#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqh/repcore.hpp"
#include "uqh/verify.hpp"

using namespace uqh;

namespace {

const NumericContext kCtx{{1.3, 0.2}, {0.7, 0.1}};

HPoly hp(int c) { return HPoly(c); }

} // namespace

TEST_CASE("spin one-half polynomial basis matrices") {
    const ExactGeneratorSet g = build_uq_rep({1, Basis::polynomial});
    REQUIRE(g.dim == 2);
    CHECK(g.two_m == std::vector<int>{1, -1});

    CHECK(g.jp.at(0, 1) == hp(1));
    CHECK(g.jp.at(1, 0) == hp(0));
    CHECK(g.jm.at(1, 0) == hp(1)); // [1][1] = 1
    CHECK(g.jm.at(0, 1) == hp(0));

    const auto c = commutator(g.jp, g.jm);
    CHECK(c.at(0, 0) == hp(1));
    CHECK(c.at(1, 1) == hp(-1));
    CHECK(c.at(0, 1) == hp(0));
}

TEST_CASE("spin one lowering entries") {
    const ExactGeneratorSet g = build_uq_rep({2, Basis::polynomial});
    REQUIRE(g.dim == 3);
    // [j+m][j-m+1] at m = 1, 0 gives [2][1] and [1][2]
    CHECK(g.jm.at(1, 0) == HPoly(q_integer(2)));
    CHECK(g.jm.at(2, 1) == HPoly(q_integer(2)));
}

TEST_CASE("defining relations hold exactly up to two_j = 8") {
    for (int two_j = 1; two_j <= 8; ++two_j) {
        const ExactGeneratorSet g = build_uq_rep({two_j, Basis::polynomial});
        const auto r = check_uq_relations_exact(g, "t");
        INFO("two_j = ", two_j);
        CHECK(r.pass);
        CHECK(r.max_residual == 0.0);
        // q^{J0} Jp q^{-J0} = q Jp
        const auto conj = g.q_j0_pos * g.jp * g.q_j0_neg;
        CHECK(conj == g.jp.scaled(HPoly(LaurentScalar::s_power(2))));
    }
}

TEST_CASE("bracket difference identity [a][b+1] - [a+1][b] = [a-b]") {
    for (int a = 0; a <= 9; ++a)
        for (int b = 0; b <= 9; ++b) {
            INFO("a = ", a, " b = ", b);
            CHECK(q_integer(a) * q_integer(b + 1) - q_integer(a + 1) * q_integer(b) ==
                  q_integer(a - b));
        }
}

TEST_CASE("power commutator identity, cleared form") {
    for (int two_j = 1; two_j <= 6; ++two_j) {
        const ExactGeneratorSet g = build_uq_rep({two_j, Basis::polynomial});
        for (int p = 1; p <= g.dim; ++p) {
            const auto r = check_power_identity_exact(g, p, "t");
            INFO("two_j = ", two_j, " p = ", p);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("symmetric basis at q = 1 is the classical ladder") {
    NumericContext ctx;
    ctx.q = {1.0, 0.0};
    const NumericGeneratorSet g = build_uq_rep_numeric({1, Basis::symmetric}, ctx);
    CHECK(std::abs(g.jp.at(0, 1) - 1.0) < 1e-6);
    CHECK(std::abs(g.jm.at(1, 0) - 1.0) < 1e-6);
    CHECK(std::abs(g.j0.at(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(g.j0.at(1, 1) + 0.5) < 1e-12);
}

TEST_CASE("symmetric basis requires numeric context") {
    CHECK_THROWS_AS((void)build_uq_rep({1, Basis::symmetric}), ConfigError);
}

TEST_CASE("negative radicand with a real-matrix request") {
    NumericContext ctx;
    ctx.q = {-0.5, 0.0}; // [2] = q + 1/q = -2.5 < 0
    CHECK_THROWS_AS((void)build_uq_rep_numeric({2, Basis::symmetric}, ctx, true), NonGenericQ);
    CHECK_NOTHROW((void)build_uq_rep_numeric({2, Basis::symmetric}, ctx, false));
}

TEST_CASE("power action matches the closed formula") {
    CHECK(power_action_check({3, Basis::symmetric}, 0, kCtx).pass);
    CHECK(power_action_check({3, Basis::symmetric}, 2, kCtx).pass);
    CHECK(power_action_check({3, Basis::symmetric}, 4, kCtx).pass); // nilpotency

    NumericContext ctx;
    ctx.q = {1.3, 0.0};
    const auto r = power_action_check({3, Basis::symmetric}, 2, ctx);
    CHECK(r.pass);
    CHECK(r.max_residual < 1e-12);
}

TEST_CASE("nilpotent series evaluation") {
    const ExactGeneratorSet g = build_uq_rep({1, Basis::polynomial});

    // constant series on the zero matrix
    const RingMatrix<HPoly> zero(2);
    const std::vector<HPoly> c{hp(7), hp(3)};
    CHECK(nilpotent_series_eval(c, zero) == RingMatrix<HPoly>::identity(2).scaled(hp(7)));

    // geometric series (1-A)^{-1} on the 2x2 raising matrix: I + Jp
    const std::vector<HPoly> ones{hp(1), hp(1), hp(1)};
    CHECK(nilpotent_series_eval(ones, g.jp) == RingMatrix<HPoly>::identity(2) + g.jp);

    // square-root dressing on the 3x3 raising matrix: I - (1/2)(h/2)^2 Jp^2
    const ExactGeneratorSet g3 = build_uq_rep({2, Basis::polynomial});
    const auto s = sqrt_dressing(g3.jp, 2);
    const auto expected = RingMatrix<HPoly>::identity(3) -
                          (g3.jp * g3.jp).scaled(HPoly::monomial(2, LaurentScalar(Rational(1, 8))));
    CHECK(s == expected);

    // a non-nilpotent argument is rejected
    CHECK_THROWS_AS((void)nilpotent_series_eval(ones, RingMatrix<HPoly>::identity(2)), NotNilpotent);
}

TEST_CASE("single-sqrt factorial ratio agrees with per-step amplitudes at real q") {
    // at q > 0 every q-integer is positive, so the literal one-sqrt reading
    // of the factorial ratio is branch-free and must match the matrix power
    NumericContext ctx;
    ctx.q = {1.45, 0.0};
    for (int two_j : {2, 3, 4}) {
        const auto g = build_uq_rep_numeric({two_j, Basis::symmetric}, ctx);
        for (int p = 1; p <= two_j; ++p) {
            const auto power = g.jp.pow(p);
            for (int c = p; c < g.dim; ++c) {
                const int two_m = g.two_m[static_cast<size_t>(c)];
                const int jm = (two_j - two_m) / 2, jp = (two_j + two_m) / 2;
                if (jm - p < 0) continue;
                double ratio = 1.0;
                for (int k = jp + 1; k <= jp + p; ++k)
                    ratio *= eval_numeric(q_integer(k), ctx).real();
                for (int k = jm - p + 1; k <= jm; ++k)
                    ratio *= eval_numeric(q_integer(k), ctx).real();
                CHECK(std::abs(power.at(c - p, c) - std::sqrt(ratio)) <
                      1e-12 * std::max(1.0, std::sqrt(ratio)));
            }
        }
    }
}

TEST_CASE("basis equivalence through the diagonal similarity") {
    for (int two_j = 1; two_j <= 4; ++two_j) {
        const auto r = check_basis_equivalence({two_j, Basis::polynomial}, kCtx);
        INFO("two_j = ", two_j);
        CHECK(r.pass);
        CHECK(r.max_residual < 1e-10);
    }
}
