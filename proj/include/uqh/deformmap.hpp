#pragma once

#include "uqh/matrix.hpp"
#include "uqh/repcore.hpp"

namespace uqh {

/// The deformed triple built from a U_q generator set. Exact entries carry
/// the alpha-denominators cleared: xhat_num = D * Xhat with
/// D = prod_{n=1}^{nmax} [2n+1], so every entry is an honest h-polynomial
/// over the Laurent ring. Yhat needs no clearing. Hhat equals source.j0.
struct DeformedSet {
    ExactGeneratorSet source;
    RingMatrix<HPoly> xhat_num;
    LaurentScalar xhat_den;
    RingMatrix<HPoly> yhat;
    int truncation = 0; // series order actually used = dim - 1
    int nmax = 0;       // largest n with 2n+1 <= truncation
};

/// Same triple at a concrete (q, h); no clearing needed.
struct NumericDeformedSet {
    NumericGeneratorSet source;
    RingMatrix<std::complex<double>> xhat, yhat;
    int truncation = 0;
    int nmax = 0;
};

int series_nmax(int dim);

DeformedSet build_deformed(const ExactGeneratorSet& gen);
NumericDeformedSet build_deformed_numeric(const NumericGeneratorSet& gen,
                                          const NumericContext& ctx);

/// Reconstructs the source raising generator through the inverse series in
/// Xhat. Exact mode clears all beta-denominators internally and performs a
/// final exact division, so a wrong identity surfaces as DivisionNotExact or
/// an inequality, never as a silent approximation.
RingMatrix<HPoly> invert_map(const DeformedSet& d);
RingMatrix<std::complex<double>> invert_map_numeric(const NumericDeformedSet& d,
                                                    const NumericContext& ctx);

/// Classical-limit Jordanian triple over Q[h]: X from the arctanh series of
/// the classical raising generator, Y square-root dressed, H = J0.
struct JordanianSet {
    ExactGeneratorSet source;
    RingMatrix<HPoly> x, y;
};
JordanianSet build_jordanian(int two_j);

/// Square-root dressing (1 - ((h/2) Jp)^2)^{1/2} as a terminating series.
RingMatrix<HPoly> sqrt_dressing(const RingMatrix<HPoly>& jp, int truncation);
RingMatrix<std::complex<double>> sqrt_dressing_numeric(const RingMatrix<std::complex<double>>& jp,
                                                       int truncation,
                                                       const NumericContext& ctx);

// Terminating entire-function series of nilpotent arguments.
RingMatrix<HPoly> sinh_h_times(const RingMatrix<HPoly>& x);        // sinh(hX)
RingMatrix<HPoly> sinh_h_times_over_h(const RingMatrix<HPoly>& x); // (1/h) sinh(hX)
RingMatrix<HPoly> cosh_h_times(const RingMatrix<HPoly>& x);        // cosh(hX)
RingMatrix<HPoly> exp_h_times(const RingMatrix<HPoly>& x, int sign); // e^{+-hX}

/// Casimir in the two orderings, cleared by (q - q^{-1})^2 so half-integer
/// magnetic numbers stay inside the Laurent ring:
///   lowering_first: (q-q^{-1})^2 J+J- + diag((q^m - q^{-m})(q^{m-1} - q^{-m+1}))
///   raising_first:  (q-q^{-1})^2 J-J+ + diag((q^m - q^{-m})(q^{m+1} - q^{-m-1}))
RingMatrix<HPoly> casimir_cleared(const ExactGeneratorSet& gen, bool lowering_first);

/// (q^j - q^{-j})(q^{j+1} - q^{-j-1}): the eigenvalue [j][j+1] cleared by the
/// same factor.
LaurentScalar casimir_eigenvalue_cleared(int two_j);

// Numeric reconstructions of Yhat used to cross-check the operator orderings
// (symmetric basis only; all three must agree with the matrix product).
RingMatrix<std::complex<double>> yhat_normal_ordered(const NumericGeneratorSet& gen,
                                                     const NumericContext& ctx);
RingMatrix<std::complex<double>> yhat_basis_action(const RepSpec& spec, const NumericContext& ctx);
RingMatrix<std::complex<double>> xhat_basis_action(const RepSpec& spec, const NumericContext& ctx);

} // namespace uqh
