#pragma once

#include <complex>
#include <vector>

#include "uqh/matrix.hpp"
#include "uqh/numeric_context.hpp"
#include "uqh/qseries.hpp"
#include "uqh/report.hpp"

namespace uqh {

enum class Basis { polynomial, symmetric };

/// Irreducible representation label: twoJ = 2j plus the basis choice.
/// Basis vectors are ordered by descending magnetic number, index i having
/// twoM = twoJ - 2i, which makes every raising operator strictly upper
/// triangular.
struct RepSpec {
    int two_j = 1;
    Basis basis = Basis::polynomial;
    int dimension() const { return two_j + 1; }
};

/// The generators of one representation over a scalar ring T, together with
/// the diagonal of 2*J0 (kept as integers so exact code never needs
/// half-integer exponents).
template <class T>
struct GeneratorSet {
    int dim = 0;
    std::vector<int> two_m;
    RingMatrix<T> jp, jm, j0, q_j0_pos, q_j0_neg;
};

using ExactGeneratorSet = GeneratorSet<HPoly>;
using NumericGeneratorSet = GeneratorSet<std::complex<double>>;

/// Polynomial (Verma-type) basis, exact over the Laurent ring:
/// Jp e_m = e_{m+1}, Jm e_m = [j+m][j-m+1] e_{m-1}, q^{+-J0} = diag(s^{+-twoM}).
ExactGeneratorSet build_uq_rep(const RepSpec& spec);

/// Either basis at a concrete (q, h). The symmetric basis carries square roots
/// of q-integers and is numeric-only. With require_real set, a radicand with a
/// negative real value raises NonGenericQ.
NumericGeneratorSet build_uq_rep_numeric(const RepSpec& spec, const NumericContext& ctx,
                                         bool require_real = false);

/// Classical sl(2) generators (the q -> 1 limit of the polynomial basis);
/// q^{+-J0} degenerate to the identity.
ExactGeneratorSet classical_generators(int two_j);

/// Checks Jp^p against the closed-form entry formula
/// ([j-m]![j+m+p]!/([j+m]![j-m-p]!))^{1/2} in the symmetric basis.
VerificationReport power_action_check(const RepSpec& spec, int p, const NumericContext& ctx);

/// Diagonal similarity mapping the polynomial basis to the symmetric basis.
RingMatrix<std::complex<double>> basis_similarity(const RepSpec& spec, const NumericContext& ctx);

} // namespace uqh
