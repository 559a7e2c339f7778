#pragma once

#include "uqh/deformmap.hpp"
#include "uqh/repcore.hpp"
#include "uqh/verify.hpp"

namespace uqh {

/// Kronecker product, left factor varying slowest: index (iL, iR) maps to
/// iL * dimR + iR.
template <class T>
RingMatrix<T> kron(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    const T zero{};
    RingMatrix<T> r(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            const T& aij = a.at(i, j);
            if (aij == zero) continue;
            for (int k = 0; k < b.dim(); ++k)
                for (int l = 0; l < b.dim(); ++l) {
                    const T& bkl = b.at(k, l);
                    if (bkl == zero) continue;
                    r.at(i * b.dim() + k, j * b.dim() + l) = aij * bkl;
                }
        }
    }
    return r;
}

/// Flip of the tensor factors (conjugation by the swap permutation); defined
/// for equal factor dimensions.
template <class T>
RingMatrix<T> tensor_flip(const RingMatrix<T>& m, int dim_l, int dim_r) {
    RingMatrix<T> r(m.dim());
    for (int i = 0; i < dim_l; ++i)
        for (int k = 0; k < dim_r; ++k)
            for (int j = 0; j < dim_l; ++j)
                for (int l = 0; l < dim_r; ++l)
                    r.at(k * dim_l + i, l * dim_l + j) = m.at(i * dim_r + k, j * dim_r + l);
    return r;
}

/// Coproduct image on the tensor space:
/// J+- -> J+- (x) q^{J0} + q^{-J0} (x) J+-,  J0 -> J0 (x) 1 + 1 (x) J0,
/// q^{+-J0} -> q^{+-J0} (x) q^{+-J0}.
template <class T>
GeneratorSet<T> coproduct_uq(const GeneratorSet<T>& l, const GeneratorSet<T>& r) {
    GeneratorSet<T> g;
    g.dim = l.dim * r.dim;
    g.two_m.reserve(static_cast<size_t>(g.dim));
    for (int i = 0; i < l.dim; ++i)
        for (int k = 0; k < r.dim; ++k)
            g.two_m.push_back(l.two_m[static_cast<size_t>(i)] + r.two_m[static_cast<size_t>(k)]);
    const auto il = RingMatrix<T>::identity(l.dim);
    const auto ir = RingMatrix<T>::identity(r.dim);
    g.jp = kron(l.jp, r.q_j0_pos) + kron(l.q_j0_neg, r.jp);
    g.jm = kron(l.jm, r.q_j0_pos) + kron(l.q_j0_neg, r.jm);
    g.j0 = kron(l.j0, ir) + kron(il, r.j0);
    g.q_j0_pos = kron(l.q_j0_pos, r.q_j0_pos);
    g.q_j0_neg = kron(l.q_j0_neg, r.q_j0_neg);
    return g;
}

/// The induced deformed triple on the tensor space: the deformation series
/// applied to the coproduct image.
DeformedSet induced_coproduct_qh(const ExactGeneratorSet& tensor_gen);

/// Jordanian (classical-limit) coproducts:
/// X -> X (x) 1 + 1 (x) X, Y -> Y (x) e^{hX} + e^{-hX} (x) Y, and H likewise.
struct JordanianCoproduct {
    int dim_l = 0, dim_r = 0;
    RingMatrix<HPoly> x, y, h;
};
JordanianCoproduct jordanian_coproduct(int two_j_left, int two_j_right);

/// Checks the untwisted-H relations on the Jordanian tensor triple over Q[h].
std::vector<VerificationReport> jordanian_coproduct_check(int two_j_left, int two_j_right);

/// Non-cocommutativity: the flipped coproduct image differs for q != 1 and
/// collapses to the cocommutative one at q = 1.
VerificationReport check_flip_noncocommutative(int two_j);

} // namespace uqh
