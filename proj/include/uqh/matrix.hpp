#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "uqh/errors.hpp"
#include "uqh/hpoly.hpp"

namespace uqh {

/// Dense square matrix over a pluggable scalar ring (HPoly for exact work,
/// std::complex<double> for numeric work). Dimensions stay <= ~36, so dense
/// row-major storage is the whole story.
template <class T>
class RingMatrix {
  public:
    RingMatrix() = default;
    explicit RingMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

    static RingMatrix identity(int dim) {
        RingMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = T(1);
        return m;
    }

    int dim() const { return dim_; }

    T& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const T& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_zero() const {
        const T zero{};
        for (const auto& x : e_)
            if (!(x == zero)) return false;
        return true;
    }

    bool strictly_upper_triangular() const {
        const T zero{};
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c <= r; ++c)
                if (!(at(r, c) == zero)) return false;
        return true;
    }

    RingMatrix operator-() const {
        RingMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    RingMatrix operator+(const RingMatrix& o) const {
        RingMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    RingMatrix operator-(const RingMatrix& o) const {
        RingMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    RingMatrix operator*(const RingMatrix& o) const {
        const T zero{};
        RingMatrix r(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < dim_; ++k) {
                const T& a = at(i, k);
                if (a == zero) continue;
                for (int j = 0; j < dim_; ++j) {
                    const T& b = o.at(k, j);
                    if (b == zero) continue;
                    r.at(i, j) += a * b;
                }
            }
        }
        return r;
    }

    template <class S>
    RingMatrix scaled(const S& c) const {
        RingMatrix r = *this;
        for (auto& x : r.e_) x = x * c;
        return r;
    }

    RingMatrix pow(int e) const {
        RingMatrix r = identity(dim_);
        RingMatrix b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    bool operator==(const RingMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    template <class F>
    auto map_entries(F&& f) const {
        RingMatrix<decltype(f(std::declval<const T&>()))> r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

  private:
    int dim_ = 0;
    std::vector<T> e_;
};

template <class T>
RingMatrix<T> commutator(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    return a * b - b * a;
}

/// sum_k coeffs[k] A^k, truncated at the nilpotency bound k = dim-1.
/// Throws NotNilpotent when A^{dim} != 0.
template <class T>
RingMatrix<T> nilpotent_series_eval(const std::vector<T>& coeffs, const RingMatrix<T>& a) {
    if (!a.strictly_upper_triangular() && !a.pow(a.dim()).is_zero())
        throw NotNilpotent("series argument is not nilpotent at this dimension");
    const T zero{};
    RingMatrix<T> acc(a.dim());
    RingMatrix<T> ap = RingMatrix<T>::identity(a.dim());
    const size_t kmax = std::min(coeffs.size(), static_cast<size_t>(a.dim()));
    for (size_t k = 0; k < kmax; ++k) {
        if (!(coeffs[k] == zero)) acc = acc + ap.scaled(coeffs[k]);
        if (k + 1 < kmax) ap = ap * a;
    }
    return acc;
}

inline double max_abs(const RingMatrix<std::complex<double>>& m) {
    double r = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r = std::max(r, std::abs(m.at(i, j)));
    return r;
}

/// Scale-normalized residual used by every numeric check:
/// max|A-B| / max(1, ||A||, ||B||).
inline double scaled_residual(const RingMatrix<std::complex<double>>& a,
                              const RingMatrix<std::complex<double>>& b) {
    return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)});
}

/// Largest |rational coefficient| across all entries; zero iff the matrix is
/// identically zero, which is the exact-mode pass condition.
inline double max_abs_coefficient(const RingMatrix<HPoly>& m) {
    double r = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r = std::max(r, m.at(i, j).max_abs_coefficient());
    return r;
}

} // namespace uqh
