#pragma once

#include <complex>
#include <string>
#include <vector>

#include "uqh/laurent.hpp"

namespace uqh {

/// Polynomial in the deformation parameter h whose coefficients are Laurent
/// polynomials in s. Trailing zero coefficients are trimmed, so equality is
/// structural.
class HPoly {
  public:
    HPoly() = default;
    HPoly(int c) { *this = HPoly(LaurentScalar(c)); }          // NOLINT(google-explicit-constructor)
    HPoly(const Rational& c) { *this = HPoly(LaurentScalar(c)); } // NOLINT(google-explicit-constructor)
    HPoly(const LaurentScalar& c) {                               // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) c_.push_back(c);
    }

    /// c * h^k
    static HPoly monomial(int k, const LaurentScalar& c);

    bool is_zero() const { return c_.empty(); }
    /// Degree in h; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    LaurentScalar coefficient(int k) const;
    const std::vector<LaurentScalar>& coefficients() const { return c_; }

    HPoly operator-() const;
    HPoly operator+(const HPoly& o) const;
    HPoly operator-(const HPoly& o) const;
    HPoly operator*(const HPoly& o) const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const HPoly& o);
    HPoly operator*(const LaurentScalar& c) const;
    HPoly operator*(const Rational& c) const;
    HPoly pow(int e) const;

    bool operator==(const HPoly& o) const { return c_ == o.c_; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }

    /// Long division in h; every coefficient step must divide exactly in the
    /// Laurent ring and the remainder must vanish, else DivisionNotExact.
    HPoly exact_divide(const HPoly& divisor) const;

    /// Substitute s = 1 in every coefficient; the result is a polynomial in h
    /// with constant (rational) coefficients.
    HPoly substitute_q_one() const;

    /// Drop all positive powers of h (the h -> 0 limit).
    LaurentScalar h_zero_part() const { return coefficient(0); }

    std::complex<double> eval(std::complex<double> s, std::complex<double> h) const;

    double max_abs_coefficient() const;

    std::string str() const;

  private:
    void trim();
    std::vector<LaurentScalar> c_; // c_[k] multiplies h^k
};

inline HPoly operator*(const LaurentScalar& c, const HPoly& p) { return p * c; }
inline HPoly operator*(const Rational& c, const HPoly& p) { return p * c; }

} // namespace uqh
