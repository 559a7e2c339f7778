#pragma once

#include <complex>
#include <map>
#include <string>

#include "uqh/rational.hpp"

namespace uqh {

/// Exact Laurent polynomial in s = q^{1/2} with rational coefficients.
///
/// The representation is canonical: no zero coefficients are ever stored, so
/// two equal values hold identical maps and operator== is structural.
class LaurentScalar {
  public:
    LaurentScalar() = default;
    LaurentScalar(int c) { set(0, Rational(c)); }              // NOLINT(google-explicit-constructor)
    LaurentScalar(const Rational& c) { set(0, c); }            // NOLINT(google-explicit-constructor)

    static LaurentScalar monomial(int exp, const Rational& c) {
        LaurentScalar r;
        r.set(exp, c);
        return r;
    }
    /// s^exp
    static LaurentScalar s_power(int exp) { return monomial(exp, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the value is a plain rational (only the s^0 term, possibly zero).
    bool is_constant() const;

    const std::map<int, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int exp) const;
    int min_exponent() const; // requires nonzero
    int max_exponent() const; // requires nonzero

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar& operator*=(const LaurentScalar& o);
    LaurentScalar operator*(const Rational& c) const;
    LaurentScalar pow(int e) const; // e >= 0

    bool operator==(const LaurentScalar& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

    /// Exact quotient; throws DivisionNotExact when the remainder is nonzero.
    LaurentScalar exact_divide(const LaurentScalar& divisor) const;
    bool divisible_by(const LaurentScalar& divisor) const;

    /// Substitute s = 1 (the classical limit q -> 1): sum of all coefficients.
    Rational substitute_q_one() const;

    /// Evaluate at a concrete complex s.
    std::complex<double> eval_s(std::complex<double> s) const;

    /// Largest |coefficient| as a double, 0 for the zero value.
    double max_abs_coefficient() const;

    std::string str() const;

  private:
    void set(int exp, const Rational& c) {
        if (c != 0) coeffs_[exp] = c;
    }
    friend class HPoly;
    std::map<int, Rational> coeffs_;
};

inline LaurentScalar operator*(const Rational& c, const LaurentScalar& x) { return x * c; }

/// Polynomial gcd over Q[s], determined up to units. The result is an
/// integer-coefficient primitive polynomial with lowest exponent 0 and
/// positive leading coefficient; it divides both inputs exactly.
LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b);

} // namespace uqh
