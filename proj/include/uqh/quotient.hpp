#pragma once

#include <complex>
#include <string>

#include "uqh/laurent.hpp"

namespace uqh {

/// Exact pair num/den over the Laurent ring. Divisibility of num by den is
/// never assumed; equality is tested by cross-multiplication.
class LaurentQuotient {
  public:
    LaurentQuotient() : num_(0), den_(1) {}
    LaurentQuotient(int c) : num_(c), den_(1) {}                     // NOLINT(google-explicit-constructor)
    LaurentQuotient(const Rational& c) : num_(c), den_(1) {}         // NOLINT(google-explicit-constructor)
    LaurentQuotient(const LaurentScalar& n) : num_(n), den_(1) {}    // NOLINT(google-explicit-constructor)
    LaurentQuotient(LaurentScalar n, LaurentScalar d);

    const LaurentScalar& num() const { return num_; }
    const LaurentScalar& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the denominator reduced to a unit, i.e. the value is an
    /// honest Laurent polynomial (available via num()).
    bool is_polynomial() const { return den_.is_one(); }

    LaurentQuotient operator-() const;
    LaurentQuotient operator+(const LaurentQuotient& o) const;
    LaurentQuotient operator-(const LaurentQuotient& o) const;
    LaurentQuotient operator*(const LaurentQuotient& o) const;
    LaurentQuotient& operator+=(const LaurentQuotient& o);
    LaurentQuotient& operator-=(const LaurentQuotient& o);
    LaurentQuotient& operator*=(const LaurentQuotient& o);
    LaurentQuotient operator*(const Rational& c) const;

    bool operator==(const LaurentQuotient& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const LaurentQuotient& o) const { return !(*this == o); }

    /// Classical limit s -> 1. Handles vanishing denominators by exact
    /// cancellation of (s - 1) factors shared with the numerator.
    Rational substitute_q_one() const;

    /// num(s)/den(s); throws NonGenericQ(index_hint) when den(s) ~ 0.
    std::complex<double> eval_s(std::complex<double> s, int index_hint = -1) const;

    std::string str() const;

  private:
    void normalize();
    LaurentScalar num_, den_;
};

inline LaurentQuotient operator*(const Rational& c, const LaurentQuotient& x) { return x * c; }

} // namespace uqh
