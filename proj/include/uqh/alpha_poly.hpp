#pragma once

#include <map>
#include <string>
#include <vector>

#include "uqh/rational.hpp"

namespace uqh {

/// Polynomial with rational coefficients in the abstract symbols a1, a2, ...
/// (the series coefficients treated as indeterminates). Monomial keys are
/// exponent vectors with trailing zeros trimmed, so the map is canonical.
class AlphaPoly {
  public:
    using Monomial = std::vector<int>; // exponent of a_{i+1} at position i

    AlphaPoly() = default;
    AlphaPoly(int c) : AlphaPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    AlphaPoly(const Rational& c) {                 // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[{}] = c;
    }

    /// The symbol a_i (i >= 1).
    static AlphaPoly symbol(int i);
    static AlphaPoly term(const Rational& c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    AlphaPoly operator-() const;
    AlphaPoly operator+(const AlphaPoly& o) const;
    AlphaPoly operator-(const AlphaPoly& o) const;
    AlphaPoly operator*(const AlphaPoly& o) const;
    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly& operator*=(const AlphaPoly& o);
    AlphaPoly operator*(const Rational& c) const;

    bool operator==(const AlphaPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlphaPoly& o) const { return !(*this == o); }

    /// Substitute concrete values for the symbols (values[i] stands for a_{i+1}).
    Rational evaluate(const std::vector<Rational>& values) const;

    std::string str() const;

  private:
    static void trim(Monomial& m);
    std::map<Monomial, Rational> terms_;
};

inline AlphaPoly operator*(const Rational& c, const AlphaPoly& p) { return p * c; }

} // namespace uqh
