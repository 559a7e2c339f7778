#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace uqh {

// Exact base scalars. Coefficient growth in the series inversion is
// combinatorial, so fixed-width integers are not an option.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// (r choose k) for rational r: r(r-1)...(r-k+1)/k!
inline Rational binomial_rational(const Rational& r, int k) {
    Rational out = 1;
    for (int i = 0; i < k; ++i) {
        out *= (r - i);
        out /= (i + 1);
    }
    return out;
}

inline Rational rational_pow(const Rational& x, int e) {
    Rational r = 1;
    Rational b = x;
    int n = e;
    if (n < 0) {
        b = Rational(1) / b;
        n = -n;
    }
    for (; n > 0; n >>= 1) {
        if (n & 1) r *= b;
        b *= b;
    }
    return r;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::complex<double> to_complex(const Rational& x) {
    return {to_double(x), 0.0};
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// "3/4", "-2", "0"
inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace uqh
