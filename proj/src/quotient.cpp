#include "uqh/quotient.hpp"

#include <cmath>

#include "uqh/errors.hpp"

namespace uqh {

LaurentQuotient::LaurentQuotient(LaurentScalar n, LaurentScalar d)
    : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionNotExact("Laurent quotient with zero denominator");
    normalize();
}

void LaurentQuotient::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentScalar(1);
        return;
    }
    if (num_.divisible_by(den_)) {
        num_ = num_.exact_divide(den_);
        den_ = LaurentScalar(1);
        return;
    }
    // Fully reduce: unreduced addition multiplies denominators, which blows
    // up the series recursions without this.
    const LaurentScalar g = laurent_gcd(num_, den_);
    if (!g.is_zero() && g.max_exponent() > g.min_exponent()) {
        num_ = num_.exact_divide(g);
        den_ = den_.exact_divide(g);
        if (den_.coefficients().size() == 1) { // unit survived
            num_ = num_.exact_divide(den_);
            den_ = LaurentScalar(1);
            return;
        }
    }
    // Canonicalize by the unit s^{-min} / c so the denominator starts at s^0
    // with unit lowest coefficient.
    const int shift = -den_.min_exponent();
    const Rational c = Rational(1) / den_.coefficient(den_.min_exponent());
    const LaurentScalar unit = LaurentScalar::monomial(shift, c);
    num_ *= unit;
    den_ *= unit;
}

LaurentQuotient LaurentQuotient::operator-() const {
    LaurentQuotient r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentQuotient LaurentQuotient::operator+(const LaurentQuotient& o) const {
    if (den_ == o.den_) return {num_ + o.num_, den_};
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

LaurentQuotient LaurentQuotient::operator-(const LaurentQuotient& o) const {
    if (den_ == o.den_) return {num_ - o.num_, den_};
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

LaurentQuotient LaurentQuotient::operator*(const LaurentQuotient& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

LaurentQuotient& LaurentQuotient::operator+=(const LaurentQuotient& o) { return *this = *this + o; }
LaurentQuotient& LaurentQuotient::operator-=(const LaurentQuotient& o) { return *this = *this - o; }
LaurentQuotient& LaurentQuotient::operator*=(const LaurentQuotient& o) { return *this = *this * o; }

LaurentQuotient LaurentQuotient::operator*(const Rational& c) const {
    if (c == 0) return {};
    return {num_ * c, den_};
}

Rational LaurentQuotient::substitute_q_one() const {
    LaurentScalar n = num_, d = den_;
    Rational dv = d.substitute_q_one();
    const LaurentScalar s_minus_1 = LaurentScalar::s_power(1) - LaurentScalar(1);
    while (dv == 0) {
        if (n.substitute_q_one() != 0)
            throw DivisionNotExact("classical limit q -> 1 has a pole");
        if (n.is_zero()) return 0;
        n = n.exact_divide(s_minus_1);
        d = d.exact_divide(s_minus_1);
        dv = d.substitute_q_one();
    }
    return n.substitute_q_one() / dv;
}

std::complex<double> LaurentQuotient::eval_s(std::complex<double> s, int index_hint) const {
    const std::complex<double> dv = den_.eval_s(s);
    const double scale = std::max(1.0, den_.max_abs_coefficient());
    if (std::abs(dv) < 1e-12 * scale)
        throw NonGenericQ(index_hint, "denominator vanishes at this q (non-generic value)");
    return num_.eval_s(s) / dv;
}

std::string LaurentQuotient::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace uqh
