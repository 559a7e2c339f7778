#include "uqh/laurent.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "uqh/errors.hpp"

namespace uqh {

bool LaurentScalar::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool LaurentScalar::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational LaurentScalar::coefficient(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentScalar::min_exponent() const { return coeffs_.begin()->first; }
int LaurentScalar::max_exponent() const { return coeffs_.rbegin()->first; }

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    LaurentScalar r = *this;
    r += o;
    return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
    LaurentScalar r = *this;
    r -= o;
    return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    LaurentScalar r;
    for (const auto& [ea, ca] : coeffs_) {
        for (const auto& [eb, cb] : o.coeffs_) {
            int e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();) {
        if (it->second == 0)
            it = r.coeffs_.erase(it);
        else
            ++it;
    }
    return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
    *this = *this * o;
    return *this;
}

LaurentScalar LaurentScalar::operator*(const Rational& c) const {
    LaurentScalar r;
    if (c == 0) return r;
    for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e, a * c);
    return r;
}

LaurentScalar LaurentScalar::pow(int e) const {
    LaurentScalar r(1);
    LaurentScalar b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

LaurentScalar LaurentScalar::exact_divide(const LaurentScalar& divisor) const {
    if (divisor.is_zero()) throw DivisionNotExact("division by zero Laurent scalar");
    if (is_zero()) return {};

    // Shift both operands to ordinary polynomials and long-divide over Q.
    const int la = min_exponent(), lb = divisor.min_exponent();
    std::vector<Rational> num(static_cast<size_t>(max_exponent() - la + 1));
    std::vector<Rational> den(static_cast<size_t>(divisor.max_exponent() - lb + 1));
    for (const auto& [e, c] : coeffs_) num[static_cast<size_t>(e - la)] = c;
    for (const auto& [e, c] : divisor.coeffs_) den[static_cast<size_t>(e - lb)] = c;

    if (num.size() < den.size())
        throw DivisionNotExact("Laurent division leaves a nonzero remainder");

    std::vector<Rational> quot(num.size() - den.size() + 1);
    for (size_t k = quot.size(); k-- > 0;) {
        Rational q = num[k + den.size() - 1] / den.back();
        quot[k] = q;
        if (q == 0) continue;
        for (size_t i = 0; i < den.size(); ++i) num[k + i] -= q * den[i];
    }
    for (const Rational& rem : num)
        if (rem != 0) throw DivisionNotExact("Laurent division leaves a nonzero remainder");

    LaurentScalar r;
    for (size_t k = 0; k < quot.size(); ++k)
        if (quot[k] != 0) r.coeffs_.emplace(static_cast<int>(k) + la - lb, quot[k]);
    return r;
}

bool LaurentScalar::divisible_by(const LaurentScalar& divisor) const {
    try {
        (void)exact_divide(divisor);
        return true;
    } catch (const DivisionNotExact&) {
        return false;
    }
}

Rational LaurentScalar::substitute_q_one() const {
    Rational r = 0;
    for (const auto& [e, c] : coeffs_) r += c;
    return r;
}

std::complex<double> LaurentScalar::eval_s(std::complex<double> s) const {
    std::complex<double> r = 0.0;
    for (const auto& [e, c] : coeffs_) {
        std::complex<double> p = 1.0;
        std::complex<double> b = e >= 0 ? s : 1.0 / s;
        for (int n = std::abs(e); n > 0; n >>= 1) {
            if (n & 1) p *= b;
            b *= b;
        }
        r += to_complex(c) * p;
    }
    return r;
}

double LaurentScalar::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : coeffs_) m = std::max(m, std::abs(to_double(c)));
    return m;
}

namespace {

using ZPoly = std::vector<Integer>; // dense, index = degree, no trailing zeros

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Content-free version of p (gcd of coefficients divided out, leading
/// coefficient made positive).
void make_primitive(ZPoly& p) {
    Integer content = 0;
    for (const auto& c : p) content = gcd(content, c);
    if (content == 0) return;
    if (p.back() < 0) content = -content;
    for (auto& c : p) c /= content;
}

/// Pseudo-remainder of lc(b)^{deg a - deg b + 1} * a modulo b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const size_t db = b.size() - 1;
    const Integer& lc = b.back();
    while (a.size() > db) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        const Integer q = a.back();
        const size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lc;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

/// Primitive PRS: content is stripped at every step to keep coefficients sane.
ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Clear rational denominators and the s-offset: p = unit * returned ZPoly.
ZPoly to_integer_poly(const LaurentScalar& p) {
    Integer den_lcm = 1;
    for (const auto& [e, c] : p.coefficients())
        den_lcm = lcm(den_lcm, denominator(c));
    const int lo = p.min_exponent();
    ZPoly out(static_cast<size_t>(p.max_exponent() - lo + 1));
    for (const auto& [e, c] : p.coefficients())
        out[static_cast<size_t>(e - lo)] = numerator(c) * (den_lcm / denominator(c));
    return out;
}

} // namespace

LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b) {
    auto from_zpoly = [](const ZPoly& p) {
        LaurentScalar r;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) r += LaurentScalar::monomial(static_cast<int>(i), Rational(p[i]));
        return r;
    };
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) {
        ZPoly pb = to_integer_poly(b);
        make_primitive(pb);
        return from_zpoly(pb);
    }
    if (b.is_zero()) {
        ZPoly pa = to_integer_poly(a);
        make_primitive(pa);
        return from_zpoly(pa);
    }
    return from_zpoly(zpoly_gcd(to_integer_poly(a), to_integer_poly(b)));
}

std::string LaurentScalar::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        if (first && c < 0) {
            os << "-";
            a = -c;
        }
        first = false;
        if (e == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "s";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace uqh
