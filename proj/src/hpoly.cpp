#include "uqh/hpoly.hpp"

#include <sstream>

#include "uqh/errors.hpp"

namespace uqh {

HPoly HPoly::monomial(int k, const LaurentScalar& c) {
    HPoly p;
    if (c.is_zero()) return p;
    p.c_.resize(static_cast<size_t>(k) + 1);
    p.c_[static_cast<size_t>(k)] = c;
    return p;
}

LaurentScalar HPoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<size_t>(k)];
}

void HPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

HPoly HPoly::operator-() const {
    HPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

HPoly HPoly::operator+(const HPoly& o) const {
    HPoly r = *this;
    r += o;
    return r;
}

HPoly HPoly::operator-(const HPoly& o) const {
    HPoly r = *this;
    r -= o;
    return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

HPoly HPoly::operator*(const HPoly& o) const {
    HPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.resize(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

HPoly& HPoly::operator*=(const HPoly& o) {
    *this = *this * o;
    return *this;
}

HPoly HPoly::operator*(const LaurentScalar& c) const {
    HPoly r;
    if (c.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(a * c);
    r.trim();
    return r;
}

HPoly HPoly::operator*(const Rational& c) const { return *this * LaurentScalar(c); }

HPoly HPoly::pow(int e) const {
    HPoly r(1);
    HPoly b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

HPoly HPoly::exact_divide(const HPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionNotExact("division by zero h-polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree())
        throw DivisionNotExact("h-polynomial division leaves a nonzero remainder");

    std::vector<LaurentScalar> rem = c_;
    const auto& d = divisor.c_;
    HPoly quot;
    quot.c_.resize(c_.size() - d.size() + 1);
    for (size_t k = quot.c_.size(); k-- > 0;) {
        if (rem[k + d.size() - 1].is_zero()) continue;
        LaurentScalar q = rem[k + d.size() - 1].exact_divide(d.back());
        quot.c_[k] = q;
        for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw DivisionNotExact("h-polynomial division leaves a nonzero remainder");
    quot.trim();
    return quot;
}

HPoly HPoly::substitute_q_one() const {
    HPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(LaurentScalar(c.substitute_q_one()));
    r.trim();
    return r;
}

std::complex<double> HPoly::eval(std::complex<double> s, std::complex<double> h) const {
    std::complex<double> r = 0.0;
    for (size_t k = c_.size(); k-- > 0;) r = r * h + c_[k].eval_s(s);
    return r;
}

double HPoly::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, c.max_abs_coefficient());
    return m;
}

std::string HPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c_[k].str();
        } else {
            os << "(" << c_[k].str() << ")*h";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace uqh
