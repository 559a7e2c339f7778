#include "uqh/alpha_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace uqh {

void AlphaPoly::trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

AlphaPoly AlphaPoly::symbol(int i) {
    if (i < 1) throw std::invalid_argument("symbol index must be >= 1");
    Monomial m(static_cast<size_t>(i), 0);
    m.back() = 1;
    AlphaPoly p;
    p.terms_[m] = 1;
    return p;
}

AlphaPoly AlphaPoly::term(const Rational& c, Monomial m) {
    AlphaPoly p;
    trim(m);
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) { return *this += -o; }

AlphaPoly AlphaPoly::operator+(const AlphaPoly& o) const {
    AlphaPoly r = *this;
    r += o;
    return r;
}

AlphaPoly AlphaPoly::operator-(const AlphaPoly& o) const {
    AlphaPoly r = *this;
    r -= o;
    return r;
}

AlphaPoly AlphaPoly::operator*(const AlphaPoly& o) const {
    AlphaPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second == 0)
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) { return *this = *this * o; }

AlphaPoly AlphaPoly::operator*(const Rational& c) const {
    AlphaPoly r;
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

Rational AlphaPoly::evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= values.size()) throw std::invalid_argument("missing value for symbol");
            t *= rational_pow(values[i], m[i]);
        }
        total += t;
    }
    return total;
}

std::string AlphaPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        if (first && c < 0) {
            os << "-";
            a = -c;
        }
        first = false;
        std::ostringstream mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (mono.tellp() > 0) mono << "*";
            mono << "a" << (i + 1);
            if (m[i] > 1) mono << "^" << m[i];
        }
        if (mono.tellp() == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << mono.str();
        }
    }
    return os.str();
}

} // namespace uqh
