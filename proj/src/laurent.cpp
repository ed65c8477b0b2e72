#include "rock/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace rock {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
    LaurentPoly::Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
    LaurentPoly::Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff c) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::q_int(int m) {
    LaurentPoly p;
    if (m < 0) return -1 * q_int(-m);
    for (int k = 0; k < m; ++k) p.add_term(m - 1 - 2 * k, 1);
    return p;
}

LaurentPoly LaurentPoly::q_fact(int m) {
    if (m < 0) throw std::invalid_argument("q_fact of negative integer");
    LaurentPoly p(1);
    for (int k = 2; k <= m; ++k) p *= q_int(k);
    return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
    Coeff s = 0;
    for (const auto& [k, c] : terms_) s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) p.terms_[-k] = c;
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [x, c] : terms_) p.terms_[x + k] = c;
    return p;
}

bool LaurentPoly::nonnegative() const {
    for (const auto& [k, c] : terms_)
        if (c < 0) return false;
    return true;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) r.add_term(a + b, checked_mul(x, y));
    *this = std::move(r);
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Coeff a = c;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (a < 0) a = -a;
        first = false;
        if (k == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a;
        os << "q";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace rock
