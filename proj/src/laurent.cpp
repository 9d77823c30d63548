#include "spoq/laurent.hpp"

#include <sstream>

#include "spoq/errors.hpp"

namespace spoq {

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const { return terms_.begin()->first; }
long LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(long exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p += o;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p -= o;
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) p.add_term(e1 + e2, c1 * c2);
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly p;
    if (c == 0) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

LaurentPoly LaurentPoly::shifted(long exp) const {
    LaurentPoly p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e + exp, v);
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(-e, v);
    return p;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    if (q0 == 0) throw ZeroBase("Laurent polynomial evaluated at q = 0");
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * rat_pow(q0, e);
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            out << rat_to_string(c);
        } else {
            if (c != 1) out << rat_to_string(c) << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::string LaurentPoly::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            out << rat_to_latex(c);
        } else {
            if (c != 1) out << rat_to_latex(c) << " ";
            out << "q";
            if (e != 1) out << "^{" << e << "}";
        }
    }
    return out.str();
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

Rational lp_eval(const LaurentPoly& p, const Rational& q0) { return p.eval(q0); }

LaurentPoly lp_bar(const LaurentPoly& p) { return p.bar(); }

LaurentPoly q_number(long s) {
    LaurentPoly p;
    if (s == 0) return p;
    long a = s < 0 ? -s : s;
    // q^{a-1} + q^{a-3} + ... + q^{1-a}
    for (long e = a - 1; e >= 1 - a; e -= 2) p.add_term(e, Rational(s < 0 ? -1 : 1));
    return p;
}

} // namespace spoq
