#include "spoq/rational_func.hpp"

#include <vector>

#include "spoq/errors.hpp"

namespace spoq {
namespace {

// Dense ordinary polynomial, constant term first, no trailing zero.
using Poly = std::vector<Rational>;

Poly to_poly(const LaurentPoly& p, long shift) {
    Poly out;
    if (p.is_zero()) return out;
    out.assign(static_cast<std::size_t>(p.max_exp() - shift) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - shift)] = c;
    return out;
}

LaurentPoly to_laurent(const Poly& p, long shift) {
    LaurentPoly out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out.add_term(static_cast<long>(i) + shift, p[i]);
    return out;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero), in place on a copy.
Poly poly_rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

// Exact quotient a / b; remainder is known to vanish.
Poly poly_div_exact(Poly a, const Poly& b) {
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        quot[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return quot;
}

// Monic gcd via Euclid.
Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

} // namespace

RationalFunc::RationalFunc(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    if (den_.is_one()) return;
    long a = num_.min_exp(), b = den_.min_exp();
    Poly n = to_poly(num_, a), d = to_poly(den_, b);
    Poly g = poly_gcd(n, d);
    if (g.size() > 1) {
        n = poly_div_exact(std::move(n), g);
        d = poly_div_exact(std::move(d), g);
    }
    Rational c = d.front(); // nonzero constant term by construction
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = to_laurent(n, a - b);
    den_ = to_laurent(d, 0);
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) return RationalFunc(num_ + o.num_);
    return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) return RationalFunc(num_ - o.num_);
    return RationalFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return RationalFunc();
    if (den_.is_one() && o.den_.is_one()) return RationalFunc(num_ * o.num_);
    return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return RationalFunc(num_ * o.den_, den_ * o.num_);
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::bar() const { return RationalFunc(num_.bar(), den_.bar()); }

Rational RationalFunc::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) throw DivisionByZero("denominator vanishes at the requested q");
    return num_.eval(q0) / d;
}

std::string RationalFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string RationalFunc::latex() const {
    if (den_.is_one()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

RationalFunc rf_normalize(const LaurentPoly& num, const LaurentPoly& den) {
    return RationalFunc(num, den);
}

} // namespace spoq
