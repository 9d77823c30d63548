#pragma once

#include <map>
#include <string>

#include "spoq/rational.hpp"

namespace spoq {

/// Laurent polynomial in q with exact rational coefficients.
/// Invariant: the term map never holds a zero coefficient, so structural
/// equality of the maps decides mathematical equality.
class LaurentPoly {
public:
    using TermMap = std::map<long, Rational>;

    LaurentPoly() = default; // zero

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly from_int(long v) { return constant(Rational(v)); }
    static LaurentPoly monomial(long exp, const Rational& c);
    static LaurentPoly q() { return monomial(1, Rational(1)); }
    static LaurentPoly q_pow(long exp) { return monomial(exp, Rational(1)); }
    static LaurentPoly one() { return from_int(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff(long exp) const;
    long min_exp() const; // pre: nonzero
    long max_exp() const; // pre: nonzero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(long exp) const; // multiply by q^exp

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Substitution q -> q^{-1}: negates every exponent.
    LaurentPoly bar() const;

    /// Exact value at q = q0; throws ZeroBase for q0 = 0.
    Rational eval(const Rational& q0) const;

    /// Terms in descending exponent order, e.g. "q^2 - 2 + 3/2*q^-1".
    std::string str() const;
    std::string latex() const;

    void add_term(long exp, const Rational& c); // accumulating, drops zeros

private:
    TermMap terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
Rational lp_eval(const LaurentPoly& p, const Rational& q0);
LaurentPoly lp_bar(const LaurentPoly& p);

/// q-number [s] = (q^s - q^-s)/(q - q^-1); [0] = 0, [-s] = -[s].
LaurentPoly q_number(long s);

} // namespace spoq
