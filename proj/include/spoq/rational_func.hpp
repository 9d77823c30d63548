#pragma once

#include <string>

#include "spoq/laurent.hpp"

namespace spoq {

/// Element of the fraction field of the Laurent polynomial ring, kept in a
/// canonical form: after shifting numerator and denominator to ordinary
/// polynomials with nonzero constant term, gcd(num, den) = 1, the denominator
/// has minimal exponent 0 and constant coefficient 1.  The canonical form is
/// unique, so operator== decides mathematical equality.
class RationalFunc {
public:
    RationalFunc() : den_(LaurentPoly::one()) {}
    RationalFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {} // NOLINT: embedding
    explicit RationalFunc(long v) : num_(LaurentPoly::from_int(v)), den_(LaurentPoly::one()) {}
    RationalFunc(const LaurentPoly& num, const LaurentPoly& den);             // normalizes
    static RationalFunc from_int(long v) { return RationalFunc(LaurentPoly::from_int(v)); }
    static RationalFunc one() { return from_int(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;
    RationalFunc operator-() const;
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }

    RationalFunc inverse() const; // throws DivisionByZero on zero

    bool operator==(const RationalFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Substitution q -> q^{-1} followed by renormalization.
    RationalFunc bar() const;

    /// Exact value at q = q0; throws DivisionByZero if the denominator vanishes.
    Rational eval(const Rational& q0) const;

    std::string str() const;
    std::string latex() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

RationalFunc rf_normalize(const LaurentPoly& num, const LaurentPoly& den);

} // namespace spoq
