#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace spoq {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rational& x);

/// "\frac{p}{q}" form, integers rendered plainly.
std::string rat_to_latex(const Rational& x);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q = 0.
Rational rat_from_string(const std::string& s);

/// x^e for any integer e; throws DivisionByZero for 0^{negative}.
Rational rat_pow(const Rational& x, long e);

} // namespace spoq
