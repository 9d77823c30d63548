#include "spoq/rational.hpp"

#include <cctype>

#include "spoq/errors.hpp"

namespace spoq {

std::string rat_to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string rat_to_latex(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    std::string num = numerator(x).str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num.erase(0, 1);
    std::string body = "\\frac{" + num + "}{" + denominator(x).str() + "}";
    return neg ? "-" + body : body;
}

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed rational literal");
        std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) throw std::invalid_argument("malformed rational literal");
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k])))
                throw std::invalid_argument("malformed rational literal: " + t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(BigInt(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(BigInt(num), d);
}

Rational rat_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    BigInt n = numerator(x), d = denominator(x);
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt np = pow(n, a), dp = pow(d, a);
    return e > 0 ? Rational(np, dp) : Rational(dp, np);
}

} // namespace spoq
