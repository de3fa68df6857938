#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gmf {

// Exact scalar arithmetic. mpq_class keeps fractions reduced with a positive
// denominator as long as every value is canonicalized on construction, which
// the helpers below guarantee.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational ratio(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "num/den" rendering, denominator always spelled out.
inline std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "n" or "n/d".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(s);
            return Rational(n);
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return ratio(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace gmf
