#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "hopfgal/errors.hpp"

namespace hopfgal {

/// Exact rational scalar over Q. GMP keeps values canonical (lowest terms,
/// positive denominator) as long as every constructed value is canonicalized,
/// which the helpers below guarantee.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with arbitrary-precision integer parts.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    try {
        mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
        mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
        if (den == 0) throw ParseError("rational literal with zero denominator: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + s);
    }
}

/// Serializes as "p/q", omitting "/q" when the denominator is 1.
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hopfgal
