#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fdps {

// Exact arbitrary-precision rational; canonical form (positive denominator,
// reduced fraction) is maintained by every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" (decimal digits, optional sign). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Emits "p" for integers, "p/q" otherwise; inverse of rational_from_string.
std::string rational_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace fdps
