#pragma once

#include <cmath>

#include "fdps/rational.hpp"

namespace fdps {

// Overflow-safe scalar: sign plus natural log of the magnitude. Carries
// quantities like n! and Gamma(n + beta) for n in the hundreds, far beyond
// double range.
struct LogScaled {
    int sign = 0;                // -1, 0, +1; 0 means the value is exactly zero
    double log_magnitude = 0.0;  // ln|value|, ignored when sign == 0

    static LogScaled zero() { return LogScaled{}; }
    static LogScaled make(int s, double lm) { return s == 0 ? zero() : LogScaled{s, lm}; }

    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }
};

// Exact-rational input: sign and ln|r| from the bignum bit length plus the
// leading-bits mantissa (accurate to double precision, >= 12 digits).
LogScaled log_scale(const Rational& r);

LogScaled ls_mul(const LogScaled& a, const LogScaled& b);
LogScaled ls_div(const LogScaled& a, const LogScaled& b);
LogScaled ls_neg(const LogScaled& a);
LogScaled ls_add(const LogScaled& a, const LogScaled& b);
LogScaled ls_sub(const LogScaled& a, const LogScaled& b);

}  // namespace fdps
