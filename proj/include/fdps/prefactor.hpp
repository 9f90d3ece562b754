#pragma once

#include "fdps/rational.hpp"

namespace fdps {

// Transcendental scale factor e^q * (2*pi)^(p/2), kept symbolic so the series
// it multiplies can stay exactly rational. q is rational, p an integer.
struct Prefactor {
    Rational exp_arg;       // q
    int sqrt_two_pi_pow;    // p

    Prefactor() : exp_arg(0), sqrt_two_pi_pow(0) {}
    Prefactor(Rational q, int p) : exp_arg(std::move(q)), sqrt_two_pi_pow(p) {}

    // The canonical prefactor (value 1) carried by zero expansions.
    static Prefactor canonical() { return Prefactor(); }

    bool is_canonical() const { return exp_arg == 0 && sqrt_two_pi_pow == 0; }
};

inline bool operator==(const Prefactor& a, const Prefactor& b) {
    return a.exp_arg == b.exp_arg && a.sqrt_two_pi_pow == b.sqrt_two_pi_pow;
}
inline bool operator!=(const Prefactor& a, const Prefactor& b) { return !(a == b); }

// Componentwise product: e^{q1+q2} (2 pi)^{(p1+p2)/2}.
inline Prefactor mul(const Prefactor& a, const Prefactor& b) {
    return Prefactor(a.exp_arg + b.exp_arg, a.sqrt_two_pi_pow + b.sqrt_two_pi_pow);
}

// Multiply by e^{dq}, leaving the (2 pi) power untouched.
inline Prefactor exp_shift(const Prefactor& a, const Rational& dq) {
    return Prefactor(a.exp_arg + dq, a.sqrt_two_pi_pow);
}

}  // namespace fdps
