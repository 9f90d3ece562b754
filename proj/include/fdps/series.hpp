#pragma once

#include <initializer_list>
#include <vector>

#include "fdps/rational.hpp"

namespace fdps {

// A power series truncated at a fixed order: coefficients c[0..order]
// represent sum_n c_n x^n + O(x^{order+1}). Values are immutable after
// construction; every operation is a pure function.
//
// Truncation rule: binary operations return the minimum of the operand
// orders, so no emitted coefficient ever depends on unknown tail terms.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    TruncatedSeries(std::initializer_list<long> ints);

    static TruncatedSeries zero(int order);
    static TruncatedSeries one(int order);
    static TruncatedSeries identity(int order);  // the series x
    static TruncatedSeries constant(const Rational& c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when every coefficient has denominator 1 (enables fast integer
    // convolution paths).
    bool all_integer() const { return integral_; }

    // Drops coefficients beyond new_order (new_order <= order).
    TruncatedSeries truncated(int new_order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rational> c_;
    bool integral_;
};

// --- ring operations (order = min of operand orders) ---
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries neg(const TruncatedSeries& a);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return neg(a); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return scale(c, a); }

// d/dx; requires order >= 1, result order = order - 1.
TruncatedSeries derivative(const TruncatedSeries& f);

// Multiplicative inverse; requires nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& f);

// f(g(x)); requires g_0 = 0. Result order = min(order(f), order(g)).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

// Compositional inverse h with g(h(x)) = h(g(x)) = x; requires g_0 = 0 and
// g_1 = 1 (formal diffeomorphisms tangent to the identity). Newton iteration
// with order doubling.
TruncatedSeries comp_inverse(const TruncatedSeries& g);

// (1 + u)^r for f = 1 + u (requires f_0 = 1); exact rational binomial series.
TruncatedSeries pow_rational(const TruncatedSeries& f, const Rational& r);

// exp(f) for f_0 = 0 (a nonzero constant part would leave the rational ring).
TruncatedSeries exp_series(const TruncatedSeries& f);

// The n-th coefficient of f(g^{-1}(x)) computed without forming g^{-1}:
// [x^n] f(g^{-1}) = (1/n) [x^{n-1}] f'(x) (x/g(x))^n.
// Requires g_0 = 0, g_1 = 1, 1 <= n <= min(order(f), order(g)).
Rational lagrange_coefficient(const TruncatedSeries& f, const TruncatedSeries& g, int n);

// --- shift helpers ---
// x^m * f; all coefficients of the result up to order+m are determined, so
// the result order is order + m.
TruncatedSeries mul_xpow(const TruncatedSeries& f, int m);
// f / x^m; requires the first m coefficients to vanish; order drops by m.
TruncatedSeries div_xpow(const TruncatedSeries& f, int m);

}  // namespace fdps
