#pragma once

#include <utility>
#include <vector>

#include "fdps/prefactor.hpp"
#include "fdps/rational.hpp"
#include "fdps/series.hpp"

namespace fdps {

// A truncated series f whose coefficients diverge like alpha^(n+beta) * Gamma(n+beta),
// bundled with the series of its asymptotic-expansion coefficients.
//
// Writing f_n ~ sum_k c_k alpha^(n+beta-k) Gamma(n+beta-k), the generating
// series sum_k c_k x^k factors as prefactor() * asy(): the prefactor holds the
// transcendental constant e^q (2 pi)^(p/2) and asy() stays exactly rational.
//
// The series and its expansion are truncated independently: series() has order
// order(), asy() has order asy_order(). Elements whose expansion vanishes
// identically (geometric-growth coefficients, polynomials, ...) are flagged
// analytic-class; their asy is zero to every order and their prefactor is
// canonical.
class AlienElement {
  public:
    // General constructor. Requires alpha > 0 and beta > 0. If asy is the zero
    // series the element is analytic-class and the prefactor is normalized to
    // canonical.
    AlienElement(Rational alpha, Rational beta, TruncatedSeries f, Prefactor pref,
                 TruncatedSeries asy);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const TruncatedSeries& series() const { return f_; }
    const Prefactor& prefactor() const { return pref_; }
    const TruncatedSeries& asy() const { return asy_; }

    int order() const { return f_.order(); }
    // For analytic-class elements the zero expansion is valid to every order;
    // asy_order() still reports the stored vector's order.
    int asy_order() const { return asy_.order(); }
    bool analytic() const { return analytic_; }

  private:
    Rational alpha_, beta_;
    TruncatedSeries f_;
    Prefactor pref_;
    TruncatedSeries asy_;
    bool analytic_;
};

// Element with identically vanishing expansion (asy = 0). Covers polynomials
// and any series whose coefficients grow at most exponentially.
AlienElement from_analytic(const TruncatedSeries& f, const Rational& alpha,
                           const Rational& beta);

// f = sum_{n<=N} n! x^n at (alpha, beta) = (1, 1). Its expansion terminates:
// asy = 1 exactly (canonical prefactor), stored to order asy_order.
AlienElement factorial_element(int N, int asy_order = -1);

// f = sum_{n<=N} (2n-1)!! x^n at (alpha, beta) = (2, 1/2). Since
// (2n-1)!! = 2^(n+1/2) Gamma(n+1/2) / sqrt(2 pi), the expansion is exactly
// asy = 1 under prefactor (q = 0, p = -1).
AlienElement double_factorial_element(int N, int asy_order = -1);

// Linear combination rules. Addition requires equal (alpha, beta) and either
// equal prefactors or one vanishing expansion; incompatible nonzero
// prefactors throw (the representation cannot express the sum exactly).
AlienElement add(const AlienElement& a, const AlienElement& b);
AlienElement sub(const AlienElement& a, const AlienElement& b);
AlienElement scale(const Rational& c, const AlienElement& a);

// Product rule: series = f*g, asy = f*(asy of g) + g*(asy of f).
// Prefactor compatibility as in add (the two summands must share one, or one
// of them must vanish).
AlienElement mul(const AlienElement& a, const AlienElement& b);

// Divide the series by x^m (requires its first m coefficients to vanish) and
// raise beta by m; the expansion and prefactor are unchanged.
AlienElement beta_shift_up(const AlienElement& a, int m);

// Multiply the series by x^m and lower beta by m (requires beta > m);
// the expansion and prefactor are unchanged.
AlienElement beta_shift_down(const AlienElement& a, int m);

// Element for f' at (alpha, beta + 2). Its expansion is
// (1/alpha - x*beta + x^2 d/dx) applied to asy, i.e. coefficientwise
// out_n = asy_n / alpha + (n - 1 - beta) asy_{n-1}, same prefactor.
AlienElement derivative(const AlienElement& a);

// Composition f(g) for analytic-class outer f (asy of f = 0) and g_0 = 0:
// asy = f'(g) * (asy of g). Shares (alpha, beta).
AlienElement compose_with_analytic_outer(const AlienElement& f, const AlienElement& g);

// Full chain rule for inner g with g_0 = 0, g_1 = 1:
//   asy(f o g) = f'(g) * asy(g) + (x/g)^beta * e^{(g-x)/(alpha x g)} * asy(f) o g.
// The exponent's constant term g_2/alpha is folded into the prefactor so the
// series factor stays rational. Both summands must land on one prefactor
// (or one must vanish); otherwise the call throws.
AlienElement compose(const AlienElement& f, const AlienElement& g);

// Compositional inverse for g_0 = 0, g_1 = 1:
//   asy(g^{-1}) = -(g^{-1})' * (x/g^{-1})^beta * e^{(g^{-1}-x)/(alpha x g^{-1})} * asy(g) o g^{-1},
// constant part of the exponent folded into the prefactor.
AlienElement invert(const AlienElement& g);

// Given h = f o g with known expansions of h and g, solve the chain rule for
// the expansion of the outer series f (f_series supplies f' exactly):
//   asy(f) = ([asy(h) - f'(g) asy(g)] * (g/x)^beta * e^{-(g-x)/(alpha x g)}) o g^{-1},
// returned as (prefactor, rational series). Consistency of f_series with
// h = f o g is spot-checked on a low-order prefix.
std::pair<Prefactor, TruncatedSeries> solve_outer_asy(const AlienElement& h,
                                                      const AlienElement& g,
                                                      const TruncatedSeries& f_series);

// Transfer of a differential equation to the expansion: given the partial
// derivatives partials[l] of a polynomial F(x, y_0, ..., y_L) evaluated along
// (x, f, f', ..., f^(L)), returns
//   sum_l x^(2L-2l) * partials[l] * D_l(asy),
// where D_l iterates s -> (1/alpha - x(beta + 2(l-1)) + x^2 d/dx) s starting
// from asy. The result must vanish identically when F(x, f, ..., f^(L)) = 0.
TruncatedSeries ode_residual(const AlienElement& a,
                             const std::vector<TruncatedSeries>& partials);

}  // namespace fdps
