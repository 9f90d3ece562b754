#include "fdps/alien.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fdps {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_same_scale(const AlienElement& a, const AlienElement& b) {
    require(a.alpha() == b.alpha() && a.beta() == b.beta(),
            "elements live on different (alpha, beta) scales");
}

TruncatedSeries padded_zero(int order) { return TruncatedSeries::zero(std::max(order, 0)); }

// The exponent E = (h - x)/(alpha x h) of the composition correction, split
// into its constant term E_0 = h_2/alpha and the tail E - E_0 (which has zero
// constant term and is a valid exp_series argument). Requires h_0=0, h_1=1
// and order(h) >= ord + 2.
struct Correction {
    Rational const_exp;       // E_0
    TruncatedSeries factor;   // sign=+1: (x/h)^beta * e^{E-E_0};  sign=-1: (h/x)^beta * e^{-(E-E_0)}
};

Correction correction_factor(const TruncatedSeries& h, const Rational& alpha,
                             const Rational& beta, int ord, int sign) {
    require(h.order() >= ord + 2, "series order too low for the requested expansion order");
    const TruncatedSeries u = div_xpow(h.truncated(ord + 2), 1);  // h/x, constant term 1
    // E = ((u - 1)/x) / (alpha * u)
    const TruncatedSeries num = div_xpow(sub(u, TruncatedSeries::one(u.order())), 1);
    const TruncatedSeries efull = mul(num, reciprocal(scale(alpha, u))).truncated(ord);
    const Rational e0 = efull[0];
    std::vector<Rational> tail(efull.coeffs());
    tail[0] = 0;
    TruncatedSeries etail(std::move(tail));
    const TruncatedSeries ut = u.truncated(ord);
    if (sign > 0) {
        return Correction{e0, mul(pow_rational(reciprocal(ut), beta), exp_series(etail))};
    }
    return Correction{-e0, mul(pow_rational(ut, beta), exp_series(neg(etail)))};
}

}  // namespace

AlienElement::AlienElement(Rational alpha, Rational beta, TruncatedSeries f, Prefactor pref,
                           TruncatedSeries asy)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      f_(std::move(f)),
      pref_(std::move(pref)),
      asy_(std::move(asy)) {
    require(alpha_ > 0, "alpha must be positive");
    require(beta_ > 0, "beta must be positive");
    analytic_ = asy_.is_zero();
    if (analytic_) pref_ = Prefactor::canonical();
}

AlienElement from_analytic(const TruncatedSeries& f, const Rational& alpha,
                           const Rational& beta) {
    return AlienElement(alpha, beta, f, Prefactor::canonical(), padded_zero(f.order()));
}

AlienElement factorial_element(int N, int asy_order) {
    require(N >= 0, "order must be nonnegative");
    if (asy_order < 0) asy_order = N;
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    Rational f(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) f *= n;
        c[static_cast<size_t>(n)] = f;
    }
    return AlienElement(Rational(1), Rational(1), TruncatedSeries(std::move(c)),
                        Prefactor::canonical(), TruncatedSeries::one(asy_order));
}

AlienElement double_factorial_element(int N, int asy_order) {
    require(N >= 0, "order must be nonnegative");
    if (asy_order < 0) asy_order = N;
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    Rational f(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) f *= 2 * n - 1;
        c[static_cast<size_t>(n)] = f;
    }
    return AlienElement(Rational(2), rat(1, 2), TruncatedSeries(std::move(c)),
                        Prefactor(Rational(0), -1), TruncatedSeries::one(asy_order));
}

AlienElement add(const AlienElement& a, const AlienElement& b) {
    require_same_scale(a, b);
    TruncatedSeries series = add(a.series(), b.series());
    if (a.analytic() && b.analytic())
        return AlienElement(a.alpha(), a.beta(), std::move(series), Prefactor::canonical(),
                            padded_zero(series.order()));
    if (a.analytic())
        return AlienElement(a.alpha(), a.beta(), std::move(series), b.prefactor(), b.asy());
    if (b.analytic())
        return AlienElement(a.alpha(), a.beta(), std::move(series), a.prefactor(), a.asy());
    require(a.prefactor() == b.prefactor(),
            "cannot add expansions with different prefactors exactly");
    return AlienElement(a.alpha(), a.beta(), std::move(series), a.prefactor(),
                        add(a.asy(), b.asy()));
}

AlienElement scale(const Rational& c, const AlienElement& a) {
    return AlienElement(a.alpha(), a.beta(), scale(c, a.series()), a.prefactor(),
                        scale(c, a.asy()));
}

AlienElement sub(const AlienElement& a, const AlienElement& b) {
    return add(a, scale(Rational(-1), b));
}

AlienElement mul(const AlienElement& a, const AlienElement& b) {
    require_same_scale(a, b);
    TruncatedSeries series = mul(a.series(), b.series());
    if (a.analytic() && b.analytic())
        return AlienElement(a.alpha(), a.beta(), std::move(series), Prefactor::canonical(),
                            padded_zero(series.order()));
    if (a.analytic())
        return AlienElement(a.alpha(), a.beta(), std::move(series), b.prefactor(),
                            mul(a.series(), b.asy()));
    if (b.analytic())
        return AlienElement(a.alpha(), a.beta(), std::move(series), a.prefactor(),
                            mul(b.series(), a.asy()));
    require(a.prefactor() == b.prefactor(),
            "cannot combine expansions with different prefactors exactly");
    return AlienElement(a.alpha(), a.beta(), std::move(series), a.prefactor(),
                        add(mul(a.series(), b.asy()), mul(b.series(), a.asy())));
}

AlienElement beta_shift_up(const AlienElement& a, int m) {
    require(m >= 0, "shift must be nonnegative");
    return AlienElement(a.alpha(), a.beta() + m, div_xpow(a.series(), m), a.prefactor(),
                        a.asy());
}

AlienElement beta_shift_down(const AlienElement& a, int m) {
    require(m >= 0, "shift must be nonnegative");
    require(a.beta() > m, "beta must stay positive after the shift");
    return AlienElement(a.alpha(), a.beta() - m, mul_xpow(a.series(), m), a.prefactor(),
                        a.asy());
}

namespace {

// (1/alpha - x*beta_eff + x^2 d/dx) applied coefficientwise:
// out_n = s_n/alpha + (n - 1 - beta_eff) s_{n-1}.
TruncatedSeries apply_derivative_transfer(const TruncatedSeries& s, const Rational& alpha,
                                          const Rational& beta_eff) {
    const int n = s.order();
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational v = s[i] / alpha;
        if (i >= 1) v += (Rational(i - 1) - beta_eff) * s[i - 1];
        out[static_cast<size_t>(i)] = v;
    }
    return TruncatedSeries(std::move(out));
}

}  // namespace

AlienElement derivative(const AlienElement& a) {
    require(a.order() >= 1, "derivative needs order >= 1");
    TruncatedSeries fp = derivative(a.series());
    if (a.analytic()) return from_analytic(fp, a.alpha(), a.beta() + 2);
    return AlienElement(a.alpha(), a.beta() + 2, std::move(fp), a.prefactor(),
                        apply_derivative_transfer(a.asy(), a.alpha(), a.beta()));
}

AlienElement compose_with_analytic_outer(const AlienElement& f, const AlienElement& g) {
    require_same_scale(f, g);
    require(f.analytic(), "outer element must have a vanishing expansion");
    require(g.series()[0] == 0, "inner series needs zero constant term");
    TruncatedSeries series = compose(f.series(), g.series());
    if (g.analytic())
        return AlienElement(f.alpha(), f.beta(), std::move(series), Prefactor::canonical(),
                            padded_zero(series.order()));
    const int K = std::min({f.order() - 1, g.order(), g.asy_order()});
    require(K >= 0, "insufficient order for the expansion of the composition");
    TruncatedSeries asy = mul(compose(derivative(f.series()).truncated(K),
                                      g.series().truncated(K)),
                              g.asy().truncated(K));
    return AlienElement(f.alpha(), f.beta(), std::move(series), g.prefactor(), std::move(asy));
}

AlienElement compose(const AlienElement& f, const AlienElement& g) {
    require_same_scale(f, g);
    const TruncatedSeries& gs = g.series();
    require(gs.order() >= 1 && gs[0] == 0 && gs[1] == 1,
            "inner series must be tangent to the identity (g_0 = 0, g_1 = 1)");
    if (f.analytic()) return compose_with_analytic_outer(f, g);

    TruncatedSeries series = compose(f.series(), gs);

    const bool t1 = !g.analytic();  // f'(g) * asy(g)
    int K = std::min(f.asy_order(), g.order() - 2);
    if (t1) K = std::min({K, f.order() - 1, g.order(), g.asy_order()});
    require(K >= 0, "insufficient order for the expansion of the composition");

    const Correction corr = correction_factor(gs, f.alpha(), f.beta(), K, +1);
    TruncatedSeries term2 =
        mul(corr.factor, compose(f.asy().truncated(K), gs.truncated(K)));
    const Prefactor p2 = exp_shift(f.prefactor(), corr.const_exp);

    if (!t1)
        return AlienElement(f.alpha(), f.beta(), std::move(series), p2, std::move(term2));

    require(p2 == g.prefactor(),
            "the two chain-rule summands carry different prefactors; "
            "the sum has no exact representation");
    TruncatedSeries term1 = mul(compose(derivative(f.series()).truncated(K),
                                        gs.truncated(K)),
                                g.asy().truncated(K));
    return AlienElement(f.alpha(), f.beta(), std::move(series), g.prefactor(),
                        add(term1, term2));
}

AlienElement invert(const AlienElement& g) {
    const TruncatedSeries& gs = g.series();
    require(gs.order() >= 1 && gs[0] == 0 && gs[1] == 1,
            "inversion needs a series tangent to the identity (g_0 = 0, g_1 = 1)");
    TruncatedSeries h = comp_inverse(gs);
    if (g.analytic()) return from_analytic(h, g.alpha(), g.beta());

    const int K = std::min(g.asy_order(), g.order() - 2);
    require(K >= 0, "insufficient order for the expansion of the inverse");
    const Correction corr = correction_factor(h, g.alpha(), g.beta(), K, +1);
    TruncatedSeries asy = neg(mul(mul(derivative(h).truncated(K), corr.factor),
                                  compose(g.asy().truncated(K), h.truncated(K))));
    return AlienElement(g.alpha(), g.beta(), std::move(h),
                        exp_shift(g.prefactor(), corr.const_exp), std::move(asy));
}

std::pair<Prefactor, TruncatedSeries> solve_outer_asy(const AlienElement& h,
                                                      const AlienElement& g,
                                                      const TruncatedSeries& f_series) {
    require_same_scale(h, g);
    const TruncatedSeries& gs = g.series();
    require(gs.order() >= 1 && gs[0] == 0 && gs[1] == 1,
            "inner series must be tangent to the identity (g_0 = 0, g_1 = 1)");

    // Spot-check h = f o g on a low-order prefix.
    {
        const int c = std::min({f_series.order(), gs.order(), h.order(), 12});
        require(c >= 1, "orders too low to validate h = f o g");
        require(compose(f_series.truncated(c), gs.truncated(c)) == h.series().truncated(c),
                "f_series is inconsistent with h = f o g");
    }

    const bool th = !h.analytic();
    const bool tg = !g.analytic();
    if (!th && !tg) {
        const int K = std::min(f_series.order() - 1, gs.order() - 2);
        return {Prefactor::canonical(), padded_zero(K)};
    }

    int K = gs.order() - 2;
    if (th) K = std::min(K, h.asy_order());
    if (tg) K = std::min({K, g.asy_order(), f_series.order() - 1});
    require(K >= 0, "insufficient order to solve for the outer expansion");

    Prefactor base;
    if (th && tg) {
        require(h.prefactor() == g.prefactor(),
                "expansions of h and g carry different prefactors; "
                "the outer expansion has no exact representation");
        base = h.prefactor();
    } else {
        base = th ? h.prefactor() : g.prefactor();
    }

    TruncatedSeries bracket = th ? h.asy().truncated(K) : TruncatedSeries::zero(K);
    if (tg) {
        TruncatedSeries fpg = compose(derivative(f_series).truncated(K),
                                      gs.truncated(K));
        bracket = sub(bracket, mul(fpg, g.asy().truncated(K)));
    }

    const Correction corr = correction_factor(gs, g.alpha(), g.beta(), K, -1);
    TruncatedSeries inner = mul(bracket, corr.factor);
    TruncatedSeries ginv = comp_inverse(gs.truncated(K));
    TruncatedSeries asy_f = compose(inner, ginv);
    if (asy_f.is_zero()) return {Prefactor::canonical(), std::move(asy_f)};
    return {exp_shift(base, corr.const_exp), std::move(asy_f)};
}

TruncatedSeries ode_residual(const AlienElement& a,
                             const std::vector<TruncatedSeries>& partials) {
    require(!partials.empty(), "need at least the zeroth partial derivative");
    const int L = static_cast<int>(partials.size()) - 1;

    TruncatedSeries s = a.asy();
    std::vector<TruncatedSeries> terms;
    terms.reserve(partials.size());
    int common = std::numeric_limits<int>::max();
    for (int l = 0; l <= L; ++l) {
        if (l > 0) s = apply_derivative_transfer(s, a.alpha(), a.beta() + 2 * (l - 1));
        TruncatedSeries t = mul_xpow(mul(partials[static_cast<size_t>(l)], s), 2 * (L - l));
        common = std::min(common, t.order());
        terms.push_back(std::move(t));
    }
    TruncatedSeries res = TruncatedSeries::zero(common);
    for (auto& t : terms) res = add(res, t.truncated(common));
    return res;
}

}  // namespace fdps
