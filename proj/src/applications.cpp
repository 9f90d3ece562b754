#include "fdps/applications.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdps/numeric.hpp"

namespace fdps {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// All chord diagrams on n chords: I_n = (2n-1)!! = (2n)!/(2^n n!), I_0 = 1.
TruncatedSeries all_chord_diagrams(int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Rational v = 1;
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        v *= Rational(2 * n - 1);
        c[static_cast<std::size_t>(n)] = v;
    }
    return TruncatedSeries(c);
}

// x/(1-x)^2 = sum_{n>=1} n x^n.
TruncatedSeries catalan_of_intervals(int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = Rational(n);
    return TruncatedSeries(c);
}

// All permutations by size: F_n = n! for n >= 1, F_0 = 0.
TruncatedSeries all_permutations(int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Rational v = 1;
    for (int n = 1; n <= order; ++n) {
        v *= Rational(n);
        c[static_cast<std::size_t>(n)] = v;
    }
    return TruncatedSeries(c);
}

// (x - x^2)/(1 + x) to the given order.
TruncatedSeries skew_interval_series(int order) {
    TruncatedSeries num = sub(TruncatedSeries::identity(order),
                              mul_xpow(TruncatedSeries::identity(order), 1).truncated(order));
    std::vector<Rational> d(static_cast<std::size_t>(order) + 1);
    d[0] = 1;
    if (order >= 1) d[1] = 1;
    return mul(num, reciprocal(TruncatedSeries(d)));
}

void check_routes_agree(const std::string& name, const Prefactor& pref_a,
                        const TruncatedSeries& asy_a, const Prefactor& pref_b,
                        const TruncatedSeries& asy_b) {
    if (pref_a != pref_b || asy_a != asy_b)
        throw std::runtime_error(name +
                                 ": functional-equation and closed-form expansions disagree");
}

}  // namespace

std::pair<Prefactor, TruncatedSeries> connected_chords_closed_form(const TruncatedSeries& c,
                                                                   int asy_terms) {
    require(asy_terms >= 1, "connected_chords_closed_form: need at least one term");
    require(c.order() >= asy_terms + 1, "connected_chords_closed_form: series too short");
    int k = asy_terms - 1;  // order of the expansion series
    // (x/C) e^{-(2C + C^2)/(2x)} / sqrt(2pi); the exponent has constant part
    // -1, which moves into the prefactor e^{-1}.
    TruncatedSeries u = div_xpow(c, 1);  // C/x, unit constant term
    TruncatedSeries w = div_xpow(scale(rat(1, 2), add(scale(rat(2), c), mul(c, c))), 1);
    TruncatedSeries tail = neg(sub(w, TruncatedSeries::constant(w[0], w.order())));
    TruncatedSeries asy = mul(reciprocal(u.truncated(k)), exp_series(tail.truncated(k)));
    return {Prefactor(Rational(-w[0]), -1), asy};
}

std::pair<Prefactor, TruncatedSeries> monolithic_chords_closed_form(const TruncatedSeries& m,
                                                                    int asy_terms) {
    require(asy_terms >= 1, "monolithic_chords_closed_form: need at least one term");
    require(m.order() >= asy_terms + 1, "monolithic_chords_closed_form: series too short");
    int k = asy_terms - 1;
    int n = m.order();
    // (1/(1-x)) (x/M) e^{1 - x/2 - (1-x)^2 (2M + M^2)/(2x)} / sqrt(2pi); the
    // exponent has zero constant part, so no e-power enters the prefactor.
    TruncatedSeries u = div_xpow(m, 1);
    std::vector<Rational> om(static_cast<std::size_t>(n) + 1);
    om[0] = 1;
    if (n >= 1) om[1] = -1;
    TruncatedSeries one_minus_x(om);
    TruncatedSeries w = div_xpow(scale(rat(1, 2), add(scale(rat(2), m), mul(m, m))), 1);
    TruncatedSeries expo = sub(TruncatedSeries::one(n - 1),
                               add(scale(rat(1, 2), TruncatedSeries::identity(n - 1)),
                                   mul(mul(one_minus_x, one_minus_x).truncated(n - 1), w)));
    if (sgn(expo[0]) != 0)
        throw std::runtime_error("monolithic_chords_closed_form: exponent not normalized");
    TruncatedSeries asy = mul(mul(reciprocal(one_minus_x.truncated(k)), reciprocal(u.truncated(k))),
                              exp_series(expo.truncated(k)));
    return {Prefactor(Rational(0), -1), asy};
}

std::pair<Prefactor, TruncatedSeries> simple_permutations_closed_form(const TruncatedSeries& s,
                                                                      int asy_terms) {
    require(asy_terms >= 1, "simple_permutations_closed_form: need at least one term");
    require(s.order() >= asy_terms + 2, "simple_permutations_closed_form: series too short");
    int k = asy_terms - 1;
    int n = s.order() - 2;
    // (1/(1+x)) * (1 - x - (1+x) S/x) / (1 + (1+x) S/x^2)
    //          * e^{-(2 + (1+x) S/x^2) / (1 - x - (1+x) S/x)};
    // the exponent has constant part -2, moved into the prefactor e^{-2}.
    std::vector<Rational> op(static_cast<std::size_t>(n) + 1);
    op[0] = 1;
    if (n >= 1) op[1] = 1;
    TruncatedSeries one_plus_x(op);
    TruncatedSeries u1 = div_xpow(s, 1).truncated(n);
    TruncatedSeries u2 = div_xpow(s, 2).truncated(n);
    TruncatedSeries n1 = sub(sub(TruncatedSeries::one(n), TruncatedSeries::identity(n)),
                             mul(one_plus_x, u1));
    TruncatedSeries d1 = add(TruncatedSeries::one(n), mul(one_plus_x, u2));
    TruncatedSeries expo = neg(mul(add(TruncatedSeries::constant(rat(2), n), mul(one_plus_x, u2)),
                                   reciprocal(n1)));
    TruncatedSeries tail = sub(expo, TruncatedSeries::constant(expo[0], n));
    TruncatedSeries asy = mul(mul(reciprocal(one_plus_x.truncated(k)), n1.truncated(k)),
                              mul(reciprocal(d1.truncated(k)), exp_series(tail.truncated(k))));
    return {Prefactor(Rational(expo[0]), 0), asy};
}

SequenceTable connected_chords(int order, int asy_terms) {
    require(order >= 1, "connected_chords: order must be >= 1");
    require(asy_terms >= 1, "connected_chords: need at least one expansion term");
    int work = std::max(order, asy_terms + 4);

    TruncatedSeries interval = all_chord_diagrams(work);
    TruncatedSeries g = mul_xpow(mul(interval, interval), 1).truncated(work);
    TruncatedSeries c = compose(sub(interval, TruncatedSeries::one(work)), comp_inverse(g));

    // Expansion route 1: solve the composition (I - 1) = C o (x I^2) for the
    // outer expansion, on elements truncated to a small working order.
    int small = asy_terms + 4;
    Rational alpha = rat(2), beta = rat(1, 2);
    TruncatedSeries interval_s = interval.truncated(small);
    AlienElement iv(alpha, beta, interval_s, Prefactor(Rational(0), -1),
                    TruncatedSeries::one(small));
    AlienElement h = sub(iv, from_analytic(TruncatedSeries::one(small), alpha, beta));
    AlienElement ge = mul(from_analytic(TruncatedSeries::identity(small), alpha, beta),
                          mul(iv, iv));
    auto solved = solve_outer_asy(h, ge, c.truncated(small));
    TruncatedSeries asy_solved = solved.second.truncated(asy_terms - 1);

    // Expansion route 2: closed form evaluated on C itself.
    auto closed = connected_chords_closed_form(c.truncated(asy_terms + 1), asy_terms);
    check_routes_agree("connected_chords", solved.first, asy_solved, closed.first,
                       closed.second);

    return SequenceTable{"connected-chords", alpha,         beta,
                         c.truncated(order), solved.first, asy_solved,
                         "chain-rule"};
}

SequenceTable connected_chords(int order) { return connected_chords(order, 9); }

SequenceTable monolithic_chords(int order, int asy_terms) {
    require(order >= 1, "monolithic_chords: order must be >= 1");
    require(asy_terms >= 1, "monolithic_chords: need at least one expansion term");
    int work = std::max(order, asy_terms + 4);

    SequenceTable chords = connected_chords(work, asy_terms + 2);
    TruncatedSeries inner = catalan_of_intervals(work);
    TruncatedSeries m = compose(chords.series, inner);

    // Expansion route 1: chain rule through the analytic inner map.
    int small = asy_terms + 4;
    AlienElement ce(chords.alpha, chords.beta, chords.series.truncated(small),
                    chords.asy_prefactor, chords.asy);
    AlienElement me = compose(ce, from_analytic(inner.truncated(small), chords.alpha,
                                                chords.beta));
    TruncatedSeries asy_chain = me.asy().truncated(asy_terms - 1);

    // Expansion route 2: closed form evaluated on M itself.
    auto closed = monolithic_chords_closed_form(m.truncated(asy_terms + 1), asy_terms);
    check_routes_agree("monolithic_chords", me.prefactor(), asy_chain, closed.first,
                       closed.second);

    return SequenceTable{"monolithic-chords", chords.alpha,  chords.beta,
                         m.truncated(order),  me.prefactor(), asy_chain,
                         "chain-rule"};
}

SequenceTable monolithic_chords(int order) { return monolithic_chords(order, 9); }

SequenceTable simple_permutations(int order, int asy_terms) {
    require(order >= 4, "simple_permutations: order must be >= 4");
    require(asy_terms >= 1, "simple_permutations: need at least one expansion term");
    int work = std::max(order, asy_terms + 4);

    TruncatedSeries f = all_permutations(work);
    TruncatedSeries finv = comp_inverse(f);
    TruncatedSeries s = sub(skew_interval_series(work), finv);

    // Expansion route 1: minus the inversion expansion of the all-permutation
    // series (whose own expansion is exactly 1).
    int small = asy_terms + 4;
    Rational alpha = rat(1), beta = rat(1);
    AlienElement fe(alpha, beta, f.truncated(small), Prefactor(),
                    TruncatedSeries::one(small));
    AlienElement se = sub(from_analytic(skew_interval_series(small), alpha, beta),
                          invert(fe));
    TruncatedSeries asy_inv = se.asy().truncated(asy_terms - 1);

    // Expansion route 2: closed form expressed in S itself.
    auto closed = simple_permutations_closed_form(s.truncated(asy_terms + 2), asy_terms);
    check_routes_agree("simple_permutations", se.prefactor(), asy_inv, closed.first,
                       closed.second);

    return SequenceTable{"simple-permutations", alpha,         beta,
                         s.truncated(order),    se.prefactor(), asy_inv,
                         "chain-rule"};
}

SequenceTable simple_permutations(int order) { return simple_permutations(order, 10); }

double connectivity_probability(long n, int R) {
    require(n >= 1, "connectivity_probability: n must be >= 1");
    require(R >= 1, "connectivity_probability: need at least one expansion term");
    SequenceTable chords = connected_chords(1, R);
    double log_pref = std::log(prefactor_value(chords.asy_prefactor));

    LogScaled sum = LogScaled::zero();
    for (int k = 0; k < R; ++k) {
        const Rational& ck = chords.asy[k];
        if (sgn(ck) == 0) continue;
        LogScaled coeff = log_scale(ck);
        LogScaled term{coeff.sign,
                       coeff.log_magnitude + log_pref +
                           gamma_scale(n, chords.alpha, chords.beta - Rational(k))
                               .log_magnitude};
        sum = ls_add(sum, term);
    }
    // Divide by (2n-1)!! = 2^(n+1/2) Gamma(n+1/2) / sqrt(2pi).
    double log_all = gamma_scale(n, rat(2), rat(1, 2)).log_magnitude -
                     std::log(const_sqrt_two_pi());
    if (sum.sign == 0) return 0.0;
    return sum.sign * std::exp(sum.log_magnitude - log_all);
}

}  // namespace fdps
