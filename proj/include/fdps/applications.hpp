#pragma once

#include <string>
#include <utility>

#include "fdps/alien.hpp"
#include "fdps/prefactor.hpp"
#include "fdps/rational.hpp"
#include "fdps/series.hpp"

namespace fdps {

// One enumeration sequence together with its full asymptotic expansion:
// f_n ~ prefactor * sum_k asy_k alpha^(n+beta-k) Gamma(n+beta-k).
struct SequenceTable {
    std::string name;
    Rational alpha;
    Rational beta;
    TruncatedSeries series;     // exact counting series to the requested order
    Prefactor asy_prefactor;    // constant factored out of the expansion
    TruncatedSeries asy;        // asy_terms exact rational coefficients
    std::string provenance;     // route that produced asy: "chain-rule" | "closed-form"
};

// Connected chord diagrams: C = (I - 1) o (x I^2)^(-1) with I the series of
// all chord diagrams, I_n = (2n-1)!!. The expansion (alpha = 2, beta = 1/2,
// prefactor e^(-1)/sqrt(2pi)) is derived by solving the composition for the
// outer expansion and, independently, by evaluating the closed form
// (x/C) exp(-(2C + C^2)/(2x)) / sqrt(2pi); the routes must agree exactly.
SequenceTable connected_chords(int order, int asy_terms);
SequenceTable connected_chords(int order);  // asy_terms = 9

// Monolithic chord diagrams: M = C o (x/(1-x)^2). Expansion (alpha = 2,
// beta = 1/2, prefactor 1/sqrt(2pi)) via the chain rule with the analytic
// inner map, cross-checked against the closed form
// (1/(1-x)) (x/M) exp(1 - x/2 - (1-x)^2 (2M + M^2)/(2x)) / sqrt(2pi).
SequenceTable monolithic_chords(int order, int asy_terms);
SequenceTable monolithic_chords(int order);  // asy_terms = 9

// Simple permutations: S = (x - x^2)/(1 + x) - F^(-1) with F_n = n!.
// Expansion (alpha = 1, beta = 1, prefactor e^(-2)) as minus the inversion
// expansion of F, cross-checked against the closed form expressed in S.
// Requires order >= 4 (the first simple permutations have size 4).
SequenceTable simple_permutations(int order, int asy_terms);
SequenceTable simple_permutations(int order);  // asy_terms = 10

// Closed-form evaluations, exposed so tests can drive each route separately.
// Each takes the exact counting series (to order >= asy_terms + 1, the
// simple-permutation form >= asy_terms + 2) and returns the prefactor and
// asy_terms expansion coefficients.
std::pair<Prefactor, TruncatedSeries> connected_chords_closed_form(const TruncatedSeries& c,
                                                                   int asy_terms);
std::pair<Prefactor, TruncatedSeries> monolithic_chords_closed_form(const TruncatedSeries& m,
                                                                    int asy_terms);
std::pair<Prefactor, TruncatedSeries> simple_permutations_closed_form(const TruncatedSeries& s,
                                                                      int asy_terms);

// Probability that a random chord diagram with n chords is connected,
// approximated by the first R terms of the expansion of C_n divided by
// (2n-1)!!, evaluated in log-scaled floating point. Tends to e^(-1) with
// first correction factor (1 - 5/(4n)).
double connectivity_probability(long n, int R);

}  // namespace fdps
