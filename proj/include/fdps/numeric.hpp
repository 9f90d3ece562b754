#pragma once

#include <string>
#include <vector>

#include "fdps/alien.hpp"
#include "fdps/logscaled.hpp"
#include "fdps/prefactor.hpp"
#include "fdps/rational.hpp"

namespace fdps {

// Reference constants, computed once at startup from rational series
// (e = sum 1/j!), a Machin arctangent formula (pi), and Newton's method
// (sqrt(2*pi)); each is accurate to full double precision.
double const_e();
double const_pi();
double const_sqrt_two_pi();

// Numeric value of a prefactor: exp(exp_arg) * (2*pi)^(sqrt_two_pi_pow / 2).
double prefactor_value(const Prefactor& p);

// log(alpha^(n+beta) * Gamma(n+beta)) as a LogScaled (always positive sign).
// Exact bignum evaluation when beta has denominator 1 (Gamma(m) = (m-1)!) or
// denominator 2 (Gamma(m+1/2) = (2m)! sqrt(pi) / (4^m m!)); lgamma otherwise.
// Requires alpha > 0 and n + beta > 0.
LogScaled gamma_scale(long n, const Rational& alpha, const Rational& beta);

// Result of fitting leading asymptotic coefficients to a sequence.
struct FitReport {
    std::vector<double> estimates;   // fitted c_0 .. c_{R-1}
    std::vector<double> errors;      // observed extrapolation spread per coefficient
    std::vector<bool> converged;     // spread small relative to the estimate scale
    long n_lo = 0;                   // smallest index used by the extrapolation
    long n_hi = 0;                   // largest index used (the end of the sequence)
    int extrap_order = 0;

    bool all_converged() const;
};

// Estimates c_0 .. c_{R-1} in f_n ~ sum_k c_k alpha^(n+beta-k) Gamma(n+beta-k)
// by sequential peeling: divide out the k-th scale, Richardson-extrapolate the
// resulting ratio sequence in 1/n to its limit, subtract the fitted term, and
// continue. `errors` holds the extrapolation-table spread actually observed,
// never a fabricated bound. Requires seq.size() >= 4 * (R + extrap_order).
FitReport fit_asymptotics(const std::vector<Rational>& seq, const Rational& alpha,
                          const Rational& beta, int R, int extrap_order = 4);

// Arithmetic used for the remainder windows: Auto picks Exact when the scales
// collapse to rationals (integer beta with no root-2pi power, or half-integer
// beta at alpha = 2 with one inverse root-2pi power), LogScaled otherwise.
enum class RemainderMode { Auto, LogScaled, Exact };

struct RemainderCheck {
    bool pass = false;
    double window1_max = 0.0;  // max scaled remainder over [N/4, N/2)
    double window2_max = 0.0;  // max scaled remainder over [N/2, N]
    double growth = 0.0;       // window2_max / window1_max
    long n_lo = 0;             // start of window 1
    long n_mid = 0;            // start of window 2
    long n_hi = 0;             // end of window 2 (end of the sequence)
    std::string arithmetic;    // "exact" or "log-scaled"
};

// Windowed test that f_n minus the first R asymptotic terms of `element` is
// O(alpha^n Gamma(n + beta - R)): scales the residual by that target, takes
// window maxima over [N/4, N/2) and [N/2, N], and passes iff the maxima are
// finite and do not grow by more than a factor 2 (an order-(R) improvement
// would shrink them; a wrong coefficient makes them grow like a power of n).
// In Exact arithmetic the decision is certified: the only approximate factor,
// exp(exp_arg), is replaced by a rational enclosure tight enough that the
// window comparison is unambiguous. Requires seq to agree with element.series()
// on shared indices, element.asy_order() >= R, and seq.size() > 4 * (R + 2).
RemainderCheck remainder_order_check(const std::vector<Rational>& seq,
                                     const AlienElement& element, int R,
                                     RemainderMode mode = RemainderMode::Auto);

}  // namespace fdps
