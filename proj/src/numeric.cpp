#include "fdps/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdps/series.hpp"

namespace fdps {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// LogScaled arithmetic
// ---------------------------------------------------------------------------

LogScaled log_scale(const Rational& r) {
    int s = sgn(r);
    if (s == 0) return LogScaled::zero();
    // ln|z| = ln(mantissa) + exp * ln 2 with mantissa in [0.5, 1), so both
    // pieces are computed at full double accuracy regardless of bignum size.
    auto log_abs_z = [](const mpz_class& z) {
        long e2 = 0;
        double mant = mpz_get_d_2exp(&e2, z.get_mpz_t());
        return std::log(std::fabs(mant)) + static_cast<double>(e2) * M_LN2;
    };
    double lm = log_abs_z(r.get_num()) - log_abs_z(r.get_den());
    return LogScaled{s, lm};
}

LogScaled ls_mul(const LogScaled& a, const LogScaled& b) {
    if (a.sign == 0 || b.sign == 0) return LogScaled::zero();
    return LogScaled{a.sign * b.sign, a.log_magnitude + b.log_magnitude};
}

LogScaled ls_div(const LogScaled& a, const LogScaled& b) {
    if (b.sign == 0) throw std::domain_error("ls_div: division by zero");
    if (a.sign == 0) return LogScaled::zero();
    return LogScaled{a.sign * b.sign, a.log_magnitude - b.log_magnitude};
}

LogScaled ls_neg(const LogScaled& a) { return LogScaled{-a.sign, a.log_magnitude}; }

LogScaled ls_add(const LogScaled& a, const LogScaled& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogScaled& big = (a.log_magnitude >= b.log_magnitude) ? a : b;
    const LogScaled& small = (a.log_magnitude >= b.log_magnitude) ? b : a;
    double t = std::exp(small.log_magnitude - big.log_magnitude);  // in (0, 1]
    if (a.sign == b.sign) return LogScaled{a.sign, big.log_magnitude + std::log1p(t)};
    // Opposite signs: |result| = |big| * (1 - t). Cancellation when t -> 1 is
    // inherent to log-space subtraction; callers treat tiny results as noise.
    if (t >= 1.0) return LogScaled::zero();
    return LogScaled{big.sign, big.log_magnitude + std::log1p(-t)};
}

LogScaled ls_sub(const LogScaled& a, const LogScaled& b) { return ls_add(a, ls_neg(b)); }

// ---------------------------------------------------------------------------
// Reference constants
// ---------------------------------------------------------------------------

namespace {

// arctan(1/m) = sum_{k>=0} (-1)^k / ((2k+1) m^(2k+1)) as an exact rational
// partial sum; `terms` chosen so the (alternating) tail is below 1e-20.
Rational arctan_inv(unsigned long m, int terms) {
    Rational sum = 0;
    Rational mpow = rat(1, static_cast<long>(m));  // m^-(2k+1)
    Rational m2inv = mpow * mpow;
    for (int k = 0; k < terms; ++k) {
        Rational term = mpow / Rational(2 * k + 1);
        sum += (k % 2 == 0) ? term : -term;
        mpow *= m2inv;
    }
    return sum;
}

}  // namespace

double const_e() {
    static const double value = [] {
        Rational sum = 0;
        Rational term = 1;  // 1/j!
        for (int j = 0; j <= 25; ++j) {
            sum += term;
            term /= Rational(j + 1);
        }
        return sum.get_d();
    }();
    return value;
}

double const_pi() {
    static const double value = [] {
        // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
        Rational p = Rational(16) * arctan_inv(5, 16) - Rational(4) * arctan_inv(239, 5);
        return p.get_d();
    }();
    return value;
}

double const_sqrt_two_pi() {
    static const double value = [] {
        double target = 2.0 * const_pi();
        double s = 2.5;
        for (int i = 0; i < 8; ++i) s = 0.5 * (s + target / s);
        return s;
    }();
    return value;
}

double prefactor_value(const Prefactor& p) {
    return std::exp(p.exp_arg.get_d()) * std::pow(const_sqrt_two_pi(), p.sqrt_two_pi_pow);
}

// ---------------------------------------------------------------------------
// gamma_scale
// ---------------------------------------------------------------------------

LogScaled gamma_scale(long n, const Rational& alpha, const Rational& beta) {
    require(sgn(alpha) > 0, "gamma_scale: alpha must be positive");
    Rational z = Rational(n) + beta;  // argument of Gamma
    require(sgn(z) > 0, "gamma_scale: n + beta must be positive");
    double log_alpha = log_scale(alpha).log_magnitude;
    double power_part = z.get_d() * log_alpha;

    double log_gamma;
    if (z.get_den() == 1) {
        // Gamma(m) = (m-1)! for integer m >= 1.
        unsigned long m = z.get_num().get_ui();
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), m - 1);
        log_gamma = log_scale(Rational(fac)).log_magnitude;
    } else if (z.get_den() == 2) {
        // z = m + 1/2 with integer m >= 0:
        // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!).
        mpz_class m_z = (z.get_num() - 1) / 2;
        unsigned long m = m_z.get_ui();
        mpz_class num, den;
        mpz_fac_ui(num.get_mpz_t(), 2 * m);
        mpz_fac_ui(den.get_mpz_t(), m);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * m);  // den = 4^m m!
        log_gamma = log_scale(Rational(num) / Rational(den)).log_magnitude +
                    0.5 * std::log(const_pi());
    } else {
        log_gamma = std::lgamma(z.get_d());
    }
    return LogScaled{+1, power_part + log_gamma};
}

// ---------------------------------------------------------------------------
// fit_asymptotics
// ---------------------------------------------------------------------------

bool FitReport::all_converged() const {
    for (bool c : converged)
        if (!c) return false;
    return !converged.empty();
}

namespace {

struct Extrapolated {
    double value = 0.0;
    double spread = 0.0;
};

// Neville's algorithm evaluated at t = 0 from samples y_i = f(t_i); the
// spread compares the corner of the tableau with its two neighbours, the
// standard empirical error estimate for Richardson extrapolation.
Extrapolated extrapolate_to_zero(const std::vector<double>& t, const std::vector<double>& y) {
    std::size_t m = t.size();
    std::vector<std::vector<double>> p(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) p[i][0] = y[i];
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = j; i < m; ++i)
            p[i][j] = (t[i - j] * p[i][j - 1] - t[i] * p[i - 1][j - 1]) / (t[i - j] - t[i]);
    Extrapolated out;
    out.value = p[m - 1][m - 1];
    if (m >= 2)
        out.spread = std::fabs(p[m - 1][m - 1] - p[m - 1][m - 2]) +
                     std::fabs(p[m - 1][m - 1] - p[m - 2][m - 2]);
    return out;
}

}  // namespace

FitReport fit_asymptotics(const std::vector<Rational>& seq, const Rational& alpha,
                          const Rational& beta, int R, int extrap_order) {
    require(R >= 1, "fit_asymptotics: need at least one coefficient");
    require(extrap_order >= 1, "fit_asymptotics: extrapolation order must be >= 1");
    require(static_cast<long>(seq.size()) >= 4L * (R + extrap_order),
            "fit_asymptotics: sequence too short for requested fit");

    long n_hi = static_cast<long>(seq.size()) - 1;
    long step = std::max(1L, (n_hi - n_hi / 2) / extrap_order);
    std::vector<long> nodes;
    for (int i = 0; i <= extrap_order; ++i) nodes.push_back(n_hi - i * step);

    FitReport report;
    report.n_lo = nodes.back();
    report.n_hi = n_hi;
    report.extrap_order = extrap_order;

    for (int k = 0; k < R; ++k) {
        std::vector<double> t, y;
        for (long n : nodes) {
            // Residual after removing the already-fitted terms, in log space.
            LogScaled residual = log_scale(seq[static_cast<std::size_t>(n)]);
            for (int j = 0; j < k; ++j) {
                double cj = report.estimates[static_cast<std::size_t>(j)];
                if (cj == 0.0) continue;
                LogScaled term{cj > 0 ? +1 : -1,
                               std::log(std::fabs(cj)) +
                                   gamma_scale(n, alpha, beta - Rational(j)).log_magnitude};
                residual = ls_sub(residual, term);
            }
            LogScaled ratio = ls_div(residual, gamma_scale(n, alpha, beta - Rational(k)));
            t.push_back(1.0 / static_cast<double>(n));
            y.push_back(ratio.to_double());
        }
        Extrapolated ex = extrapolate_to_zero(t, y);
        double ref = report.estimates.empty() ? std::fabs(ex.value)
                                              : std::fabs(report.estimates.front());
        bool ok = ex.spread <= std::max(1e-4 * std::fabs(ex.value), 1e-9 * std::max(1.0, ref));
        report.estimates.push_back(ex.value);
        report.errors.push_back(ex.spread);
        report.converged.push_back(ok);
    }
    return report;
}

// ---------------------------------------------------------------------------
// remainder_order_check
// ---------------------------------------------------------------------------

namespace {

// Exact rational power alpha^e for integer e >= 0.
Rational rational_pow(const Rational& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return Rational(num) / Rational(den);
}

Rational factorial_rat(unsigned long m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return Rational(f);
}

// (2m)! / (4^m m!) = Gamma(m + 1/2) / sqrt(pi), exactly rational.
Rational half_gamma_rat(unsigned long m) {
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), 2 * m);
    mpz_fac_ui(den.get_mpz_t(), m);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * m);
    return Rational(num) / Rational(den);
}

// Taylor enclosure of exp(q): value within [approx - err, approx + err].
// With 80 terms and |q| <= 8 the error bound is below 1e-40, far tighter
// than any window-comparison margin seen in practice.
struct ExpEnclosure {
    Rational approx;
    Rational err;
};

ExpEnclosure exp_enclosure(const Rational& q) {
    const int terms = 80;
    Rational sum = 0;
    Rational term = 1;  // q^j / j!
    for (int j = 0; j <= terms; ++j) {
        sum += term;
        term = term * q / Rational(j + 1);
    }
    // |tail| <= |q|^(terms+1)/(terms+1)! * e^|q| and e^|q| < 4^ceil(|q|).
    Rational qa = abs(q);
    mpz_class ceil_qa = (qa.get_num() + qa.get_den() - 1) / qa.get_den();
    Rational bound = abs(term) * rational_pow(Rational(4), ceil_qa.get_ui());
    return ExpEnclosure{sum, bound};
}

double rational_to_double_clamped(const Rational& r) {
    double d = r.get_d();
    if (std::isfinite(d)) return d;
    return r > 0 ? std::numeric_limits<double>::infinity()
                 : -std::numeric_limits<double>::infinity();
}

struct Interval {
    Rational lo, hi;
};

// Exact-arithmetic window scan. scale_term(n, k) must return the full scale of
// asy coefficient k at index n with any constant factor common to numerator
// and denominator removed (a common constant rescales every window value
// identically and cannot change the growth comparison). exp_part is the
// enclosure of the prefactor's exponential factor.
RemainderCheck exact_window_check(const std::vector<Rational>& seq, const AlienElement& element,
                                  int R, const ExpEnclosure& exp_part,
                                  const std::function<Rational(long, int)>& scale_term,
                                  const std::function<Rational(long)>& scale_target) {
    long n_hi = static_cast<long>(seq.size()) - 1;
    long n_mid = n_hi / 2;
    long n_lo = n_hi / 4;

    Interval w1{Rational(0), Rational(0)};
    Interval w2{Rational(0), Rational(0)};
    for (long n = n_lo; n <= n_hi; ++n) {
        Rational partial = 0;  // sum of the first R terms, before the exp factor
        for (int k = 0; k < R; ++k) partial += element.asy()[k] * scale_term(n, k);
        Rational centre = seq[static_cast<std::size_t>(n)] - exp_part.approx * partial;
        Rational slack = exp_part.err * abs(partial);
        // |seq_n - e^q * partial| ranges over [max(0, |centre| - slack),
        // |centre| + slack] as e^q varies inside its enclosure.
        Rational abs_centre = abs(centre);
        Rational num_hi = abs_centre + slack;
        Rational num_lo = abs_centre > slack ? abs_centre - slack : Rational(0);
        Rational target = scale_target(n);
        Interval rho{num_lo / target, num_hi / target};
        Interval& w = (n < n_mid) ? w1 : w2;
        w.lo = std::max(w.lo, rho.lo);
        w.hi = std::max(w.hi, rho.hi);
    }

    RemainderCheck out;
    out.n_lo = n_lo;
    out.n_mid = n_mid;
    out.n_hi = n_hi;
    out.arithmetic = "exact";
    out.window1_max = rational_to_double_clamped((w1.lo + w1.hi) / 2);
    out.window2_max = rational_to_double_clamped((w2.lo + w2.hi) / 2);
    out.growth = out.window1_max > 0 ? out.window2_max / out.window1_max
                                     : (out.window2_max > 0
                                            ? std::numeric_limits<double>::infinity()
                                            : 0.0);
    if (sgn(w2.hi) == 0) {
        out.pass = true;  // remainder identically zero on the top window
    } else if (w2.hi <= Rational(2) * w1.lo) {
        out.pass = true;  // certainly within the growth budget
    } else if (w2.lo > Rational(2) * w1.hi) {
        out.pass = false;  // certainly outside it
    } else {
        throw std::runtime_error(
            "remainder_order_check: exponential enclosure too loose to certify the "
            "window comparison");
    }
    return out;
}

RemainderCheck log_scaled_window_check(const std::vector<Rational>& seq,
                                       const AlienElement& element, int R) {
    long n_hi = static_cast<long>(seq.size()) - 1;
    long n_mid = n_hi / 2;
    long n_lo = n_hi / 4;
    const Rational& alpha = element.alpha();
    const Rational& beta = element.beta();
    double log_pref = std::log(prefactor_value(element.prefactor()));
    double log_alpha = log_scale(alpha).log_magnitude;

    double w1 = 0.0, w2 = 0.0;
    for (long n = n_lo; n <= n_hi; ++n) {
        LogScaled residual = log_scale(seq[static_cast<std::size_t>(n)]);
        for (int k = 0; k < R; ++k) {
            const Rational& ck = element.asy()[k];
            if (sgn(ck) == 0) continue;
            LogScaled coeff = log_scale(ck);
            LogScaled term{coeff.sign,
                           coeff.log_magnitude + log_pref +
                               gamma_scale(n, alpha, beta - Rational(k)).log_magnitude};
            residual = ls_sub(residual, term);
        }
        // Target alpha^n Gamma(n+beta-R): strip the alpha^(beta-R) factor that
        // gamma_scale builds in.
        double log_target = gamma_scale(n, alpha, beta - Rational(R)).log_magnitude -
                            Rational(beta - Rational(R)).get_d() * log_alpha;
        double rho = residual.sign == 0
                         ? 0.0
                         : std::exp(residual.log_magnitude - log_target);
        double& w = (n < n_mid) ? w1 : w2;
        w = std::max(w, rho);
    }

    RemainderCheck out;
    out.n_lo = n_lo;
    out.n_mid = n_mid;
    out.n_hi = n_hi;
    out.arithmetic = "log-scaled";
    out.window1_max = w1;
    out.window2_max = w2;
    out.growth = w1 > 0 ? w2 / w1
                        : (w2 > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    out.pass = std::isfinite(w2) && (w2 == 0.0 || (w1 > 0 && w2 <= 2.0 * w1));
    return out;
}

}  // namespace

RemainderCheck remainder_order_check(const std::vector<Rational>& seq,
                                     const AlienElement& element, int R, RemainderMode mode) {
    require(R >= 1, "remainder_order_check: need at least one asymptotic term");
    require(element.asy_order() >= R,
            "remainder_order_check: asymptotic side known to too low an order");
    require(static_cast<long>(seq.size()) > 4L * (R + 2),
            "remainder_order_check: sequence too short for windowed comparison");
    long shared = std::min<long>(static_cast<long>(seq.size()) - 1, element.order());
    for (long n = 0; n <= shared; ++n)
        require(seq[static_cast<std::size_t>(n)] == element.series()[n],
                "remainder_order_check: sequence disagrees with the element's series");

    const Rational& alpha = element.alpha();
    const Rational& beta = element.beta();
    const Prefactor& pref = element.prefactor();

    // Shape with plain integer beta and no root-2pi factor: every scale is
    // alpha^(n+beta-k) * (n+beta-k-1)!, a pure rational.
    bool shape_integer = beta.get_den() == 1 && pref.sqrt_two_pi_pow == 0 && sgn(beta) > 0;
    // Shape with half-integer beta, alpha = 2 and a single 1/sqrt(2pi):
    // 2^(n+beta-k) Gamma(n+beta-k) / sqrt(2pi) = 2^(n+m0-k) (2M)!/(4^M M!)
    // with m0 = beta - 1/2 and M = n + m0 - k (the sqrt(pi) factors cancel).
    bool shape_half = beta.get_den() == 2 && pref.sqrt_two_pi_pow == -1 &&
                      alpha == Rational(2) && sgn(beta) > 0;
    bool q_small = abs(pref.exp_arg) <= Rational(8);

    bool use_exact;
    switch (mode) {
        case RemainderMode::Exact:
            require((shape_integer || shape_half) && q_small,
                    "remainder_order_check: scales do not collapse to rationals");
            use_exact = true;
            break;
        case RemainderMode::LogScaled:
            use_exact = false;
            break;
        default:
            use_exact = (shape_integer || shape_half) && q_small;
            break;
    }
    if (!use_exact) return log_scaled_window_check(seq, element, R);

    ExpEnclosure exp_part = exp_enclosure(pref.exp_arg);
    if (shape_integer) {
        long b = beta.get_num().get_si();
        auto term = [&](long n, int k) -> Rational {
            unsigned long e = static_cast<unsigned long>(n + b - k);
            return Rational(rational_pow(alpha, e) * factorial_rat(e - 1));
        };
        auto target = [&](long n) -> Rational {
            // alpha^n Gamma(n+beta-R) = alpha^n (n+b-R-1)!.
            return Rational(rational_pow(alpha, static_cast<unsigned long>(n)) *
                            factorial_rat(static_cast<unsigned long>(n + b - R - 1)));
        };
        return exact_window_check(seq, element, R, exp_part, term, target);
    }
    long m0 = mpz_class(Rational(beta - rat(1, 2)).get_num() / 2).get_si();  // beta = m0 + 1/2
    auto term = [&](long n, int k) -> Rational {
        // 2^(n+beta-k) Gamma(n+beta-k) / sqrt(2pi) collapses exactly to
        // 2^M (2M)!/(4^M M!) with M = n + m0 - k: the sqrt(2), sqrt(pi) and
        // sqrt(2pi) factors cancel outright.
        unsigned long m = static_cast<unsigned long>(n + m0 - k);
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m);
        return Rational(Rational(two_pow) * half_gamma_rat(m));
    };
    auto target = [&](long n) -> Rational {
        // 2^n Gamma(n+beta-R)/sqrt(pi) = 2^n (2M)!/(4^M M!), M = n+m0-R; the
        // sqrt(pi) dropped here is a constant factor common to every window
        // value and does not affect the growth comparison.
        unsigned long m = static_cast<unsigned long>(n + m0 - R);
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n));
        return Rational(two_pow) * half_gamma_rat(m);
    };
    return exact_window_check(seq, element, R, exp_part, term, target);
}

}  // namespace fdps
