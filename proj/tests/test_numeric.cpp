#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fdps/alien.hpp"
#include "fdps/numeric.hpp"

using namespace fdps;

namespace {

Rational factorial_value(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// (2n-1)!! = (2n)! / (2^n n!)
Rational double_factorial_value(unsigned long n) {
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), 2 * n);
    mpz_fac_ui(den.get_mpz_t(), n);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n);
    return Rational(num) / Rational(den);
}

std::vector<Rational> factorial_sequence(long n_max) {
    std::vector<Rational> s;
    for (long n = 0; n <= n_max; ++n) s.push_back(factorial_value(n));
    return s;
}

std::vector<Rational> double_factorial_sequence(long n_max) {
    std::vector<Rational> s;
    for (long n = 0; n <= n_max; ++n) s.push_back(double_factorial_value(n));
    return s;
}

// Coefficients of (sum n! x^n)^2: h_n = sum_k k! (n-k)!.
std::vector<Rational> factorial_square_sequence(long n_max) {
    std::vector<Rational> s;
    for (long n = 0; n <= n_max; ++n) {
        Rational h = 0;
        for (long k = 0; k <= n; ++k) h += factorial_value(k) * factorial_value(n - k);
        s.push_back(h);
    }
    return s;
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("log_scale handles zero, units, and big factorials") {
    CHECK(log_scale(Rational(0)).sign == 0);
    CHECK(log_scale(Rational(0)).to_double() == 0.0);

    LogScaled one = log_scale(Rational(1));
    CHECK(one.sign == 1);
    CHECK(one.log_magnitude == doctest::Approx(0.0).epsilon(1e-15));

    LogScaled neg = log_scale(rat(-3, 4));
    CHECK(neg.sign == -1);
    CHECK(neg.log_magnitude == doctest::Approx(std::log(0.75)).epsilon(1e-14));

    LogScaled f100 = log_scale(factorial_value(100));
    CHECK(rel_err(f100.log_magnitude, std::lgamma(101.0)) < 1e-12);

    LogScaled tiny = log_scale(rat(1, 7));
    CHECK(tiny.sign == 1);
    CHECK(tiny.log_magnitude == doctest::Approx(-std::log(7.0)).epsilon(1e-14));
}

TEST_CASE("log-scaled arithmetic matches plain double arithmetic") {
    auto ls = [](double v) {
        return v == 0.0 ? LogScaled::zero()
                        : LogScaled{v > 0 ? +1 : -1, std::log(std::fabs(v))};
    };
    double a = 3.25, b = -1.5;
    CHECK(ls_mul(ls(a), ls(b)).to_double() == doctest::Approx(a * b).epsilon(1e-14));
    CHECK(ls_div(ls(a), ls(b)).to_double() == doctest::Approx(a / b).epsilon(1e-14));
    CHECK(ls_add(ls(a), ls(b)).to_double() == doctest::Approx(a + b).epsilon(1e-14));
    CHECK(ls_sub(ls(a), ls(b)).to_double() == doctest::Approx(a - b).epsilon(1e-14));
    CHECK(ls_add(ls(a), ls(-a)).sign == 0);
    CHECK(ls_add(LogScaled::zero(), ls(b)).to_double() == doctest::Approx(b));
    CHECK(ls_neg(ls(a)).to_double() == doctest::Approx(-a));
    CHECK_THROWS_AS((void)ls_div(ls(a), LogScaled::zero()), std::domain_error);
}

TEST_CASE("reference constants reach full double accuracy") {
    CHECK(std::fabs(const_e() - std::exp(1.0)) < 1e-14);
    CHECK(std::fabs(const_pi() - std::acos(-1.0)) < 1e-14);
    CHECK(std::fabs(const_sqrt_two_pi() * const_sqrt_two_pi() - 2.0 * const_pi()) < 1e-14);

    CHECK(prefactor_value(Prefactor()) == doctest::Approx(1.0).epsilon(1e-14));
    double want = std::exp(1.0) / const_sqrt_two_pi();
    CHECK(prefactor_value(Prefactor(rat(1), -1)) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("gamma_scale: exact paths, examples, and the Gamma recurrence") {
    CHECK(gamma_scale(0, rat(1), rat(1)).log_magnitude == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(gamma_scale(5, rat(1), rat(1)).log_magnitude ==
          doctest::Approx(std::log(120.0)).epsilon(1e-13));

    // alpha = 2, beta = 1/2, n = 5: log(2^5.5 * Gamma(5.5)).
    double want = 5.5 * std::log(2.0) + std::lgamma(5.5);
    CHECK(rel_err(gamma_scale(5, rat(2), rat(1, 2)).log_magnitude, want) < 1e-12);

    // Gamma(z+1) = z Gamma(z), i.e. the scale gains log(alpha) + log(n+beta).
    for (Rational beta : {rat(1), rat(1, 2), rat(5, 2), rat(7, 3)}) {
        for (long n : {1L, 7L, 40L, 150L, 299L}) {
            double lhs = gamma_scale(n + 1, rat(2), beta).log_magnitude;
            double rhs = gamma_scale(n, rat(2), beta).log_magnitude +
                         std::log(2.0) + std::log(static_cast<double>(n) + beta.get_d());
            CHECK(std::fabs(lhs - rhs) < 1e-10);
        }
    }

    // (2n-1)!! = 2^(n+1/2) Gamma(n+1/2) / sqrt(2 pi).
    for (long n = 0; n <= 20; ++n) {
        double lhs = gamma_scale(n, rat(2), rat(1, 2)).log_magnitude -
                     std::log(const_sqrt_two_pi());
        double rhs = log_scale(double_factorial_value(n)).log_magnitude;
        CHECK(std::fabs(lhs - rhs) < 1e-10);
    }

    CHECK_THROWS_AS((void)gamma_scale(0, rat(1), rat(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)gamma_scale(5, rat(-1), rat(1)), std::invalid_argument);
}

TEST_CASE("fit_asymptotics recovers exact factorial coefficients") {
    auto seq = factorial_sequence(120);
    FitReport r = fit_asymptotics(seq, rat(1), rat(1), 2);
    REQUIRE(r.estimates.size() == 2);
    CHECK(std::fabs(r.estimates[0] - 1.0) < 1e-12);
    CHECK(std::fabs(r.estimates[1]) < 1e-9);
    CHECK(r.all_converged());
    CHECK(r.errors.size() == 2);
    CHECK(r.n_hi == 120);
    CHECK(r.n_lo == 60);
    CHECK(r.extrap_order == 4);
}

TEST_CASE("fit_asymptotics finds the double-factorial prefactor 1/sqrt(2 pi)") {
    auto seq = double_factorial_sequence(100);
    FitReport r = fit_asymptotics(seq, rat(2), rat(1, 2), 1);
    CHECK(rel_err(r.estimates[0], 1.0 / const_sqrt_two_pi()) < 1e-8);
    CHECK(r.all_converged());
}

TEST_CASE("fit_asymptotics on a differentiated factorial sequence: 1, -1") {
    // d_n = (n+1) (n+1)! = Gamma(n+3) - Gamma(n+2) exactly.
    std::vector<Rational> seq;
    for (long n = 0; n <= 120; ++n) seq.push_back(Rational(n + 1) * factorial_value(n + 1));
    FitReport r = fit_asymptotics(seq, rat(1), rat(3), 2);
    CHECK(std::fabs(r.estimates[0] - 1.0) < 1e-6);
    CHECK(std::fabs(r.estimates[1] + 1.0) < 1e-3);
}

TEST_CASE("fit_asymptotics on the squared factorial series: 2, 2, 4") {
    auto seq = factorial_square_sequence(130);
    FitReport r = fit_asymptotics(seq, rat(1), rat(1), 3, 5);
    CHECK(std::fabs(r.estimates[0] - 2.0) < 1e-6);
    CHECK(std::fabs(r.estimates[1] - 2.0) < 1e-4);
    CHECK(std::fabs(r.estimates[2] - 4.0) < 1e-2);
}

TEST_CASE("fit_asymptotics sends convergent data to zero") {
    std::vector<Rational> seq;
    Rational p = 1;
    for (long n = 0; n <= 80; ++n, p *= 2) seq.push_back(p);
    FitReport r = fit_asymptotics(seq, rat(1), rat(1), 1);
    CHECK(std::fabs(r.estimates[0]) < 1e-12);
    CHECK(r.all_converged());
}

TEST_CASE("fit_asymptotics is scale-equivariant") {
    auto seq = factorial_square_sequence(110);
    auto scaled = seq;
    for (auto& v : scaled) v *= rat(3, 7);
    FitReport a = fit_asymptotics(seq, rat(1), rat(1), 2);
    FitReport b = fit_asymptotics(scaled, rat(1), rat(1), 2);
    // The leading ratio scales exactly; deeper coefficients see mild noise
    // from log-space cancellation when the fitted term is subtracted.
    CHECK(rel_err(b.estimates[0], (3.0 / 7.0) * a.estimates[0]) < 1e-10);
    CHECK(rel_err(b.estimates[1], (3.0 / 7.0) * a.estimates[1]) < 1e-6);
}

TEST_CASE("fit_asymptotics rejects sequences that are too short") {
    auto seq = factorial_sequence(18);  // 19 terms < 4 * (2 + 4)
    CHECK_THROWS_AS((void)fit_asymptotics(seq, rat(1), rat(1), 2), std::invalid_argument);
}

TEST_CASE("remainder check: factorial series is exactly its own expansion") {
    AlienElement f = factorial_element(130);
    auto seq = factorial_sequence(130);
    RemainderCheck rc = remainder_order_check(seq, f, 1);
    CHECK(rc.pass);
    CHECK(rc.arithmetic == "exact");
    CHECK(rc.window2_max == 0.0);
    CHECK(rc.n_hi == 130);
    CHECK(rc.n_mid == 65);
    CHECK(rc.n_lo == 32);
}

TEST_CASE("remainder check: double factorials collapse the half-integer scales") {
    AlienElement f = double_factorial_element(130);
    auto seq = double_factorial_sequence(130);
    RemainderCheck rc = remainder_order_check(seq, f, 1);
    CHECK(rc.pass);
    CHECK(rc.arithmetic == "exact");
    CHECK(rc.window2_max == 0.0);
}

TEST_CASE("remainder check accepts the squared factorial expansion and rejects a corruption") {
    auto seq = factorial_square_sequence(130);
    TruncatedSeries series(std::vector<Rational>(seq.begin(), seq.end()));
    TruncatedSeries good_asy(std::vector<Rational>{2, 2, 4, 12});
    AlienElement good(rat(1), rat(1), series, Prefactor(), good_asy);

    RemainderCheck rc = remainder_order_check(seq, good, 3);
    CHECK(rc.pass);
    CHECK(rc.arithmetic == "exact");
    CHECK(rc.window2_max > 0.0);
    CHECK(rc.growth <= 2.0);

    RemainderCheck rl = remainder_order_check(seq, good, 3, RemainderMode::LogScaled);
    CHECK(rl.pass);
    CHECK(rl.arithmetic == "log-scaled");

    TruncatedSeries bad_asy(std::vector<Rational>{2, 3, 4, 12});
    AlienElement bad(rat(1), rat(1), series, Prefactor(), bad_asy);
    RemainderCheck rb = remainder_order_check(seq, bad, 3);
    CHECK_FALSE(rb.pass);
    CHECK(rb.growth > 2.0);
    RemainderCheck rbl = remainder_order_check(seq, bad, 3, RemainderMode::LogScaled);
    CHECK_FALSE(rbl.pass);
}

TEST_CASE("remainder check: wrong leading coefficient fails in either arithmetic") {
    AlienElement f = factorial_element(130);
    TruncatedSeries off_asy(std::vector<Rational>{rat(11, 10), 0, 0});
    AlienElement off(f.alpha(), f.beta(), f.series(), f.prefactor(), off_asy);
    auto seq = factorial_sequence(130);
    RemainderCheck rc = remainder_order_check(seq, off, 2);
    CHECK_FALSE(rc.pass);
    RemainderCheck rl = remainder_order_check(seq, off, 2, RemainderMode::LogScaled);
    CHECK_FALSE(rl.pass);
}

TEST_CASE("remainder check validates its inputs") {
    AlienElement f = factorial_element(130);
    auto seq = factorial_sequence(130);

    auto corrupted = seq;
    corrupted[3] += 1;
    CHECK_THROWS_AS((void)remainder_order_check(corrupted, f, 1), std::invalid_argument);

    // Asymptotic side known to too low an order for the requested depth.
    CHECK_THROWS_AS((void)remainder_order_check(seq, f, f.asy_order() + 1),
                    std::invalid_argument);

    auto short_seq = factorial_sequence(11);
    AlienElement g = factorial_element(11);
    CHECK_THROWS_AS((void)remainder_order_check(short_seq, g, 1), std::invalid_argument);

    // Exact mode demands collapsing scales: alpha = 3 has none here.
    TruncatedSeries asy_one(std::vector<Rational>{1});
    AlienElement h(rat(3), rat(1, 3), f.series(), Prefactor(), asy_one);
    CHECK_THROWS_AS((void)remainder_order_check(seq, h, 1, RemainderMode::Exact),
                    std::invalid_argument);
}
