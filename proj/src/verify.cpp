#include "fdps/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fdps/alien.hpp"
#include "fdps/applications.hpp"
#include "fdps/numeric.hpp"

namespace fdps {

VerifyResult& operator+=(VerifyResult& a, const VerifyResult& b) {
    a.checks_passed += b.checks_passed;
    a.checks_failed += b.checks_failed;
    a.randomized_instances += b.randomized_instances;
    return a;
}

namespace {

void report(std::ostream& out, VerifyResult& r, const std::string& name, bool ok,
            const std::string& detail = "") {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << " " << detail;
    out << "\n";
    (ok ? r.checks_passed : r.checks_failed) += 1;
}

// ---------------------------------------------------------------------------
// Randomized identities
// ---------------------------------------------------------------------------

struct Draw {
    std::mt19937_64 gen;

    explicit Draw(std::uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Rational rational() { return rat(integer(-9, 9), integer(1, 6)); }

    Rational nonzero_rational() {
        Rational v = rational();
        return v == 0 ? Rational(1) : v;
    }

    Rational positive_rational() {
        return rat(integer(1, 4), integer(1, 3));
    }

    int order() { return static_cast<int>(integer(10, 12)); }

    TruncatedSeries series(int n) {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) c.push_back(rational());
        return TruncatedSeries(std::move(c));
    }

    // g with g_0 = 0, g_1 = 1 (the domain of composition and inversion).
    TruncatedSeries tangent_series(int n) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        c[1] = 1;
        for (int k = 2; k <= n; ++k) c[static_cast<std::size_t>(k)] = rational();
        return TruncatedSeries(std::move(c));
    }

    // A nonzero expansion so prefactor bookkeeping is actually exercised.
    TruncatedSeries nonzero_series(int n) {
        TruncatedSeries s = series(n);
        if (s.is_zero()) return TruncatedSeries::one(n);
        return s;
    }

    Prefactor prefactor() {
        return Prefactor(rational(), static_cast<int>(integer(-2, 2)));
    }
};

bool elements_equal(const AlienElement& a, const AlienElement& b) {
    if (a.alpha() != b.alpha() || a.beta() != b.beta()) return false;
    int so = std::min(a.order(), b.order());
    if (!(a.series().truncated(so) == b.series().truncated(so))) return false;
    int ao = std::min(a.asy_order(), b.asy_order());
    if (!(a.asy().truncated(ao) == b.asy().truncated(ao))) return false;
    if (a.asy().truncated(ao).is_zero()) return true;  // prefactor immaterial
    return a.prefactor() == b.prefactor();
}

bool ring_axioms_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    Prefactor pref = d.prefactor();
    AlienElement a(alpha, beta, d.series(n), pref, d.nonzero_series(n));
    AlienElement b(alpha, beta, d.series(n), pref, d.nonzero_series(n));
    AlienElement c(alpha, beta, d.series(n), pref, d.nonzero_series(n));
    Rational s = d.nonzero_rational();
    return elements_equal(add(a, b), add(b, a)) &&
           elements_equal(add(add(a, b), c), add(a, add(b, c))) &&
           elements_equal(mul(a, b), mul(b, a)) &&
           elements_equal(mul(mul(a, b), c), mul(a, mul(b, c))) &&
           elements_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) &&
           elements_equal(scale(s, add(a, b)), add(scale(s, a), scale(s, b))) &&
           elements_equal(sub(a, b), add(a, scale(Rational(-1), b)));
}

bool product_rule_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    Prefactor pref = d.prefactor();
    AlienElement a(alpha, beta, d.series(n), pref, d.nonzero_series(n));
    AlienElement b(alpha, beta, d.series(n), pref, d.nonzero_series(n));

    // The product's expansion is the derivation applied through the product:
    // f * (asy of g) + g * (asy of f), and squaring degenerates to 2 f asy(f).
    AlienElement ab = mul(a, b);
    TruncatedSeries expect =
        add(mul(a.series(), b.asy()), mul(b.series(), a.asy()));
    int ao = std::min(ab.asy_order(), expect.order());
    if (!(ab.asy().truncated(ao) == expect.truncated(ao))) return false;

    AlienElement sq = mul(a, a);
    TruncatedSeries twice = scale(Rational(2), mul(a.series(), a.asy()));
    ao = std::min(sq.asy_order(), twice.order());
    return sq.asy().truncated(ao) == twice.truncated(ao);
}

bool derivative_transfer_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    Prefactor pref = d.prefactor();
    AlienElement a(alpha, beta, d.series(n), pref, d.nonzero_series(n));
    AlienElement b(alpha, beta, d.series(n), pref, d.nonzero_series(n));

    // Linearity of the transfer.
    if (!elements_equal(derivative(add(a, b)),
                        add(derivative(a), derivative(b))))
        return false;
    Rational s = d.nonzero_rational();
    if (!elements_equal(derivative(scale(s, a)), scale(s, derivative(a))))
        return false;

    // Leibniz rule for x^2 d/dx, expressed entirely in the calculus: the
    // derivative raises beta by 2, shifting back down multiplies by x^2, so
    // x^2 (fg)' = (x^2 f') g + f (x^2 g') must hold with expansions attached.
    AlienElement lhs = beta_shift_down(derivative(mul(a, b)), 2);
    AlienElement rhs = add(mul(beta_shift_down(derivative(a), 2), b),
                           mul(a, beta_shift_down(derivative(b), 2)));
    return elements_equal(lhs, rhs);
}

bool chain_associativity_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    AlienElement f(alpha, beta, d.series(n), d.prefactor(), d.nonzero_series(n));
    AlienElement g = from_analytic(d.tangent_series(n), alpha, beta);
    AlienElement h = from_analytic(d.tangent_series(n), alpha, beta);
    return elements_equal(compose(compose(f, g), h), compose(f, compose(g, h)));
}

bool inversion_involution_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    AlienElement g(alpha, beta, d.tangent_series(n), d.prefactor(),
                   d.nonzero_series(n));
    return elements_equal(invert(invert(g)), g);
}

bool compose_invert_cancellation_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    AlienElement g(alpha, beta, d.tangent_series(n), d.prefactor(),
                   d.nonzero_series(n));
    for (const AlienElement& round :
         {compose(g, invert(g)), compose(invert(g), g)}) {
        if (!round.asy().is_zero()) return false;
        int so = round.order();
        if (!(round.series() == TruncatedSeries::identity(so))) return false;
    }
    return true;
}

bool solve_outer_round_trip_instance(Draw& d) {
    int n = d.order();
    Rational alpha = d.positive_rational();
    Rational beta = d.positive_rational();
    Prefactor pf = d.prefactor();
    AlienElement f(alpha, beta, d.series(n), pf, d.nonzero_series(n));
    TruncatedSeries gs = d.tangent_series(n);
    // Half the instances give the inner series its own nonzero expansion; the
    // composite is representable when the inner prefactor absorbs e^{g_2/a}.
    bool inner_expansion = d.integer(0, 1) == 1;
    AlienElement g =
        inner_expansion
            ? AlienElement(alpha, beta, gs, exp_shift(pf, gs[2] / alpha),
                           d.nonzero_series(n))
            : from_analytic(gs, alpha, beta);
    AlienElement h = compose(f, g);
    auto solved = solve_outer_asy(h, g, f.series());
    if (solved.first != f.prefactor()) return false;
    int ao = std::min(solved.second.order(), f.asy_order());
    return solved.second.truncated(ao) == f.asy().truncated(ao);
}

bool beta_shift_round_trip_instance(Draw& d) {
    int n = d.order();
    int m = static_cast<int>(d.integer(1, 2));
    Rational alpha = d.positive_rational();
    Rational beta = Rational(m) + d.positive_rational();  // beta > m
    AlienElement a(alpha, beta, d.series(n), d.prefactor(), d.nonzero_series(n));

    AlienElement down = beta_shift_down(a, m);
    if (down.beta() != beta - Rational(m)) return false;
    if (!(down.asy() == a.asy()) || down.prefactor() != a.prefactor())
        return false;
    if (!elements_equal(beta_shift_up(down, m), a)) return false;

    // The other direction needs m vanishing leading coefficients.
    std::vector<Rational> c = a.series().coeffs();
    for (int k = 0; k < m; ++k) c[static_cast<std::size_t>(k)] = 0;
    AlienElement az(alpha, beta, TruncatedSeries(c), a.prefactor(), a.asy());
    AlienElement up = beta_shift_up(az, m);
    if (up.beta() != beta + Rational(m)) return false;
    return elements_equal(beta_shift_down(up, m), az);
}

void run_property(std::ostream& out, VerifyResult& r, const VerifyOptions& opt,
                  int index, const std::string& name,
                  const std::function<bool(Draw&)>& instance) {
    std::uint64_t base = opt.seed + 1000ull * static_cast<std::uint64_t>(index);
    for (int i = 0; i < opt.instances_per_property; ++i) {
        std::uint64_t seed = base + static_cast<std::uint64_t>(i);
        Draw d(seed);
        bool ok = false;
        std::string detail;
        try {
            ok = instance(d);
        } catch (const std::exception& e) {
            detail = std::string(": ") + e.what();
        }
        r.randomized_instances += 1;
        if (!ok) {
            report(out, r, name, false, "seed=" + std::to_string(seed) + detail);
            return;
        }
    }
    report(out, r, name, true,
           "instances=" + std::to_string(opt.instances_per_property) +
               " seeds=" + std::to_string(base) + ".." +
               std::to_string(base + static_cast<std::uint64_t>(
                                         opt.instances_per_property - 1)));
}

// ---------------------------------------------------------------------------
// Application cross-checks
// ---------------------------------------------------------------------------

const std::vector<Rational>& chords_expected_row() {
    static const std::vector<Rational> row = {
        rat(1),        rat(-5, 2),       rat(-43, 8),
        rat(-579, 16), rat(-44477, 128), rat(-5326191, 1280),
        rat(-180306541, 3072), rat(-203331297947, 215040),
        rat(-58726239094693, 3440640)};
    return row;
}

const std::vector<Rational>& monolithic_expected_row() {
    static const std::vector<Rational> row = {
        rat(1),       rat(-4),       rat(-6),
        rat(-154, 3), rat(-1610, 3), rat(-34588, 5),
        rat(-4666292, 45), rat(-553625626, 315), rat(-1158735422, 35)};
    return row;
}

const std::vector<Rational>& simple_expected_row() {
    static const std::vector<Rational> row = {
        rat(1),      rat(-4),      rat(2),
        rat(-40, 3), rat(-182, 3), rat(-7624, 15),
        rat(-202652, 45), rat(-14115088, 315), rat(-30800534, 63),
        rat(-16435427656, 2835)};
    return row;
}

bool matches_row(const TruncatedSeries& asy, const std::vector<Rational>& row) {
    if (asy.order() + 1 < static_cast<int>(row.size())) return false;
    for (std::size_t k = 0; k < row.size(); ++k)
        if (asy[static_cast<int>(k)] != row[k]) return false;
    return true;
}

Rational binom(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(b);
}

void check_applications(std::ostream& out, VerifyResult& r) {
    SequenceTable c = connected_chords(40, 9);
    {
        bool ok = c.series[0] == 0 && c.series[1] == 1 && c.series[2] == 1 &&
                  c.series[3] == 4 && c.series[4] == 27 && c.series[5] == 248;
        for (int n = 2; ok && n <= 40; ++n) {
            Rational acc = 0;
            for (int i = 1; i < n; ++i) acc += c.series[i] * c.series[n - i];
            ok = c.series[n] == Rational(n - 1) * acc;
        }
        report(out, r, "applications/chords-series-recurrence", ok);
    }
    report(out, r, "applications/chords-expansion-row",
           c.asy_prefactor == Prefactor(rat(-1), -1) &&
               matches_row(c.asy, chords_expected_row()));
    {
        auto closed = connected_chords_closed_form(c.series.truncated(10), 9);
        report(out, r, "applications/chords-route-agreement",
               closed.first == c.asy_prefactor &&
                   closed.second == c.asy.truncated(8));
    }

    SequenceTable m = monolithic_chords(30, 9);
    {
        bool ok = m.series[1] == 1 && m.series[2] == 3 && m.series[3] == 11;
        for (long n = 1; ok && n <= 30; ++n) {
            Rational acc = 0;
            for (long k = 1; k <= n; ++k)
                acc += c.series[static_cast<int>(k)] * binom(n + k - 1, n - k);
            ok = m.series[static_cast<int>(n)] == acc;
        }
        report(out, r, "applications/monolithic-series-substitution", ok);
    }
    report(out, r, "applications/monolithic-expansion-row",
           m.asy_prefactor == Prefactor(rat(0), -1) &&
               matches_row(m.asy, monolithic_expected_row()));
    {
        auto closed = monolithic_chords_closed_form(m.series.truncated(10), 9);
        report(out, r, "applications/monolithic-route-agreement",
               closed.first == m.asy_prefactor &&
                   closed.second == m.asy.truncated(8));
    }

    SequenceTable s = simple_permutations(30, 10);
    report(out, r, "applications/simple-series-prefix",
           s.series[3] == 0 && s.series[4] == 2 && s.series[5] == 6 &&
               s.series[6] == 46 && s.series[7] == 338 && s.series[8] == 2926);
    report(out, r, "applications/simple-expansion-row",
           s.asy_prefactor == Prefactor(rat(-2), 0) &&
               matches_row(s.asy, simple_expected_row()));
    {
        auto closed = simple_permutations_closed_form(s.series.truncated(11), 9);
        report(out, r, "applications/simple-route-agreement",
               closed.first == s.asy_prefactor &&
                   closed.second == s.asy.truncated(8));
    }

    {
        SequenceTable wide = connected_chords(100, 2);
        double p100 = connectivity_probability(100, 2);
        Rational exact = wide.series[100];
        for (long j = 1; j <= 100; ++j) exact /= Rational(2 * j - 1);
        report(out, r, "applications/connectivity-partial-sum",
               std::fabs(p100 - exact.get_d()) < 1e-4);
    }
}

// ---------------------------------------------------------------------------
// Remainder-order checks
// ---------------------------------------------------------------------------

AlienElement element_of(const SequenceTable& t) {
    return AlienElement(t.alpha, t.beta, t.series, t.asy_prefactor, t.asy);
}

void check_remainders(std::ostream& out, VerifyResult& r) {
    {
        AlienElement f = factorial_element(120, 5);
        RemainderCheck rc = remainder_order_check(f.series().coeffs(), f, 5);
        report(out, r, "remainders/factorial-terminating",
               rc.pass && rc.window2_max == 0.0 && rc.arithmetic == "exact");
    }

    SequenceTable c = connected_chords(200, 6);
    {
        RemainderCheck rc = remainder_order_check(c.series.coeffs(), element_of(c), 5);
        report(out, r, "remainders/connected-chords", rc.pass && rc.arithmetic == "exact",
               "growth=" + std::to_string(rc.growth));
    }
    {
        RemainderCheck rc = remainder_order_check(c.series.coeffs(), element_of(c), 5,
                                                  RemainderMode::LogScaled);
        report(out, r, "remainders/connected-chords-log-scaled",
               rc.pass && rc.arithmetic == "log-scaled",
               "growth=" + std::to_string(rc.growth));
    }
    {
        SequenceTable m = monolithic_chords(200, 6);
        RemainderCheck rc = remainder_order_check(m.series.coeffs(), element_of(m), 5);
        report(out, r, "remainders/monolithic-chords", rc.pass && rc.arithmetic == "exact",
               "growth=" + std::to_string(rc.growth));
    }
    {
        SequenceTable s = simple_permutations(200, 6);
        RemainderCheck rc = remainder_order_check(s.series.coeffs(), element_of(s), 5);
        report(out, r, "remainders/simple-permutations", rc.pass && rc.arithmetic == "exact",
               "growth=" + std::to_string(rc.growth));
    }
    {
        std::vector<Rational> bad = c.asy.coeffs();
        bad[3] += 1;
        AlienElement corrupted(c.alpha, c.beta, c.series, c.asy_prefactor,
                               TruncatedSeries(bad));
        RemainderCheck rc = remainder_order_check(c.series.coeffs(), corrupted, 5);
        report(out, r, "remainders/perturbed-coefficient-rejected", !rc.pass,
               "growth=" + std::to_string(rc.growth));
    }
}

}  // namespace

VerifyResult verify_identities(std::ostream& out, const VerifyOptions& opt) {
    VerifyResult r;
    run_property(out, r, opt, 0, "identities/ring-axioms", ring_axioms_instance);
    run_property(out, r, opt, 1, "identities/product-rule", product_rule_instance);
    run_property(out, r, opt, 2, "identities/derivative-transfer",
                 derivative_transfer_instance);
    run_property(out, r, opt, 3, "identities/chain-associativity",
                 chain_associativity_instance);
    run_property(out, r, opt, 4, "identities/inversion-involution",
                 inversion_involution_instance);
    run_property(out, r, opt, 5, "identities/compose-invert-cancellation",
                 compose_invert_cancellation_instance);
    run_property(out, r, opt, 6, "identities/solve-outer-round-trip",
                 solve_outer_round_trip_instance);
    run_property(out, r, opt, 7, "identities/beta-shift-round-trip",
                 beta_shift_round_trip_instance);
    out << "SUITE identities: " << r.checks_passed << " passed, " << r.checks_failed
        << " failed, " << r.randomized_instances << " randomized instances\n";
    return r;
}

VerifyResult verify_applications(std::ostream& out) {
    VerifyResult r;
    check_applications(out, r);
    out << "SUITE applications: " << r.checks_passed << " passed, "
        << r.checks_failed << " failed\n";
    return r;
}

VerifyResult verify_remainders(std::ostream& out) {
    VerifyResult r;
    check_remainders(out, r);
    out << "SUITE remainders: " << r.checks_passed << " passed, "
        << r.checks_failed << " failed\n";
    return r;
}

VerifyResult verify_all(std::ostream& out, const VerifyOptions& opt) {
    VerifyResult total;
    total += verify_identities(out, opt);
    total += verify_applications(out);
    total += verify_remainders(out);
    out << "TOTAL: " << total.checks_passed << " passed, " << total.checks_failed
        << " failed, " << total.randomized_instances << " randomized instances\n";
    return total;
}

}  // namespace fdps
