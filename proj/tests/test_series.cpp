#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "fdps/series.hpp"

using fdps::Rational;
using fdps::TruncatedSeries;
using fdps::rat;

namespace {

TruncatedSeries geometric(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(1));
    return TruncatedSeries(std::move(c));  // 1/(1-x)
}

TruncatedSeries factorial_series(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational f(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) f *= n;
        c[static_cast<size_t>(n)] = f;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries double_factorial_series(int order) {
    // sum (2n-1)!! x^n with (-1)!! = 1
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational f(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) f *= 2 * n - 1;
        c[static_cast<size_t>(n)] = f;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_lead = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) v = rat(num(rng), den(rng));
    if (unit_lead) {
        c[0] = 0;
        c[1] = 1;
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("construction and accessors") {
    TruncatedSeries s{1, 2, 3};
    CHECK(s.order() == 2);
    CHECK(s[0] == 1);
    CHECK(s[2] == 3);
    CHECK(s.all_integer());
    CHECK_FALSE(s.is_zero());
    CHECK(TruncatedSeries::zero(4).is_zero());
    CHECK(TruncatedSeries::one(3)[0] == 1);
    CHECK(TruncatedSeries::identity(3)[1] == 1);
    CHECK(TruncatedSeries::constant(rat(2, 3), 2)[0] == rat(2, 3));
    CHECK_FALSE(TruncatedSeries::constant(rat(2, 3), 2).all_integer());
    CHECK(s.truncated(1).order() == 1);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
    CHECK(fdps::rational_from_string("-5/2") == rat(-5, 2));
    CHECK(fdps::rational_from_string(" 7 ") == Rational(7));
    CHECK(fdps::rational_to_string(rat(-43, 8)) == "-43/8");
    CHECK(fdps::rational_to_string(Rational(4)) == "4");
    CHECK(fdps::rational_from_string("6/4") == rat(3, 2));
    CHECK_THROWS_AS(fdps::rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(fdps::rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(fdps::rational_from_string(""), std::invalid_argument);
}

TEST_CASE("add: identity, cancellation, doubling") {
    TruncatedSeries onepx{1, 1};
    CHECK(add(onepx, TruncatedSeries::zero(1)) == onepx);

    TruncatedSeries a{0, 1, -1};  // x - x^2
    TruncatedSeries b{0, 0, 1};   // x^2
    CHECK(add(a, b) == TruncatedSeries{0, 1, 0});

    TruncatedSeries f3 = factorial_series(3);
    CHECK(add(f3, f3) == TruncatedSeries{2, 2, 4, 12});

    SUBCASE("order is the min of the operand orders") {
        CHECK(add(TruncatedSeries::one(5), TruncatedSeries::one(2)).order() == 2);
    }
}

TEST_CASE("mul: difference of squares, factorial convolution, monomials") {
    TruncatedSeries onepx{1, 1, 0};
    TruncatedSeries onemx{1, -1, 0};
    CHECK(mul(onepx, onemx) == TruncatedSeries{1, 0, -1});

    TruncatedSeries sq = mul(factorial_series(3), factorial_series(3));
    CHECK(sq == TruncatedSeries{1, 2, 5, 16});

    TruncatedSeries x = TruncatedSeries::identity(2);
    CHECK(mul(x, x) == TruncatedSeries{0, 0, 1});

    SUBCASE("rational path agrees with integer fast path") {
        TruncatedSeries a{1, 2, 3, 4};
        TruncatedSeries b{5, -6, 7, -8};
        TruncatedSeries ar = scale(rat(1, 3), a);
        CHECK(mul(a, b) == scale(Rational(3), mul(ar, b)));
    }
}

TEST_CASE("derivative") {
    CHECK(derivative(TruncatedSeries{1, 1, 1}) == TruncatedSeries{1, 2});
    CHECK(derivative(TruncatedSeries::constant(Rational(5), 3)).is_zero());
    CHECK(derivative(factorial_series(3)) == TruncatedSeries{1, 4, 18});
    CHECK_THROWS_AS(derivative(TruncatedSeries{7}), std::invalid_argument);
}

TEST_CASE("reciprocal: geometric series and constants") {
    CHECK(reciprocal(TruncatedSeries{1, -1, 0, 0}) == TruncatedSeries{1, 1, 1, 1});
    CHECK(reciprocal(TruncatedSeries{1, 1, 0, 0}) == TruncatedSeries{1, -1, 1, -1});
    CHECK(reciprocal(TruncatedSeries::constant(Rational(2), 2)) ==
          TruncatedSeries::constant(rat(1, 2), 2));
    CHECK_THROWS_AS(reciprocal(TruncatedSeries{0, 1}), std::invalid_argument);

    SUBCASE("f * reciprocal(f) = 1 for a rational series") {
        TruncatedSeries f(std::vector<Rational>{rat(3, 2), rat(-1, 3), rat(2, 5), rat(7, 4)});
        CHECK(mul(f, reciprocal(f)) == TruncatedSeries::one(3));
    }
    SUBCASE("leading -1 integer path") {
        TruncatedSeries f{-1, 2, -3, 4};
        CHECK(reciprocal(f).all_integer());
        CHECK(mul(f, reciprocal(f)) == TruncatedSeries::one(3));
    }
}

TEST_CASE("compose: identity, geometric self-similarity, squaring") {
    TruncatedSeries f{3, 1, 4, 1, 5};
    CHECK(compose(f, TruncatedSeries::identity(4)) == f);

    // (1/(1-x)) o (x/(1-x)) = (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
    TruncatedSeries inner = mul_xpow(geometric(9), 1).truncated(10);
    TruncatedSeries got = compose(geometric(10), inner);
    std::vector<Rational> expect(11);
    expect[0] = 1;
    Rational p(1);
    for (int i = 1; i <= 10; ++i, p *= 2) expect[static_cast<size_t>(i)] = p;
    CHECK(got == TruncatedSeries(expect));
    // cross-check against the closed form expanded independently
    TruncatedSeries closed = mul(TruncatedSeries{1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                 reciprocal(TruncatedSeries{1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(got == closed);

    TruncatedSeries xsq{0, 0, 1, 0, 0};
    TruncatedSeries xpx2{0, 1, 1, 0, 0};
    CHECK(compose(xsq, xpx2) == TruncatedSeries{0, 0, 1, 2, 1});

    CHECK_THROWS_AS(compose(f, TruncatedSeries::one(4)), std::invalid_argument);

    SUBCASE("block evaluation path (large order) matches the closed form") {
        TruncatedSeries inner60 = mul_xpow(geometric(59), 1).truncated(60);
        TruncatedSeries big = compose(geometric(60), inner60);
        CHECK(big[0] == 1);
        Rational q(1);
        for (int i = 1; i <= 60; ++i, q *= 2) CHECK(big[i] == q);
    }
}

TEST_CASE("comp_inverse: identity, Moebius pair, round trips") {
    CHECK(comp_inverse(TruncatedSeries::identity(5)) == TruncatedSeries::identity(5));

    // inverse of x/(1-x) is x/(1+x) = x - x^2 + x^3 - ...
    TruncatedSeries g = mul_xpow(geometric(7), 1).truncated(8);
    TruncatedSeries h = comp_inverse(g);
    for (int n = 1; n <= 8; ++n) CHECK(h[n] == ((n % 2 == 1) ? Rational(1) : Rational(-1)));
    CHECK(compose(g, h) == TruncatedSeries::identity(8));
    CHECK(compose(h, g) == TruncatedSeries::identity(8));

    // x I(x)^2 with I = sum (2n-1)!! x^n: inverse composes back to x.
    TruncatedSeries I = double_factorial_series(11);
    TruncatedSeries xI2 = mul_xpow(mul(I, I), 1).truncated(12);
    TruncatedSeries inv = comp_inverse(xI2);
    CHECK(compose(xI2, inv) == TruncatedSeries::identity(12));
    CHECK(compose(inv, xI2) == TruncatedSeries::identity(12));

    CHECK_THROWS_AS(comp_inverse(TruncatedSeries{0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(comp_inverse(TruncatedSeries{1, 1}), std::invalid_argument);

    SUBCASE("multiple Newton doublings at order 60") {
        TruncatedSeries g60 = mul_xpow(geometric(59), 1).truncated(60);
        TruncatedSeries h60 = comp_inverse(g60);
        for (int n = 1; n <= 60; ++n)
            CHECK(h60[n] == ((n % 2 == 1) ? Rational(1) : Rational(-1)));
    }
}

TEST_CASE("pow_rational: binomial series, zeroth power, square root round trip") {
    TruncatedSeries onepx{1, 1, 0, 0};
    TruncatedSeries r = pow_rational(onepx, rat(1, 2));
    CHECK(r == TruncatedSeries(std::vector<Rational>{Rational(1), rat(1, 2), rat(-1, 8), rat(1, 16)}));
    CHECK(pow_rational(onepx, Rational(0)) == TruncatedSeries::one(3));
    CHECK(mul(r, r) == TruncatedSeries{1, 1, 0, 0});
    CHECK_THROWS_AS(pow_rational(TruncatedSeries{2, 1}, rat(1, 2)), std::invalid_argument);
}

TEST_CASE("exp_series: constants, exponential coefficients, group law") {
    CHECK(exp_series(TruncatedSeries::zero(3)) == TruncatedSeries::one(3));
    TruncatedSeries e = exp_series(TruncatedSeries::identity(3));
    CHECK(e == TruncatedSeries(std::vector<Rational>{Rational(1), Rational(1), rat(1, 2), rat(1, 6)}));
    TruncatedSeries em = exp_series(neg(TruncatedSeries::identity(3)));
    CHECK(mul(e, em) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(exp_series(TruncatedSeries::one(3)), std::invalid_argument);
}

TEST_CASE("lagrange_coefficient: identity, sign check, equivalence with explicit inverse") {
    TruncatedSeries x5 = TruncatedSeries::identity(5);
    CHECK(fdps::lagrange_coefficient(x5, x5, 1) == 1);
    CHECK(fdps::lagrange_coefficient(x5, x5, 2) == 0);
    CHECK(fdps::lagrange_coefficient(x5, x5, 5) == 0);

    TruncatedSeries g = mul_xpow(geometric(4), 1).truncated(5);
    CHECK(fdps::lagrange_coefficient(x5, g, 2) == -1);

    CHECK_THROWS_AS(fdps::lagrange_coefficient(x5, g, 0), std::invalid_argument);
    CHECK_THROWS_AS(fdps::lagrange_coefficient(x5, g, 6), std::invalid_argument);

    SUBCASE("random series, all coefficients to order 12") {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 5; ++trial) {
            TruncatedSeries f = random_series(rng, 12);
            TruncatedSeries gg = random_series(rng, 12, /*unit_lead=*/true);
            TruncatedSeries ref = compose(f, comp_inverse(gg));
            for (int n = 1; n <= 12; ++n) CHECK(fdps::lagrange_coefficient(f, gg, n) == ref[n]);
        }
    }
}

TEST_CASE("ring axioms on random rational series") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 8; ++trial) {
        TruncatedSeries a = random_series(rng, 16);
        TruncatedSeries b = random_series(rng, 16);
        TruncatedSeries c = random_series(rng, 16);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(sub(a, a).is_zero());
        CHECK(mul(a, TruncatedSeries::one(16)) == a);
    }
}

TEST_CASE("composition laws on random series") {
    std::mt19937 rng(24680);
    for (int trial = 0; trial < 4; ++trial) {
        TruncatedSeries f = random_series(rng, 14);
        TruncatedSeries g = random_series(rng, 14, /*unit_lead=*/true);
        TruncatedSeries h = random_series(rng, 14, /*unit_lead=*/true);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        TruncatedSeries gi = comp_inverse(g);
        CHECK(comp_inverse(gi) == g);
        CHECK(compose(g, gi) == TruncatedSeries::identity(14));
        CHECK(compose(gi, g) == TruncatedSeries::identity(14));
        // derivative chain rule, orders trimmed to match
        TruncatedSeries lhs = derivative(compose(f, g));
        TruncatedSeries rhs = mul(compose(derivative(f), g.truncated(13)), derivative(g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("power laws on random series with unit constant term") {
    std::mt19937 rng(1357);
    for (int trial = 0; trial < 4; ++trial) {
        TruncatedSeries u = random_series(rng, 10);
        std::vector<Rational> c(u.coeffs());
        c[0] = 1;
        TruncatedSeries f(std::move(c));
        Rational a = rat(3, 2), b = rat(-2, 3);
        CHECK(pow_rational(f, a + b) == mul(pow_rational(f, a), pow_rational(f, b)));
        CHECK(pow_rational(f, Rational(-1)) == reciprocal(f));
        CHECK(pow_rational(f, Rational(2)) == mul(f, f));
    }
}

TEST_CASE("x-power shifts") {
    TruncatedSeries f{1, 2, 3};
    TruncatedSeries shifted = mul_xpow(f, 2);
    CHECK(shifted.order() == 4);
    CHECK(shifted == TruncatedSeries{0, 0, 1, 2, 3});
    CHECK(div_xpow(shifted, 2) == f);
    CHECK_THROWS_AS(div_xpow(f, 1), std::invalid_argument);
}
