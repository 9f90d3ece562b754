#include "fdps/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdps {

Rational rational_from_string(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
    std::string t = s.substr(b, e - b + 1);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), t.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + t + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + t + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

bool compute_integral(const std::vector<Rational>& c) {
    for (const auto& v : c)
        if (v.get_den() != 1) return false;
    return true;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    require(!c_.empty(), "series needs at least the constant coefficient");
    integral_ = compute_integral(c_);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> ints) {
    require(ints.size() > 0, "series needs at least the constant coefficient");
    c_.reserve(ints.size());
    for (long v : ints) c_.emplace_back(v);
    integral_ = true;
}

TruncatedSeries TruncatedSeries::zero(int order) {
    require(order >= 0, "order must be nonnegative");
    return TruncatedSeries(std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(int order) { return constant(Rational(1), order); }

TruncatedSeries TruncatedSeries::identity(int order) {
    require(order >= 1, "the series x needs order >= 1");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[1] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::constant(const Rational& v, int order) {
    require(order >= 0, "order must be nonnegative");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[0] = v;
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    require(new_order >= 0 && new_order <= order(), "truncation order out of range");
    return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries neg(const TruncatedSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& v : c) v = -v;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const Rational& s, const TruncatedSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& v : c) v *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    if (a.all_integer() && b.all_integer()) {
        // Integer fast path: mpz convolution with fused add-multiply.
        std::vector<Integer> az(static_cast<size_t>(n) + 1), bz(static_cast<size_t>(n) + 1),
            out(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            az[static_cast<size_t>(i)] = a[i].get_num();
            bz[static_cast<size_t>(i)] = b[i].get_num();
        }
        for (int i = 0; i <= n; ++i) {
            if (az[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j + i <= n; ++j) {
                if (bz[static_cast<size_t>(j)] == 0) continue;
                mpz_addmul(out[static_cast<size_t>(i + j)].get_mpz_t(),
                           az[static_cast<size_t>(i)].get_mpz_t(),
                           bz[static_cast<size_t>(j)].get_mpz_t());
            }
        }
        std::vector<Rational> c;
        c.reserve(out.size());
        for (auto& v : out) c.emplace_back(std::move(v));
        return TruncatedSeries(std::move(c));
    }
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
    require(f.order() >= 1, "derivative needs order >= 1");
    std::vector<Rational> c(static_cast<size_t>(f.order()));
    for (int i = 1; i <= f.order(); ++i) c[static_cast<size_t>(i - 1)] = Rational(i) * f[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
    require(f[0] != 0, "reciprocal needs a nonzero constant term");
    const int n = f.order();
    if (f.all_integer() && (f[0] == 1 || f[0] == -1)) {
        // Unit constant term keeps the inverse integral.
        const bool negate = f[0] == -1;
        std::vector<Integer> fz(static_cast<size_t>(n) + 1), g(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            fz[static_cast<size_t>(i)] = negate ? Integer(-f[i].get_num()) : f[i].get_num();
        g[0] = 1;
        for (int i = 1; i <= n; ++i) {
            Integer s = 0;
            for (int k = 1; k <= i; ++k)
                mpz_addmul(s.get_mpz_t(), fz[static_cast<size_t>(k)].get_mpz_t(),
                           g[static_cast<size_t>(i - k)].get_mpz_t());
            g[static_cast<size_t>(i)] = -s;
        }
        std::vector<Rational> c;
        c.reserve(g.size());
        for (auto& v : g) c.emplace_back(negate ? Integer(-v) : std::move(v));
        return TruncatedSeries(std::move(c));
    }
    std::vector<Rational> g(static_cast<size_t>(n) + 1);
    const Rational inv0 = Rational(1) / f[0];
    g[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (int k = 1; k <= i; ++k) s += f[k] * g[static_cast<size_t>(i - k)];
        g[static_cast<size_t>(i)] = -s * inv0;
    }
    return TruncatedSeries(std::move(g));
}

namespace {

TruncatedSeries compose_horner(const TruncatedSeries& f, const TruncatedSeries& g, int n) {
    TruncatedSeries res = TruncatedSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        res = mul(res, g);
        std::vector<Rational> c(res.coeffs());
        c[0] += f[k];
        res = TruncatedSeries(std::move(c));
    }
    return res;
}

// Baby-step/giant-step composition: ~2*sqrt(n) series multiplications instead
// of n for plain Horner. Splits f into blocks of size m and evaluates
// f(g) = sum_i B_i(g) * (g^m)^i with precomputed powers g^0..g^m.
TruncatedSeries compose_block(const TruncatedSeries& f, const TruncatedSeries& g, int n) {
    const int m = std::max(1, static_cast<int>(std::lround(std::sqrt(double(n) + 1.0))));
    const int nblocks = (n + m) / m;  // ceil((n+1)/m)
    std::vector<TruncatedSeries> pw;
    pw.reserve(static_cast<size_t>(m) + 1);
    pw.push_back(TruncatedSeries::one(n));
    pw.push_back(g);
    for (int i = 2; i <= m; ++i) pw.push_back(mul(pw.back(), g));

    auto block = [&](int bi) {
        std::vector<Rational> acc(static_cast<size_t>(n) + 1, Rational(0));
        for (int j = 0; j < m; ++j) {
            const int idx = bi * m + j;
            if (idx > n) break;
            const Rational& fc = f[idx];
            if (fc == 0) continue;
            const TruncatedSeries& p = pw[static_cast<size_t>(j)];
            for (int t = 0; t <= n; ++t) {
                if (p[t] == 0) continue;
                acc[static_cast<size_t>(t)] += fc * p[t];
            }
        }
        return TruncatedSeries(std::move(acc));
    };

    const TruncatedSeries& giant = pw[static_cast<size_t>(m)];
    TruncatedSeries res = block(nblocks - 1);
    for (int bi = nblocks - 2; bi >= 0; --bi) res = add(mul(res, giant), block(bi));
    return res;
}

}  // namespace

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    require(g[0] == 0, "composition needs g with zero constant term");
    const int n = std::min(f.order(), g.order());
    const TruncatedSeries ft = f.order() == n ? f : f.truncated(n);
    const TruncatedSeries gt = g.order() == n ? g : g.truncated(n);
    if (n <= 40) return compose_horner(ft, gt, n);
    return compose_block(ft, gt, n);
}

TruncatedSeries comp_inverse(const TruncatedSeries& g) {
    require(g[0] == 0 && g[1] == 1, "compositional inverse needs g_0 = 0, g_1 = 1");
    const int n = g.order();
    auto padded = [](const TruncatedSeries& s, int ord) {
        std::vector<Rational> c(s.coeffs());
        c.resize(static_cast<size_t>(ord) + 1, Rational(0));
        return TruncatedSeries(std::move(c));
    };
    // Newton iteration h <- h - (g(h) - x)/(g'(h)); correct orders double per step.
    std::vector<Rational> hc{Rational(0), Rational(1)};
    int cur = 1;
    while (cur < n) {
        const int nxt = std::min(2 * cur, n);
        hc.resize(static_cast<size_t>(nxt) + 1, Rational(0));
        TruncatedSeries h(hc);
        const TruncatedSeries gt = g.truncated(nxt);
        TruncatedSeries e = compose(gt, h);
        {
            std::vector<Rational> ec(e.coeffs());
            ec[1] -= 1;
            e = TruncatedSeries(std::move(ec));
        }
        // e vanishes through order cur, so the top coefficients of 1/g'(h)
        // never reach orders <= nxt of the quotient; zero-padding is exact.
        const TruncatedSeries d = compose(derivative(g.truncated(std::min(nxt + 1, n))), h);
        const TruncatedSeries corr = mul(e, padded(reciprocal(d), nxt));
        h = sub(h, corr);
        hc = h.coeffs();
        cur = nxt;
    }
    return TruncatedSeries(std::move(hc));
}

TruncatedSeries pow_rational(const TruncatedSeries& f, const Rational& r) {
    require(f[0] == 1, "rational power needs constant term 1");
    const int n = f.order();
    // h = (1+u)^r from the first-order relation (1+u) h' = r u' h.
    std::vector<Rational> h(static_cast<size_t>(n) + 1);
    h[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int j = 1; j <= m; ++j) {
            if (f[j] == 0) continue;
            s += (r * j - (m - j)) * f[j] * h[static_cast<size_t>(m - j)];
        }
        h[static_cast<size_t>(m)] = s / m;
    }
    return TruncatedSeries(std::move(h));
}

TruncatedSeries exp_series(const TruncatedSeries& f) {
    require(f[0] == 0, "exp needs zero constant term");
    const int n = f.order();
    // g = exp(f) from g' = f' g.
    std::vector<Rational> g(static_cast<size_t>(n) + 1);
    g[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int k = 1; k <= m; ++k) {
            if (f[k] == 0) continue;
            s += Rational(k) * f[k] * g[static_cast<size_t>(m - k)];
        }
        g[static_cast<size_t>(m)] = s / m;
    }
    return TruncatedSeries(std::move(g));
}

Rational lagrange_coefficient(const TruncatedSeries& f, const TruncatedSeries& g, int n) {
    require(g[0] == 0 && g[1] == 1, "Lagrange coefficient needs g_0 = 0, g_1 = 1");
    require(n >= 1, "Lagrange coefficient needs n >= 1; the constant term is f_0");
    require(n <= std::min(f.order(), g.order()), "n exceeds available order");
    const TruncatedSeries p = reciprocal(div_xpow(g, 1).truncated(std::max(0, n - 1)));  // x/g
    const TruncatedSeries pn = pow_rational(p, Rational(n));
    const TruncatedSeries fp = derivative(f);
    Rational s(0);
    for (int i = 0; i <= n - 1 && i <= fp.order(); ++i) {
        if (fp[i] == 0) continue;
        s += fp[i] * pn[n - 1 - i];
    }
    return s / n;
}

TruncatedSeries mul_xpow(const TruncatedSeries& f, int m) {
    require(m >= 0, "shift must be nonnegative");
    std::vector<Rational> c(static_cast<size_t>(f.order() + m) + 1, Rational(0));
    for (int i = 0; i <= f.order(); ++i) c[static_cast<size_t>(i + m)] = f[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div_xpow(const TruncatedSeries& f, int m) {
    require(m >= 0 && m <= f.order(), "shift out of range");
    for (int i = 0; i < m; ++i)
        require(f[i] == 0, "division by x^m needs the first m coefficients to vanish");
    return TruncatedSeries(std::vector<Rational>(f.coeffs().begin() + m, f.coeffs().end()));
}

}  // namespace fdps
