#include "fdps/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace fdps {

Json series_to_json(const TruncatedSeries& s) {
    Json arr = Json::array();
    for (int n = 0; n <= s.order(); ++n) arr.push_back(rational_to_string(s[n]));
    return arr;
}

TruncatedSeries series_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_string(v.get<std::string>()));
    return TruncatedSeries(c);
}

Json prefactor_to_json(const Prefactor& p) {
    Json j;
    j["exp_arg"] = rational_to_string(p.exp_arg);
    j["sqrt_two_pi_pow"] = p.sqrt_two_pi_pow;
    return j;
}

Prefactor prefactor_from_json(const Json& j) {
    return Prefactor(rational_from_string(j.at("exp_arg").get<std::string>()),
                     j.at("sqrt_two_pi_pow").get<int>());
}

namespace {

int shown_asy_terms(const SequenceTable& t, int asy_terms) {
    int stored = t.asy.order() + 1;
    return asy_terms < 0 ? stored : std::min(asy_terms, stored);
}

}  // namespace

Json table_to_json(const SequenceTable& t, int asy_terms) {
    int shown = shown_asy_terms(t, asy_terms);
    Json j;
    j["name"] = t.name;
    j["alpha"] = rational_to_string(t.alpha);
    j["beta"] = rational_to_string(t.beta);
    j["order"] = t.series.order();
    j["series"] = series_to_json(t.series);
    j["asy_prefactor"] = prefactor_to_json(t.asy_prefactor);
    j["asy_terms"] = shown;
    Json arr = Json::array();
    for (int k = 0; k < shown; ++k) arr.push_back(rational_to_string(t.asy[k]));
    j["asy"] = arr;
    j["provenance"] = t.provenance;
    return j;
}

SequenceTable table_from_json(const Json& j) {
    return SequenceTable{j.at("name").get<std::string>(),
                         rational_from_string(j.at("alpha").get<std::string>()),
                         rational_from_string(j.at("beta").get<std::string>()),
                         series_from_json(j.at("series")),
                         prefactor_from_json(j.at("asy_prefactor")),
                         series_from_json(j.at("asy")),
                         j.at("provenance").get<std::string>()};
}

Json fit_report_to_json(const FitReport& r) {
    Json j;
    j["estimates"] = r.estimates;
    j["errors"] = r.errors;
    j["converged"] = r.converged;
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["extrap_order"] = r.extrap_order;
    j["all_converged"] = r.all_converged();
    return j;
}

Json remainder_to_json(const RemainderCheck& rc) {
    Json j;
    j["pass"] = rc.pass;
    j["window1_max"] = rc.window1_max;
    j["window2_max"] = rc.window2_max;
    j["growth"] = rc.growth;
    j["n_lo"] = rc.n_lo;
    j["n_mid"] = rc.n_mid;
    j["n_hi"] = rc.n_hi;
    j["arithmetic"] = rc.arithmetic;
    return j;
}

std::string table_to_csv(const SequenceTable& t, int asy_terms) {
    int shown = shown_asy_terms(t, asy_terms);
    std::ostringstream out;
    out << "n,series,asy\n";
    int rows = std::max(t.series.order(), shown - 1);
    for (int n = 0; n <= rows; ++n) {
        out << n << ',';
        if (n <= t.series.order()) out << rational_to_string(t.series[n]);
        out << ',';
        if (n < shown) out << rational_to_string(t.asy[n]);
        out << '\n';
    }
    return out.str();
}

namespace {

std::string prefactor_pretty(const Prefactor& p) {
    std::ostringstream out;
    if (sgn(p.exp_arg) == 0 && p.sqrt_two_pi_pow == 0) return "1";
    bool first = true;
    if (sgn(p.exp_arg) != 0) {
        out << "e^(" << rational_to_string(p.exp_arg) << ")";
        first = false;
    }
    if (p.sqrt_two_pi_pow != 0) {
        if (!first) out << " * ";
        out << "(2*pi)^(" << p.sqrt_two_pi_pow << "/2)";
    }
    return out.str();
}

}  // namespace

std::string table_to_pretty(const SequenceTable& t, int asy_terms) {
    int shown = shown_asy_terms(t, asy_terms);
    std::ostringstream out;
    out << t.name << "  (alpha = " << rational_to_string(t.alpha)
        << ", beta = " << rational_to_string(t.beta) << ", route: " << t.provenance << ")\n";
    out << "series (order " << t.series.order() << "):\n";
    for (int n = 0; n <= t.series.order(); ++n)
        out << "  [" << n << "] " << rational_to_string(t.series[n]) << '\n';
    if (shown > 0) {
        out << "asymptotic expansion, prefactor " << prefactor_pretty(t.asy_prefactor)
            << ":\n";
        for (int k = 0; k < shown; ++k)
            out << "  c[" << k << "] " << rational_to_string(t.asy[k]) << '\n';
    }
    return out.str();
}

}  // namespace fdps
