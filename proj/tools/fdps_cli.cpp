#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fdps/applications.hpp"
#include "fdps/numeric.hpp"
#include "fdps/oeis.hpp"
#include "fdps/serialize.hpp"
#include "fdps/verify.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Orders above this need --force: table construction is cubic-ish in the
// order and the coefficients grow factorially, so a typo like --order 5000
// would otherwise sit silently for a very long time.
constexpr int kOrderGuard = 512;

fdps::SequenceTable build_table(const std::string& kind, int order, int asy_terms) {
    if (kind == "chords") return fdps::connected_chords(order, asy_terms);
    if (kind == "monolithic") return fdps::monolithic_chords(order, asy_terms);
    return fdps::simple_permutations(order, asy_terms);
}

int run_table(const std::string& kind, int order, int asy_order,
              const std::string& format, bool force) {
    if (order < 1 || asy_order < 0) {
        std::cerr << "error: --order must be >= 1 and --asy-order >= 0\n";
        return kExitUsage;
    }
    if ((order > kOrderGuard || asy_order > kOrderGuard) && !force) {
        std::cerr << "error: order " << std::max(order, asy_order) << " exceeds "
                  << kOrderGuard << "; pass --force to compute it anyway\n";
        return kExitUsage;
    }
    fdps::SequenceTable t = build_table(kind, order, std::max(asy_order, 1));
    if (format == "json")
        std::cout << fdps::table_to_json(t, asy_order).dump(2) << "\n";
    else if (format == "csv")
        std::cout << fdps::table_to_csv(t, asy_order);
    else
        std::cout << fdps::table_to_pretty(t, asy_order);
    return 0;
}

int run_fit(const std::string& input, const std::string& alpha_str,
            const std::string& beta_str, int terms, int extrap_order, long offset) {
    std::vector<fdps::SequenceEntry> entries =
        input == "-" ? fdps::parse_sequence_stream(std::cin)
                     : fdps::parse_sequence_file(input);
    std::vector<fdps::Rational> seq = fdps::sequence_to_coefficients(entries, offset);
    fdps::Rational alpha = fdps::rational_from_string(alpha_str);
    fdps::Rational beta = fdps::rational_from_string(beta_str);
    fdps::FitReport report =
        fdps::fit_asymptotics(seq, alpha, beta, terms, extrap_order);
    std::cout << fdps::fit_report_to_json(report).dump(2) << "\n";
    return report.all_converged() ? 0 : kExitVerificationFailure;
}

int run_verify(const std::string& suite, std::uint64_t seed, int instances) {
    fdps::VerifyOptions opt;
    opt.seed = seed;
    opt.instances_per_property = instances;
    fdps::VerifyResult r;
    if (suite == "identities")
        r = fdps::verify_identities(std::cout, opt);
    else if (suite == "applications")
        r = fdps::verify_applications(std::cout);
    else if (suite == "remainders")
        r = fdps::verify_remainders(std::cout);
    else
        r = fdps::verify_all(std::cout, opt);
    return r.ok() ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for truncated power series with factorially "
        "divergent coefficients"};
    app.set_version_flag("--version", "fdps 1.0.0");
    app.require_subcommand(1);

    auto* table = app.add_subcommand(
        "table", "Print a bundled counting sequence with its asymptotic expansion");
    std::string kind;
    int order = 16;
    int asy_order = 10;
    std::string format = "pretty";
    bool force = false;
    table->add_option("kind", kind, "which sequence to build")
        ->required()
        ->check(CLI::IsMember({"chords", "monolithic", "simple-perms"}));
    table->add_option("--order", order, "series truncation order")
        ->capture_default_str();
    table
        ->add_option("--asy-order", asy_order,
                     "number of asymptotic-expansion coefficients (0: series only)")
        ->capture_default_str();
    table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    table->add_flag("--force", force, "allow orders above the safety guard");

    auto* fit = app.add_subcommand(
        "fit", "Fit leading asymptotic coefficients to a coefficient sequence");
    std::string input = "-";
    std::string alpha_str;
    std::string beta_str;
    int terms = 1;
    int extrap_order = 4;
    long offset = 0;
    fit->add_option("input", input, "sequence file ('-': read standard input)")
        ->capture_default_str();
    fit->add_option("--alpha", alpha_str, "growth base, as p or p/q")->required();
    fit->add_option("--beta", beta_str, "gamma shift, as p or p/q")->required();
    fit->add_option("--terms", terms, "number of coefficients to fit")->required();
    fit->add_option("--extrap-order", extrap_order, "Richardson extrapolation order")
        ->capture_default_str();
    fit->add_option("--offset", offset,
                    "exponent of the first entry's term = index + offset")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run self-check suites");
    std::string suite;
    std::uint64_t seed = fdps::VerifyOptions{}.seed;
    int instances = fdps::VerifyOptions{}.instances_per_property;
    verify->add_option("suite", suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"identities", "applications", "remainders", "all"}));
    verify->add_option("--seed", seed, "master seed for the randomized instances")
        ->capture_default_str();
    verify
        ->add_option("--instances", instances,
                     "randomized instances per algebraic property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) return run_table(kind, order, asy_order, format, force);
        if (fit->parsed())
            return run_fit(input, alpha_str, beta_str, terms, extrap_order, offset);
        return run_verify(suite, seed, instances);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
