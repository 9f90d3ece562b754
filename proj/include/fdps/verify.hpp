#pragma once

#include <cstdint>
#include <iosfwd>

namespace fdps {

// Knobs for the randomized identity suite. Every instance draws fresh
// operands from its own logged seed, so any failure line can be replayed.
struct VerifyOptions {
    std::uint64_t seed = 20260813;
    int instances_per_property = 30;
};

struct VerifyResult {
    int checks_passed = 0;
    int checks_failed = 0;
    int randomized_instances = 0;

    bool ok() const { return checks_failed == 0; }
};

VerifyResult& operator+=(VerifyResult& a, const VerifyResult& b);

// Randomized algebraic identities of the derivation calculus: ring axioms,
// the product rule, the derivative transfer, chain-rule associativity,
// inversion as an involution, cancellation of g with its inverse, recovery of
// an outer expansion, and the beta shifts. Each property runs
// instances_per_property independent instances at orders 10-12 and prints one
// machine-readable PASS/FAIL line with the seed range.
VerifyResult verify_identities(std::ostream& out, const VerifyOptions& opt = {});

// Deterministic cross-checks of the three bundled applications: pinned
// expansion rows, series prefixes and recurrences, agreement of the
// generic-calculus and closed-form routes, and partial-sum accuracy.
VerifyResult verify_applications(std::ostream& out);

// Windowed remainder-order checks on the bundled applications plus a
// terminating positive control and a perturbed negative control.
VerifyResult verify_remainders(std::ostream& out);

VerifyResult verify_all(std::ostream& out, const VerifyOptions& opt = {});

}  // namespace fdps
