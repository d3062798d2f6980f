#pragma once

#include <string>
#include <vector>

#include "schubert/budget.hpp"

namespace schubert {

struct VerificationFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
    auto operator<=>(const VerificationFailure&) const = default;
};

struct VerificationReport {
    std::string suite;
    long long cases = 0;
    std::vector<VerificationFailure> failures;  // sorted canonically
    double wall_seconds = 0.0;
    unsigned seed = 0;
    std::string engine;

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    int max_weight = -1;  // -1 = suite default
    int max_m = -1;
    int max_n = -1;
    unsigned seed = 0;
    Budget budget;
};

// Theorem 1 over the bounded grid: rho(schur_multiply) against
// schubert_product, plus the Betti/duality/quaternionic checks.
VerificationReport verify_theorem(const VerifyOptions& opts = {});

// Two-route structure constants: character-evaluation oracle against the
// Pieri/Giambelli engine.
VerificationReport verify_oracle(const VerifyOptions& opts = {});

// Exterior algebra: form product identity, Eq-style two-route Chern forms,
// rectangle vanishing, type purity, linear independence, character cross-check.
VerificationReport verify_forms(const VerifyOptions& opts = {});

// Lambda-ring suite: Chern classes of the standard and symplectic standard
// characters, gamma collapse on lines, additivity, Whitney, the Schubert bridge.
VerificationReport verify_lambda(const VerifyOptions& opts = {});

// Young symmetrizer quasi-idempotency and the p=2 closed forms.
VerificationReport verify_symmetrizer(const VerifyOptions& opts = {});

std::vector<VerificationReport> verify_all(const VerifyOptions& opts = {});

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace schubert
