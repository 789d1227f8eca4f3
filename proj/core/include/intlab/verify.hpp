#ifndef INTLAB_VERIFY_HPP
#define INTLAB_VERIFY_HPP

#include "intlab/eval.hpp"
#include "intlab/lambda.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace intlab {

struct VerifyOptions {
    unsigned depth = 4;
    std::size_t expr_count = 200;
    std::uint64_t seed = 1;
    int jobs = 1;
    /// Asserts the model's finite frames are reflexive and includes the
    /// T-axiom subchecks on them.
    bool reflexive = false;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> violations;  // sorted before reporting
    bool ok() const { return violations.empty(); }
};

/// Seeded, type-directed generation of well-typed expressions over the
/// model's signature (deduplicated by printed form, deterministic per seed).
std::vector<ExprPtr> generate_expressions(const IntensionalModel& model,
                                          const VerifyOptions& options);

/// Homomorphism suite: check_hom over a generated corpus, sharded over
/// options.jobs workers. When stale_cache is given, the vector route reads
/// constants through it instead of the model (the fault-injection hook: a
/// cache built before a model edit makes the edit visible as violations).
SuiteResult run_hom_suite(const IntensionalModel& model, const VerifyOptions& options,
                          const EmbedCache* stale_cache = nullptr);

/// Duality suite: box = not dia not on the model's finite frames (all
/// propositions), on seeded random four-world frames, and at sampled times on
/// a continuous fixture with Cantor-set exceptions.
SuiteResult run_duality_suite(const IntensionalModel& model, const VerifyOptions& options);

/// Axiom property suite: K and monotonicity on random frames, coincidence of
/// box and dia on out-degree-one frames, and T on reflexive frames.
SuiteResult run_axioms_suite(const IntensionalModel& model, const VerifyOptions& options);

/// which: "hom", "duality", "axioms", or "all".
std::vector<SuiteResult> run_suites(const IntensionalModel& model, const std::string& which,
                                    const VerifyOptions& options);

}  // namespace intlab

#endif  // INTLAB_VERIFY_HPP
