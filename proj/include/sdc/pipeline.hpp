#pragma once

// End-to-end evaluation of a spec file: build, verify, weigh, classify.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/io.hpp"

namespace sdc {

struct EvaluateOptions {
    /// Largest binary weight counted by the information-set engine.
    std::size_t through = 16;
    /// Binary codes: full 2^k pass instead of information sets.
    bool full = false;
    bool parallel = true;
    /// Ternary codes: also count minimum-weight words.
    bool count_min_weight = true;
    const KnownParameterTable* known = nullptr;
    bool include_additions = false;
};

struct SpecResult {
    std::string label;
    ConditionReport conditions;
    /// The ring code and its binary image (F2U) are both self-dual.
    bool self_dual = false;
    std::optional<ExtensionCandidate> extension;
    WeightReport report;
    std::optional<std::uint64_t> min_weight_words;
    std::optional<Novelty> novelty;

    bool built() const { return conditions.ok(); }
};

/// Code whose weights are reported: the Gray image for F2U, the code itself otherwise.
LinearCode reported_code(const LinearCode& code);

/// Self-duality up to a column permutation (the code need not be in standard form).
bool self_dual_any_form(const LinearCode& code);

/// One result for the base code, or one per extension line when the spec has any.
/// Failed conditions are reported, not thrown.
std::vector<SpecResult> evaluate_spec(const SpecFile& spec, const EvaluateOptions& opt = {});

/// "key: expected X, got Y" for each expect.* entry that does not match.
std::vector<std::string> compare_expectations(const SpecFile& spec, const SpecResult& result);

HitRecord to_record(const SpecFile& spec, const SpecResult& result);

}  // namespace sdc
