#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "sdc/weights.hpp"

namespace sdc {

enum class Strategy : std::uint8_t { Exhaustive, Random, CdFixed };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// Optional filter on the classification of emitted hits.
struct TargetFilter {
    Family family = Family::W64_2;
    std::optional<std::int64_t> beta;
    std::optional<std::int64_t> gamma;

    bool matches(const std::optional<EnumeratorClass>& cls) const;
};

struct SearchJob {
    Construction construction = Construction::I;
    RingKind ring = RingKind::F2;
    std::size_t n = 0;
    std::vector<RingElement> lambdas;
    Strategy strategy = Strategy::Random;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::size_t min_distance = 0;
    std::optional<TargetFilter> target;
    /// Rows held fixed (A, B, C, D). cd_fixed requires C and D.
    std::array<std::optional<RingVector>, 4> fixed;
    /// Exhaustive spaces larger than this are refused.
    std::uint64_t max_exhaustive = std::uint64_t{1} << 32;
    /// Largest weight counted per candidate (fingerprint uses A12, A14, A16).
    std::size_t count_through = 16;
    /// Run candidates on the OpenMP pool; false gives the serial reference path.
    bool parallel = true;
    /// Stop generating random candidates once this many hits were found (0 = no cap).
    std::uint64_t max_hits = 0;
    /// Row C printed with a missing symbol; see resolve_partial_c.
    std::optional<RingVector> partial_c;

    /// Throws DomainError/ResourceRefusal on an invalid job.
    void validate() const;
    /// Number of candidates the job will visit (exhaustive: whole space; random: budget).
    std::uint64_t candidate_count() const;
    /// Candidate `index` of the job's enumeration; deterministic in (seed, index).
    CirculantQuad candidate(std::uint64_t index) const;
};

/// Every length-n vector obtained by inserting one symbol into `partial`, deduplicated, sorted.
std::vector<RingVector> insertion_completions(const RingVector& partial, std::size_t n);

/// One job per completion of job.partial_c (fixed as row C) with CD^T = DC^T for every lambda.
/// A job without partial_c is returned unchanged.
std::vector<SearchJob> resolve_partial_c(const SearchJob& job);

struct ExtensionCandidate {
    RingElement c;
    RingVector x;
    friend bool operator==(const ExtensionCandidate&, const ExtensionCandidate&) = default;
};

struct SearchHit {
    std::optional<CirculantQuad> quad;
    Construction construction = Construction::I;
    std::optional<ExtensionCandidate> extension;
    WeightReport report;
    std::optional<EnumeratorClass> classification;
    std::optional<Novelty> novelty;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    /// Later candidates with the same fingerprint.
    std::uint64_t duplicates = 0;

    /// (d, A12, A14, A16); -1 for counts outside the report.
    std::array<std::int64_t, 4> fingerprint() const;
};

struct SearchSummary {
    std::uint64_t candidates = 0;
    std::uint64_t conditions_passed = 0;
    std::uint64_t self_dual_failures = 0;
    std::uint64_t below_threshold = 0;
    std::uint64_t filtered = 0;
    std::uint64_t duplicates = 0;
    std::uint64_t hits = 0;
    double seconds = 0.0;
};

struct SearchResult {
    std::vector<SearchHit> hits;  ///< deduplicated, ascending candidate index
    SearchSummary summary;
};

struct NoveltyOptions {
    const KnownParameterTable* table = nullptr;
    bool include_additions = false;
};

SearchResult search_constructions(const SearchJob& job, const NoveltyOptions& novelty = {});

/// Re-runs candidate `index` of the job and returns it as a hit if it passes
/// every filter (conditions, self-duality, threshold), without dedup.
std::optional<SearchHit> replay_candidate(const SearchJob& job, std::uint64_t index, const NoveltyOptions& novelty = {});

enum class Sampler : std::uint8_t { ExhaustiveSmall, Random, List };

struct ExtensionJob {
    LinearCode base;
    std::vector<RingElement> c_candidates;
    Sampler sampler = Sampler::Random;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::size_t min_distance = 0;
    std::optional<TargetFilter> target;
    /// Candidates for Sampler::List, visited in order.
    std::vector<ExtensionCandidate> list;
    std::uint64_t max_exhaustive = std::uint64_t{1} << 24;
    std::size_t count_through = 16;
    bool parallel = true;
};

SearchResult search_extensions(const ExtensionJob& job, const NoveltyOptions& novelty = {});

}  // namespace sdc
