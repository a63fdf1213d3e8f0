#pragma once

// Text formats: line-oriented key=value spec and job files, and one-line JSON
// hit records.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdc/constructions.hpp"
#include "sdc/search.hpp"

namespace sdc {

/// A code specification:
///
///   # comment
///   label=D6
///   ring=F2U
///   construction=I            (GS, I, II or explicit)
///   n=4
///   lambda=3
///   rA=313u  rB=u303  rC=u310  rD=u013   (one key per line)
///   extension=1 13u11uu3...   (c then X; repeatable)
///   row=...                   (explicit generator rows; repeatable)
///   expect.d=12               (expected values, free-form)
struct SpecFile {
    std::string label;
    RingKind ring = RingKind::F2;
    std::optional<Construction> construction;  ///< nullopt: explicit generator
    std::size_t n = 0;
    RingElement lambda{RingKind::F2, 1};
    std::array<RingVector, 4> rows;
    std::vector<ExtensionCandidate> extensions;
    std::vector<RingVector> generator;
    std::vector<std::pair<std::string, std::string>> expect;

    CirculantQuad quad() const;
    /// The (unextended) base code; explicit rows or the construction output (conditions checked).
    LinearCode base_code() const;
    std::optional<std::string> expected(const std::string& key) const;

    /// Errors are ParseError with "source:line:column" in the message.
    static SpecFile parse(std::istream& in, const std::string& source = "<spec>");
    static SpecFile parse(const std::string& text, const std::string& source = "<spec>");
    static SpecFile load(const std::string& path);
    std::string format() const;

    friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Job file, same key=value syntax:
///   construction=II ring=F2U n=4 lambda=3 (comma separated list allowed)
///   strategy=cd_fixed seed=1 budget=65536 min_d=12
///   rC=... rD=...  (fixed rows)   target=W64_2 beta=8   max_exhaustive=...  max_hits=...
SearchJob parse_job(std::istream& in, const std::string& source = "<job>");
SearchJob load_job(const std::string& path);
std::optional<TargetFilter> parse_target(const std::string& text);

/// One search or construction result, serialised as a single JSON line.
struct HitRecord {
    std::string label;
    std::string ring;
    std::string construction;
    std::size_t n = 0;
    std::string lambda;
    std::array<std::string, 4> rows;
    std::optional<std::string> extension_c;
    std::optional<std::string> extension_x;
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::size_t d = 0;
    std::optional<std::uint64_t> a12;
    std::optional<std::uint64_t> a14;
    std::optional<std::uint64_t> a16;
    std::optional<std::string> family;
    std::optional<std::int64_t> beta;
    std::optional<std::int64_t> gamma;
    std::optional<std::string> novelty;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    std::uint64_t duplicates = 0;

    static HitRecord from_hit(const SearchHit& hit, const std::string& label = {});
    std::string to_json() const;
    static HitRecord from_json(const std::string& line);

    friend bool operator==(const HitRecord&, const HitRecord&) = default;
};

std::string summary_json(const SearchSummary& s);

}  // namespace sdc
