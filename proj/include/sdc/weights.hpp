#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/codes.hpp"

namespace sdc {

/// Weight-enumerator families of self-dual Type I [64,32,12] and [68,34,12] codes:
///   W64_1: A12 = 1312 + 16b, A14 = 22016 - 64b            14 <= b <= 284
///   W64_2: A12 = 1312 + 16b, A14 = 23040 - 64b             0 <= b <= 277
///   W68_1: A12 = 442 + 4b,   A14 = 10864 - 8b            104 <= b <= 1358
///   W68_2: A12 = 442 + 4b,   A14 = 14960 - 8b - 256g     0 <= g <= 11, 14g <= b <= 1870 - 32g
enum class Family : std::uint8_t { W64_1, W64_2, W68_1, W68_2 };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct EnumeratorClass {
    Family family = Family::W64_2;
    std::int64_t beta = 0;
    std::optional<std::int64_t> gamma;
    bool in_published_range = false;

    friend bool operator==(const EnumeratorClass&, const EnumeratorClass&) = default;
};

class ClassificationError : public std::runtime_error {
public:
    ClassificationError(const std::string& what, std::uint64_t a12, std::uint64_t a14)
        : std::runtime_error(what), a12_(a12), a14_(a14) {}
    std::uint64_t a12() const { return a12_; }
    std::uint64_t a14() const { return a14_; }

private:
    std::uint64_t a12_, a14_;
};

struct WeightReport {
    std::size_t length = 0;
    std::size_t dimension = 0;
    /// A_0 .. A_t, exact. t = length for a complete distribution.
    std::vector<std::uint64_t> distribution;
    std::size_t min_distance = 0;
    bool type_two = false;
    std::optional<EnumeratorClass> classification;

    std::size_t known_through() const { return distribution.empty() ? 0 : distribution.size() - 1; }
    bool complete() const { return !distribution.empty() && known_through() == length; }
    /// Throws std::out_of_range beyond known_through().
    std::uint64_t count(std::size_t weight) const;
};

/// Largest dimension accepted by the full-enumeration pass.
inline constexpr std::size_t kFullPassMaxDimension = 40;

/// Complete distribution of a binary code by a Gray-code walk over all 2^k
/// messages. Refuses (ResourceRefusal) when k > 40.
WeightReport weight_distribution(const LinearCode& code, bool parallel = true);

/// Exact A_0..A_through of a binary or ternary code from disjoint information
/// sets, plus the exact minimum distance.
WeightReport low_weight_report(const LinearCode& code, std::size_t through, bool parallel = true);

struct TernaryDistance {
    std::size_t distance = 0;
    std::optional<std::uint64_t> min_weight_words;
};

/// Exact minimum distance of a ternary code by information-set enumeration;
/// optionally the number of minimum-weight codewords.
TernaryDistance min_distance_ternary(const LinearCode& code, bool count_min_weight = false, bool parallel = true);

/// Full 3^k enumeration for ternary codes with k <= 20.
WeightReport ternary_weight_distribution(const LinearCode& code, bool parallel = true);

EnumeratorClass classify_counts(std::size_t n, std::uint64_t a12, std::uint64_t a14);
/// Requires (n, k) in {(64, 32), (68, 34)} and counts through weight 14.
EnumeratorClass classify(const WeightReport& report);

/// Binary self-dual extremality. Throws DomainError if d exceeds the bound.
bool is_extremal(std::size_t n, std::size_t d, bool type_two);
std::size_t extremal_bound(std::size_t n, bool type_two);
/// Ternary self-dual: d == 3 floor(n/12) + 3.
bool is_extremal_ternary(std::size_t n, std::size_t d);

// --- known parameters --------------------------------------------------------

enum class Novelty : std::uint8_t { Known, New, OutOfFamily, AmbiguousKnown };
std::string_view novelty_name(Novelty v);

struct KnownEntry {
    Family family = Family::W64_2;
    std::optional<std::int64_t> gamma;
    std::int64_t beta = 0;
    bool ambiguous = false;   ///< transcribed from an unclear passage of the source list
    std::string added;        ///< non-empty: later addition, value is its provenance tag

    friend bool operator==(const KnownEntry&, const KnownEntry&) = default;
};

/// Published (family, gamma, beta) tuples. Text format, one record per line:
///   family gamma beta [ambiguous] [added=<tag>]
/// with `-` for an absent gamma and `#` starting a comment.
class KnownParameterTable {
public:
    static KnownParameterTable parse(std::istream& in);
    static KnownParameterTable load(const std::string& path);

    const std::vector<KnownEntry>& entries() const { return entries_; }
    /// Entry matching the class, additions included only if asked.
    const KnownEntry* find(const EnumeratorClass& cls, bool include_additions) const;
    std::size_t count(Family family, bool include_additions) const;

private:
    std::vector<KnownEntry> entries_;
};

Novelty novelty_check(const EnumeratorClass& cls, const KnownParameterTable& table, bool include_additions = false);

}  // namespace sdc
