#pragma once

// Word-packed codes for the enumeration kernels. Binary vectors use one bit
// plane; ternary vectors are bit-sliced into a "+1" plane and a "-1" plane.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdc/codes.hpp"

namespace sdc {

enum class Field : std::uint8_t { F2, F3 };

/// Up to 4 words per vector (length <= 256).
inline constexpr std::size_t kMaxPackedWords = 4;

struct PackedCode {
    Field field = Field::F2;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> plus;   ///< k * words; bit set where entry == 1
    std::vector<std::uint64_t> minus;  ///< k * words; bit set where entry == 2 (F3 only)

    /// Throws DomainError for rings other than F2/F3 or n > 256.
    static PackedCode from(const LinearCode& code);
};

/// Disjoint information sets and, for each, a generator that is the identity
/// on those positions.
struct InfoSetPlan {
    std::vector<PackedCode> generators;
    std::vector<std::vector<std::uint64_t>> masks;  ///< one mask of `words` words per set
    std::vector<std::vector<std::size_t>> positions;

    std::size_t sets() const { return generators.size(); }
};

/// Greedy disjoint information sets: each set takes the first pivot columns
/// not used by earlier sets; stops at the first column subset of rank < k or
/// after `max_sets`. Throws UnsupportedShape if the generator is rank deficient.
InfoSetPlan make_info_sets(const LinearCode& code, std::size_t max_sets = 64);

}  // namespace sdc
