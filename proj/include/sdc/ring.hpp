#pragma once

// Arithmetic over the three supported alphabets: F2, F3 and F2+uF2.
//
// Elements are small integer codes. For F2+uF2 the code of a+bu is a | (b << 1),
// so the printed symbols 0, 1, u, 3 (3 = 1+u) have codes 0, 1, 2, 3 and ring
// addition is XOR of codes.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

enum class RingKind : std::uint8_t { F2, F3, F2U };

/// Operands from different rings, non-units where a unit is required, shape mismatches.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed symbol text. `position` is the offending character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

std::string_view ring_name(RingKind kind);
RingKind parse_ring(std::string_view name);

/// Lookup-table arithmetic on element codes of one ring.
class Ring {
public:
    constexpr Ring() = default;
    constexpr explicit Ring(RingKind kind) : kind_(kind) {}

    constexpr RingKind kind() const { return kind_; }
    constexpr int size() const { return kind_ == RingKind::F2 ? 2 : kind_ == RingKind::F3 ? 3 : 4; }
    constexpr bool characteristic_two() const { return kind_ != RingKind::F3; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return kAdd[index()][a][b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return kMul[index()][a][b]; }
    std::uint8_t neg(std::uint8_t a) const { return kNeg[index()][a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }

    bool is_unit(std::uint8_t a) const;
    /// Throws DomainError for non-units.
    std::uint8_t inverse(std::uint8_t a) const;
    bool valid(std::uint8_t a) const { return a < size(); }

    char symbol(std::uint8_t a) const;
    /// Returns -1 when `c` is not a symbol of this ring.
    int code_of(char c) const;

    /// All element codes of the ring, 0 first.
    std::vector<std::uint8_t> elements() const;
    std::vector<std::uint8_t> units() const;

    friend constexpr bool operator==(Ring, Ring) = default;

private:
    constexpr int index() const { return static_cast<int>(kind_); }

    static const std::uint8_t kAdd[3][4][4];
    static const std::uint8_t kMul[3][4][4];
    static const std::uint8_t kNeg[3][4];

    RingKind kind_ = RingKind::F2;
};

struct RingElement {
    RingKind ring = RingKind::F2;
    std::uint8_t value = 0;

    static RingElement parse(std::string_view text, RingKind ring);

    std::string str() const;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement operator+(RingElement a, RingElement b);
RingElement operator-(RingElement a, RingElement b);
RingElement operator*(RingElement a, RingElement b);
RingElement operator-(RingElement a);

bool is_unit(RingElement c);
/// True iff c is invertible and c*c = 1; the admissible scalars of the two-column extension.
bool is_unit_square_one(RingElement c);

class RingVector {
public:
    RingVector() = default;
    RingVector(RingKind ring, std::size_t length) : ring_(ring), entries_(length, 0) {}
    RingVector(RingKind ring, std::vector<std::uint8_t> entries);

    RingKind ring() const { return ring_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::uint8_t operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, std::uint8_t value);
    RingElement at(std::size_t i) const { return {ring_, entries_.at(i)}; }

    const std::vector<std::uint8_t>& entries() const { return entries_; }

    RingVector operator+(const RingVector& other) const;
    RingVector scaled(RingElement c) const;

    /// Bare symbol string without separators, e.g. "13u3".
    std::string str() const;

    friend bool operator==(const RingVector&, const RingVector&) = default;

private:
    RingKind ring_ = RingKind::F2;
    std::vector<std::uint8_t> entries_;
};

/// Euclidean inner product sum x_i y_i.
RingElement inner_product(const RingVector& x, const RingVector& y);

/// phi(a + bu) = (b, a + b) on vectors: the image of length n is the binary
/// concatenation of b and a+b, length 2n.
RingVector gray_map(const RingVector& x);

/// Accepts bare symbol strings ("331u") and parenthesised comma forms
/// ("(3,3,1,u)", "(1,1+u,u)"). Whitespace is ignored.
RingVector parse_symbols(std::string_view text, RingKind ring);
std::string format_symbols(const RingVector& v);

}  // namespace sdc
