#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

/// Dense row-major matrix over one of the supported rings.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(RingKind ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static RingMatrix identity(RingKind ring, std::size_t n);
    static RingMatrix from_rows(const std::vector<RingVector>& rows);

    RingKind ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    RingVector row(std::size_t i) const;
    const std::vector<std::uint8_t>& data() const { return data_; }

    RingMatrix transpose() const;
    RingMatrix operator-() const;
    RingMatrix operator+(const RingMatrix& other) const;
    RingMatrix operator-(const RingMatrix& other) const;
    RingMatrix operator*(const RingMatrix& other) const;
    RingMatrix scaled(RingElement c) const;

    bool is_zero() const;

    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void place(const RingMatrix& block, std::size_t r, std::size_t c);
    RingMatrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

    /// One line per row, symbols separated by spaces.
    std::string str() const;

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

private:
    RingKind ring_ = RingKind::F2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Orientation of a lambda-circulant. RightShift: row i+1 is row i shifted one
/// place right, the entry wrapping from the last to the first column is
/// multiplied by lambda. LeftShift mirrors this (shift left, wrap into the last
/// column scaled by lambda).
enum class ShiftConvention : std::uint8_t { RightShift, LeftShift };

/// The convention that reproduces the published F2+uF2 tables.
inline constexpr ShiftConvention kDefaultShift = ShiftConvention::RightShift;

struct CirculantSpec {
    RingElement lambda;
    RingVector first_row;
};

RingMatrix lambda_circulant(const CirculantSpec& spec, ShiftConvention shift = kDefaultShift);
RingMatrix lambda_circulant(const RingVector& first_row, RingElement lambda, ShiftConvention shift = kDefaultShift);

/// n x n matrix with ones on the anti-diagonal.
RingMatrix back_diagonal(std::size_t n, RingKind ring);

/// X == X^T and each row is the previous one shifted left with the wrapped
/// entry multiplied by lambda (the shape of C*R for a lambda-circulant C).
bool is_symmetric_reverse_circulant(const RingMatrix& x, RingElement lambda);

/// X is the right-shift lambda-circulant generated by its own first row.
bool is_lambda_circulant(const RingMatrix& x, RingElement lambda);

}  // namespace sdc
