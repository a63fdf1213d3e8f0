#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/matrix.hpp"
#include "sdc/ring.hpp"

namespace sdc {

/// A code whose shape the requested operation does not handle (non-standard form, n != 2k, non-free).
class UnsupportedShape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request that exceeds a configured size bound.
class ResourceRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated operation precondition (extension scalars, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear code given by a generator matrix whose rows are a basis.
class LinearCode {
public:
    LinearCode() = default;
    explicit LinearCode(RingMatrix generator) : generator_(std::move(generator)) {}

    RingKind ring() const { return generator_.ring(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const RingMatrix& generator() const { return generator_; }

    /// Left k x k block is the identity.
    bool standard_form() const;

private:
    RingMatrix generator_;
};

/// G * G^T == 0.
bool is_self_orthogonal(const LinearCode& code);

/// Self-duality of a free code in standard form [I_k | M] with n = 2k:
/// G G^T = 0 together with the size argument.
bool is_self_dual(const LinearCode& code);

struct SystematicForm {
    LinearCode code;                    ///< standard form in permuted coordinates
    std::vector<std::size_t> columns;   ///< columns[j] = original coordinate placed at position j
};

/// Row reduction with unit pivots and column swaps. Throws UnsupportedShape
/// if the rows do not reduce to k unit pivots (dependent rows, non-free code).
SystematicForm systematic_form(const LinearCode& code);

/// Every codeword, sorted; toy scale only (|ring|^k <= 2^24).
std::vector<RingVector> enumerate_codewords(const LinearCode& code);

/// All x in R^n orthogonal to every generator row, sorted. Refuses when |R|^n > 2^24.
std::vector<RingVector> brute_force_dual(const LinearCode& code);

struct ExtensionInput {
    LinearCode base;
    RingElement c;
    RingVector x;
};

/// (k+1) x (n+2) generator: top row (1, 0, X), then (y_i, c*y_i, r_i) with y_i = <r_i, X>.
/// F2 and F2U only; over F3 the top row has norm 2.
LinearCode extend_code(const ExtensionInput& input);

/// Binary code spanned by phi(r_i) and phi(u r_i), length 2n, 2k rows.
LinearCode gray_image_code(const LinearCode& code);

}  // namespace sdc
