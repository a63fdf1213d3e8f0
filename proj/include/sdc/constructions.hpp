#pragma once

// Four-block generator constructions [I_4n | M] built from four lambda-circulant
// blocks A, B, C, D and the back-diagonal matrix R:
//
//   Construction I (short Kharaghani array)     Construction II (variation)
//     A    B    CR   DR                            A    B    CR   DR
//    -B    A    DR  -CR                           -B^T  A^T  DR  -CR
//    -CR  -DR   A    B                            -CR  -DR   A    B
//    -DR   CR  -B    A                            -DR   CR  -B^T  A^T
//
//   Goethals-Seidel
//     A      BR     CR     DR
//    -BR     A      D^T R -C^T R
//    -CR    -D^T R  A      B^T R
//    -DR     C^T R -B^T R  A

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdc/matrix.hpp"
#include "sdc/ring.hpp"

namespace sdc {

enum class Construction : std::uint8_t { GoethalsSeidel, I, II };

std::string_view construction_name(Construction c);
Construction parse_construction(std::string_view name);

struct CirculantQuad {
    RingKind ring = RingKind::F2;
    std::size_t n = 0;
    RingElement lambda{RingKind::F2, 1};
    RingVector a, b, c, d;
    ShiftConvention shift = kDefaultShift;

    /// Throws DomainError when lambda is not a unit or a row has the wrong length/ring.
    void validate() const;

    friend bool operator==(const CirculantQuad&, const CirculantQuad&) = default;
};

struct QuadBlocks {
    RingMatrix a, b, c, d, r;
};

QuadBlocks expand(const CirculantQuad& q);

struct ConditionReport {
    bool gram_ok = false;
    bool skew_ok = false;
    /// (name, residual) for each failed condition; the residual is what should be zero.
    std::vector<std::pair<std::string, RingMatrix>> residuals;

    bool ok() const { return gram_ok && skew_ok; }
    std::string summary() const;
};

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, ConditionReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const ConditionReport& report() const { return report_; }

private:
    ConditionReport report_;
};

/// AA^T+BB^T+CC^T+DD^T = -I and AB^T - BA^T - CD^T + DC^T = 0.
ConditionReport check_conditions_I(const CirculantQuad& q);

/// AA^T+BB^T+CC^T+DD^T = -I, CD^T - DC^T = 0 and -ADR + BCR - CRB + DRA = 0.
/// Requires lambda^2 = 1 (DomainError otherwise).
ConditionReport check_conditions_II(const CirculantQuad& q);

/// Only the Gram condition; skew_ok is always true.
ConditionReport check_conditions_GS(const CirculantQuad& q);

ConditionReport check_conditions(Construction kind, const CirculantQuad& q);

/// Right half M of the generator, 4n x 4n. No condition check.
RingMatrix construction_block_array(Construction kind, const QuadBlocks& blocks);

/// [I_4n | M]. Throws ConstructionError carrying the report when the
/// conditions fail, unless `verify` is false.
RingMatrix build_construction_I(const CirculantQuad& q, bool verify = true);
RingMatrix build_construction_II(const CirculantQuad& q, bool verify = true);
RingMatrix build_goethals_seidel(const CirculantQuad& q, bool verify = true);
RingMatrix build(Construction kind, const CirculantQuad& q, bool verify = true);

}  // namespace sdc
