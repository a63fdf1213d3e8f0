#pragma once

// Enumeration kernels. Each kernel has a serial reference and an OpenMP
// version; both return identical tallies (integer merges are order free).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdc/packed.hpp"

namespace sdc::kernels {

/// Full weight distribution A_0..A_n over all |F|^k codewords.
/// Binary codes are walked in Gray-code order (one row XOR per codeword);
/// ternary codes in odometer order (one row addition per digit step).
std::vector<std::uint64_t> weight_distribution_serial(const PackedCode& code);

/// Message space split on the top message digits; per-partition histograms
/// are summed.
std::vector<std::uint64_t> weight_distribution_parallel(const PackedCode& code);

/// Exact A_0..A_max_weight using disjoint information sets: with m sets, every
/// codeword of weight <= max_weight has weight <= max_weight / m on some set,
/// so enumerating those messages per set (deduplicated by first qualifying
/// set) counts each such codeword exactly once.
std::vector<std::uint64_t> low_weight_counts_serial(const InfoSetPlan& plan, std::size_t max_weight);
std::vector<std::uint64_t> low_weight_counts_parallel(const InfoSetPlan& plan, std::size_t max_weight);

/// Exact minimum distance by information-set enumeration with the growing
/// lower bound m(t+1). Returns 0 for the zero code.
std::size_t min_distance_serial(const InfoSetPlan& plan);
std::size_t min_distance_parallel(const InfoSetPlan& plan);

}  // namespace sdc::kernels
