#include "sdc/packed.hpp"

#include <algorithm>
#include <optional>

namespace sdc {

PackedCode PackedCode::from(const LinearCode& code) {
    PackedCode pc;
    if (code.ring() == RingKind::F2)
        pc.field = Field::F2;
    else if (code.ring() == RingKind::F3)
        pc.field = Field::F3;
    else
        throw DomainError("packed kernels handle F2 and F3 codes only");
    pc.n = code.length();
    pc.k = code.dimension();
    pc.words = std::max<std::size_t>(1, (pc.n + 63) / 64);
    if (pc.words > kMaxPackedWords) throw DomainError("packed kernels handle length <= 256");
    pc.plus.assign(pc.k * pc.words, 0);
    pc.minus.assign(pc.k * pc.words, 0);
    const auto& g = code.generator();
    for (std::size_t i = 0; i < pc.k; ++i)
        for (std::size_t j = 0; j < pc.n; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << (j % 64);
            if (g(i, j) == 1) pc.plus[i * pc.words + j / 64] |= bit;
            if (g(i, j) == 2) pc.minus[i * pc.words + j / 64] |= bit;
        }
    return pc;
}

namespace {

// Reduces `g` so that it is the identity on k of the candidate columns.
// Returns the pivot columns in row order, or nullopt if rank < k on them.
std::optional<std::vector<std::size_t>> reduce_on(RingMatrix& g, const std::vector<std::size_t>& candidates) {
    const Ring r(g.ring());
    const std::size_t k = g.rows(), n = g.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col : candidates) {
        if (row == k) break;
        std::size_t pr = k;
        for (std::size_t i = row; i < k; ++i)
            if (r.is_unit(g(i, col))) {
                pr = i;
                break;
            }
        if (pr == k) continue;
        if (pr != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(g(row, j), g(pr, j));
        const std::uint8_t inv = r.inverse(g(row, col));
        for (std::size_t j = 0; j < n; ++j) g(row, j) = r.mul(inv, g(row, j));
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || g(i, col) == 0) continue;
            const std::uint8_t f = g(i, col);
            for (std::size_t j = 0; j < n; ++j) g(i, j) = r.sub(g(i, j), r.mul(f, g(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    if (row < k) return std::nullopt;
    return pivots;
}

}  // namespace

InfoSetPlan make_info_sets(const LinearCode& code, std::size_t max_sets) {
    InfoSetPlan plan;
    const std::size_t n = code.length();
    std::vector<bool> used(n, false);
    while (plan.sets() < max_sets) {
        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) candidates.push_back(j);
        RingMatrix g = code.generator();
        auto pivots = reduce_on(g, candidates);
        if (!pivots) {
            if (plan.sets() == 0) throw UnsupportedShape("generator matrix is rank deficient");
            break;
        }
        PackedCode pc = PackedCode::from(LinearCode(std::move(g)));
        std::vector<std::uint64_t> mask(pc.words, 0);
        for (std::size_t col : *pivots) {
            used[col] = true;
            mask[col / 64] |= std::uint64_t{1} << (col % 64);
        }
        plan.generators.push_back(std::move(pc));
        plan.masks.push_back(std::move(mask));
        plan.positions.push_back(std::move(*pivots));
        if (code.dimension() == 0) break;
    }
    return plan;
}

}  // namespace sdc
