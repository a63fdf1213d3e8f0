#include "sdc/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sdc {

namespace {

constexpr double kToyBound = 16777216.0;  // 2^24

double space_size(RingKind ring, std::size_t exponent) {
    return std::pow(static_cast<double>(Ring(ring).size()), static_cast<double>(exponent));
}

std::vector<RingVector> to_sorted(RingKind ring, const std::set<std::vector<std::uint8_t>>& words) {
    std::vector<RingVector> out;
    out.reserve(words.size());
    for (const auto& w : words) out.emplace_back(ring, w);
    return out;
}

}  // namespace

bool LinearCode::standard_form() const {
    const std::size_t k = dimension();
    if (k > length()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (generator_(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_self_orthogonal(const LinearCode& code) {
    const auto& g = code.generator();
    return (g * g.transpose()).is_zero();
}

bool is_self_dual(const LinearCode& code) {
    if (code.length() != 2 * code.dimension())
        throw UnsupportedShape("self-duality test needs n = 2k, got n = " + std::to_string(code.length()) +
                               ", k = " + std::to_string(code.dimension()));
    if (!code.standard_form()) throw UnsupportedShape("self-duality test needs a generator in the form [I_k | M]");
    return is_self_orthogonal(code);
}

SystematicForm systematic_form(const LinearCode& code) {
    const Ring r(code.ring());
    RingMatrix g = code.generator();
    const std::size_t k = g.rows(), n = g.cols();
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < k; ++i) std::swap(g(i, a), g(i, b));
        std::swap(cols[a], cols[b]);
    };

    for (std::size_t p = 0; p < k; ++p) {
        std::size_t pr = k, pc = n;
        for (std::size_t j = p; j < n && pc == n; ++j)
            for (std::size_t i = p; i < k; ++i)
                if (r.is_unit(g(i, j))) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pc == n) throw UnsupportedShape("generator rows do not reduce to a free basis (row " + std::to_string(p) + ")");
        swap_cols(p, pc);
        if (pr != p)
            for (std::size_t j = 0; j < n; ++j) std::swap(g(p, j), g(pr, j));
        const std::uint8_t inv = r.inverse(g(p, p));
        for (std::size_t j = 0; j < n; ++j) g(p, j) = r.mul(inv, g(p, j));
        for (std::size_t i = 0; i < k; ++i) {
            if (i == p || g(i, p) == 0) continue;
            const std::uint8_t f = g(i, p);
            for (std::size_t j = 0; j < n; ++j) g(i, j) = r.sub(g(i, j), r.mul(f, g(p, j)));
        }
    }
    return {LinearCode(std::move(g)), std::move(cols)};
}

std::vector<RingVector> enumerate_codewords(const LinearCode& code) {
    const std::size_t k = code.dimension(), n = code.length();
    if (space_size(code.ring(), k) > kToyBound)
        throw ResourceRefusal("codeword enumeration refused: |R|^k exceeds 2^24");
    const Ring r(code.ring());
    const auto& g = code.generator();
    std::set<std::vector<std::uint8_t>> words;
    std::vector<std::uint8_t> coeff(k, 0), word(n, 0);
    while (true) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < k; ++i)
            if (coeff[i])
                for (std::size_t j = 0; j < n; ++j) word[j] = r.add(word[j], r.mul(coeff[i], g(i, j)));
        words.insert(word);
        std::size_t pos = 0;
        while (pos < k && ++coeff[pos] == r.size()) coeff[pos++] = 0;
        if (pos == k) break;
    }
    return to_sorted(code.ring(), words);
}

std::vector<RingVector> brute_force_dual(const LinearCode& code) {
    const std::size_t n = code.length();
    if (space_size(code.ring(), n) > kToyBound)
        throw ResourceRefusal("brute-force dual refused: |R|^n = " + std::to_string(Ring(code.ring()).size()) + "^" +
                              std::to_string(n) + " exceeds 2^24");
    const Ring r(code.ring());
    const auto& g = code.generator();
    std::set<std::vector<std::uint8_t>> dual;
    std::vector<std::uint8_t> x(n, 0);
    while (true) {
        bool orthogonal = true;
        for (std::size_t i = 0; i < g.rows() && orthogonal; ++i) {
            std::uint8_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc = r.add(acc, r.mul(x[j], g(i, j)));
            orthogonal = acc == 0;
        }
        if (orthogonal) dual.insert(x);
        std::size_t pos = 0;
        while (pos < n && ++x[pos] == r.size()) x[pos++] = 0;
        if (pos == n) break;
    }
    return to_sorted(code.ring(), dual);
}

LinearCode extend_code(const ExtensionInput& input) {
    const auto& base = input.base;
    const RingKind ring = base.ring();
    const Ring r(ring);
    if (input.c.ring != ring || input.x.ring() != ring) throw PreconditionError("extension inputs over mixed rings");
    // <(1,0,X),(1,0,X)> = 1 + <X,X> = 2 and the row products pick up y_i y_j (1 + c^2)
    if (ring == RingKind::F3) throw PreconditionError("two-column extension needs characteristic 2, got F3");
    if (!is_unit_square_one(input.c)) throw PreconditionError("c = '" + input.c.str() + "' is not a unit with c^2 = 1");
    if (input.x.size() != base.length())
        throw PreconditionError("X has length " + std::to_string(input.x.size()) + ", base code has length " +
                                std::to_string(base.length()));
    if (inner_product(input.x, input.x).value != 1) throw PreconditionError("<X,X> != 1");
    if (!is_self_orthogonal(base)) throw PreconditionError("base code is not self-orthogonal");

    const std::size_t k = base.dimension(), n = base.length();
    RingMatrix g(ring, k + 1, n + 2);
    g(0, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) g(0, j + 2) = input.x[j];
    for (std::size_t i = 0; i < k; ++i) {
        const RingVector row = base.generator().row(i);
        const std::uint8_t y = inner_product(row, input.x).value;
        g(i + 1, 0) = y;
        g(i + 1, 1) = r.mul(input.c.value, y);
        for (std::size_t j = 0; j < n; ++j) g(i + 1, j + 2) = row[j];
    }
    return LinearCode(std::move(g));
}

LinearCode gray_image_code(const LinearCode& code) {
    if (code.ring() != RingKind::F2U) throw DomainError("Gray image needs a code over F2U");
    const std::size_t k = code.dimension(), n = code.length();
    RingMatrix g(RingKind::F2, 2 * k, 2 * n);
    const RingElement u{RingKind::F2U, 2};
    for (std::size_t i = 0; i < k; ++i) {
        const RingVector row = code.generator().row(i);
        const RingVector img = gray_map(row);
        const RingVector img_u = gray_map(row.scaled(u));
        for (std::size_t j = 0; j < 2 * n; ++j) {
            g(2 * i, j) = img[j];
            g(2 * i + 1, j) = img_u[j];
        }
    }
    return LinearCode(std::move(g));
}

}  // namespace sdc
