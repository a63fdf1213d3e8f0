#pragma once

// Test-side reference implementations. They share nothing with the library
// beyond the element encoding (F2U: a + bu has code a | b << 1) and are kept
// deliberately naive.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sdc/codes.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

inline int size_of(sdc::RingKind r) { return r == sdc::RingKind::F2 ? 2 : r == sdc::RingKind::F3 ? 3 : 4; }

inline int add(sdc::RingKind r, int x, int y) {
    switch (r) {
        case sdc::RingKind::F2: return (x + y) % 2;
        case sdc::RingKind::F3: return (x + y) % 3;
        case sdc::RingKind::F2U: {
            const int a = ((x & 1) + (y & 1)) % 2, b = ((x >> 1) + (y >> 1)) % 2;
            return a | (b << 1);
        }
    }
    return -1;
}

inline int mul(sdc::RingKind r, int x, int y) {
    switch (r) {
        case sdc::RingKind::F2: return x * y % 2;
        case sdc::RingKind::F3: return x * y % 3;
        case sdc::RingKind::F2U: {
            // (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + b1 a2) u
            const int a1 = x & 1, b1 = x >> 1, a2 = y & 1, b2 = y >> 1;
            return (a1 * a2 % 2) | (((a1 * b2 + b1 * a2) % 2) << 1);
        }
    }
    return -1;
}

inline int neg(sdc::RingKind r, int x) { return r == sdc::RingKind::F3 ? (3 - x) % 3 : x; }

inline Mat to_mat(const sdc::RingMatrix& m) {
    Mat out(m.rows(), Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline Mat multiply(sdc::RingKind r, const Mat& x, const Mat& y) {
    Mat out(x.size(), Vec(y.empty() ? 0 : y[0].size(), 0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j)
            for (std::size_t t = 0; t < y.size(); ++t) out[i][j] = add(r, out[i][j], mul(r, x[i][t], y[t][j]));
    return out;
}

inline Mat transpose(const Mat& x) {
    Mat out(x.empty() ? 0 : x[0].size(), Vec(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j) out[j][i] = x[i][j];
    return out;
}

inline bool is_zero(const Mat& x) {
    for (const auto& row : x)
        for (int v : row)
            if (v) return false;
    return true;
}

/// Entry (i, j) of the right-shift lambda-circulant is lambda^[j < i] * r[(j - i) mod n].
inline Mat circulant(sdc::RingKind ring, const Vec& r, int lambda) {
    const std::size_t n = r.size();
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int v = r[(j + n - i) % n];
            out[i][j] = j < i ? mul(ring, lambda, v) : v;
        }
    return out;
}

/// Calls f(word) for every codeword m * G, messages in lexicographic order.
template <class F>
void for_each_codeword(const sdc::LinearCode& code, F&& f) {
    const auto ring = code.ring();
    const int q = size_of(ring);
    const Mat g = to_mat(code.generator());
    const std::size_t k = g.size(), n = code.length();
    Vec msg(k, 0), w(n);
    while (true) {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (!msg[i]) continue;
            for (std::size_t j = 0; j < n; ++j) w[j] = add(ring, w[j], mul(ring, msg[i], g[i][j]));
        }
        f(w);
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == q) msg[pos++] = 0;
        if (pos == k) break;
    }
}

inline std::vector<Vec> codewords(const sdc::LinearCode& code) {
    std::vector<Vec> out;
    for_each_codeword(code, [&](const Vec& w) { out.push_back(w); });
    return out;
}

inline std::size_t weight(const Vec& v) {
    std::size_t w = 0;
    for (int x : v) w += x != 0;
    return w;
}

inline std::vector<std::uint64_t> weight_distribution(const sdc::LinearCode& code) {
    std::vector<std::uint64_t> dist(code.length() + 1, 0);
    for_each_codeword(code, [&](const Vec& w) { ++dist[weight(w)]; });
    return dist;
}

inline std::size_t first_weight(const std::vector<std::uint64_t>& dist) {
    for (std::size_t w = 1; w < dist.size(); ++w)
        if (dist[w]) return w;
    return 0;
}

inline std::size_t min_distance(const sdc::LinearCode& code) { return first_weight(weight_distribution(code)); }

inline sdc::RingVector random_vector(std::mt19937_64& rng, sdc::RingKind ring, std::size_t n) {
    std::uniform_int_distribution<int> sym(0, size_of(ring) - 1);
    std::vector<std::uint8_t> e(n);
    for (auto& v : e) v = static_cast<std::uint8_t>(sym(rng));
    return sdc::RingVector(ring, e);
}

/// Random k x n generator [I_k | random].
inline sdc::LinearCode random_systematic(std::mt19937_64& rng, sdc::RingKind ring, std::size_t k, std::size_t n) {
    sdc::RingMatrix g(ring, k, n);
    std::uniform_int_distribution<int> sym(0, size_of(ring) - 1);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = 1;
        for (std::size_t j = k; j < n; ++j) g(i, j) = static_cast<std::uint8_t>(sym(rng));
    }
    return sdc::LinearCode(g);
}

}  // namespace oracle
