#include "sdc/ring.hpp"

#include <cctype>

namespace sdc {

// Index order: F2, F3, F2U. Unused slots stay zero.
const std::uint8_t Ring::kAdd[3][4][4] = {
    {{0, 1}, {1, 0}},
    {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
    {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
};

const std::uint8_t Ring::kMul[3][4][4] = {
    {{0, 0}, {0, 1}},
    {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}},
    // (a+bu)(c+du) = ac + (ad+bc)u
    {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}},
};

const std::uint8_t Ring::kNeg[3][4] = {
    {0, 1},
    {0, 2, 1},
    {0, 1, 2, 3},
};

std::string_view ring_name(RingKind kind) {
    switch (kind) {
        case RingKind::F2: return "F2";
        case RingKind::F3: return "F3";
        case RingKind::F2U: return "F2U";
    }
    return "?";
}

RingKind parse_ring(std::string_view name) {
    if (name == "F2") return RingKind::F2;
    if (name == "F3") return RingKind::F3;
    if (name == "F2U" || name == "F2+uF2") return RingKind::F2U;
    throw ParseError("unknown ring '" + std::string(name) + "'", 0);
}

bool Ring::is_unit(std::uint8_t a) const {
    switch (kind_) {
        case RingKind::F2: return a == 1;
        case RingKind::F3: return a == 1 || a == 2;
        case RingKind::F2U: return (a & 1) != 0;
    }
    return false;
}

std::uint8_t Ring::inverse(std::uint8_t a) const {
    for (std::uint8_t b = 0; b < size(); ++b)
        if (mul(a, b) == 1) return b;
    throw DomainError(std::string("element '") + symbol(a) + "' is not a unit in " +
                      std::string(ring_name(kind_)));
}

char Ring::symbol(std::uint8_t a) const {
    if (kind_ == RingKind::F2U) return "01u3"[a & 3];
    return static_cast<char>('0' + a);
}

int Ring::code_of(char c) const {
    switch (kind_) {
        case RingKind::F2:
            return (c == '0' || c == '1') ? c - '0' : -1;
        case RingKind::F3:
            return (c >= '0' && c <= '2') ? c - '0' : -1;
        case RingKind::F2U:
            if (c == '0' || c == '1') return c - '0';
            if (c == 'u') return 2;
            if (c == '3') return 3;
            return -1;
    }
    return -1;
}

std::vector<std::uint8_t> Ring::elements() const {
    std::vector<std::uint8_t> out;
    for (int a = 0; a < size(); ++a) out.push_back(static_cast<std::uint8_t>(a));
    return out;
}

std::vector<std::uint8_t> Ring::units() const {
    std::vector<std::uint8_t> out;
    for (auto a : elements())
        if (is_unit(a)) out.push_back(a);
    return out;
}

namespace {

void require_same(RingKind a, RingKind b) {
    if (a != b)
        throw DomainError("mixed-ring operands: " + std::string(ring_name(a)) + " and " +
                          std::string(ring_name(b)));
}

}  // namespace

RingElement RingElement::parse(std::string_view text, RingKind ring) {
    RingVector v = parse_symbols(text, ring);
    if (v.size() != 1) throw ParseError("expected a single ring element, got '" + std::string(text) + "'", 0);
    return v.at(0);
}

std::string RingElement::str() const { return std::string(1, Ring(ring).symbol(value)); }

RingElement operator+(RingElement a, RingElement b) {
    require_same(a.ring, b.ring);
    return {a.ring, Ring(a.ring).add(a.value, b.value)};
}

RingElement operator-(RingElement a, RingElement b) {
    require_same(a.ring, b.ring);
    return {a.ring, Ring(a.ring).sub(a.value, b.value)};
}

RingElement operator*(RingElement a, RingElement b) {
    require_same(a.ring, b.ring);
    return {a.ring, Ring(a.ring).mul(a.value, b.value)};
}

RingElement operator-(RingElement a) { return {a.ring, Ring(a.ring).neg(a.value)}; }

bool is_unit(RingElement c) { return Ring(c.ring).is_unit(c.value); }

bool is_unit_square_one(RingElement c) { return is_unit(c) && Ring(c.ring).mul(c.value, c.value) == 1; }

RingVector::RingVector(RingKind ring, std::vector<std::uint8_t> entries) : ring_(ring), entries_(std::move(entries)) {
    const Ring r(ring);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!r.valid(entries_[i]))
            throw DomainError("entry " + std::to_string(i) + " out of range for " + std::string(ring_name(ring)));
}

void RingVector::set(std::size_t i, std::uint8_t value) {
    if (!Ring(ring_).valid(value)) throw DomainError("value out of range for ring");
    entries_.at(i) = value;
}

RingVector RingVector::operator+(const RingVector& other) const {
    require_same(ring_, other.ring_);
    if (size() != other.size()) throw DomainError("vector length mismatch");
    const Ring r(ring_);
    RingVector out(ring_, size());
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = r.add(entries_[i], other.entries_[i]);
    return out;
}

RingVector RingVector::scaled(RingElement c) const {
    require_same(ring_, c.ring);
    const Ring r(ring_);
    RingVector out(ring_, size());
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = r.mul(c.value, entries_[i]);
    return out;
}

std::string RingVector::str() const { return format_symbols(*this); }

RingElement inner_product(const RingVector& x, const RingVector& y) {
    require_same(x.ring(), y.ring());
    if (x.size() != y.size())
        throw DomainError("inner product of vectors of length " + std::to_string(x.size()) + " and " +
                          std::to_string(y.size()));
    const Ring r(x.ring());
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = r.add(acc, r.mul(x[i], y[i]));
    return {x.ring(), acc};
}

RingVector gray_map(const RingVector& x) {
    if (x.ring() != RingKind::F2U) throw DomainError("Gray map needs an F2U vector");
    const std::size_t n = x.size();
    std::vector<std::uint8_t> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t a = x[i] & 1, b = (x[i] >> 1) & 1;
        out[i] = b;
        out[n + i] = a ^ b;
    }
    return RingVector(RingKind::F2, std::move(out));
}

RingVector parse_symbols(std::string_view text, RingKind ring) {
    const Ring r(ring);
    std::vector<std::uint8_t> out;

    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;

    const bool parenthesised = begin < end && text[begin] == '(';
    if (parenthesised) {
        if (text[end - 1] != ')') throw ParseError("missing ')'", end - 1);
        ++begin;
        --end;
    }
    // a '+' only occurs inside "1+u" tokens, which need the token reader
    const bool comma_form = text.substr(begin, end - begin).find_first_of(",+") != std::string_view::npos;

    auto decode = [&](std::string_view token, std::size_t pos) {
        if (token.size() == 1) {
            const int code = r.code_of(token[0]);
            if (code < 0)
                throw ParseError("symbol '" + std::string(token) + "' not in " + std::string(ring_name(ring)), pos);
            out.push_back(static_cast<std::uint8_t>(code));
            return;
        }
        if (ring == RingKind::F2U && (token == "1+u" || token == "u+1")) {
            out.push_back(3);
            return;
        }
        throw ParseError("unknown symbol '" + std::string(token) + "'", pos);
    };

    if (comma_form) {
        std::size_t start = begin;
        for (std::size_t i = begin; i <= end; ++i) {
            if (i == end || text[i] == ',') {
                std::string token;
                std::size_t first = i;
                for (std::size_t j = start; j < i; ++j)
                    if (!std::isspace(static_cast<unsigned char>(text[j]))) {
                        if (token.empty()) first = j;
                        token.push_back(text[j]);
                    }
                if (token.empty()) throw ParseError("empty symbol", start);
                decode(token, first);
                start = i + 1;
            }
        }
    } else {
        for (std::size_t i = begin; i < end; ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            decode(text.substr(i, 1), i);
        }
    }
    return RingVector(ring, std::move(out));
}

std::string format_symbols(const RingVector& v) {
    const Ring r(v.ring());
    std::string s;
    s.reserve(v.size());
    for (auto e : v.entries()) s.push_back(r.symbol(e));
    return s;
}

}  // namespace sdc
