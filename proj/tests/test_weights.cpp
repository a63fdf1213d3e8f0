#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "sdc/constructions.hpp"
#include "sdc/io.hpp"
#include "sdc/kernels.hpp"
#include "sdc/weights.hpp"

using namespace sdc;

namespace {

LinearCode corpus_code(const std::string& label) {
    return SpecFile::load(std::string(SDC_CORPUS_DIR) + "/" + label + ".spec").base_code();
}

const KnownParameterTable& known() {
    static const KnownParameterTable t = KnownParameterTable::load(std::string(SDC_DATA_DIR) + "/known_parameters.txt");
    return t;
}

EnumeratorClass cls(Family f, std::int64_t beta, std::optional<std::int64_t> gamma = {}) {
    EnumeratorClass c;
    c.family = f;
    c.beta = beta;
    c.gamma = gamma;
    c.in_published_range = true;
    return c;
}

// Self-dual binary codes of length 8n from every Construction I quad of length n.
std::vector<LinearCode> binary_self_dual(std::size_t n) {
    std::vector<LinearCode> out;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (4 * n)); ++idx) {
        CirculantQuad q;
        q.ring = RingKind::F2;
        q.n = n;
        q.lambda = {RingKind::F2, 1};
        std::uint64_t rest = idx;
        for (auto* row : {&q.a, &q.b, &q.c, &q.d}) {
            std::vector<std::uint8_t> e(n);
            for (auto& v : e) {
                v = rest & 1;
                rest >>= 1;
            }
            *row = RingVector(RingKind::F2, e);
        }
        if (check_conditions_I(q).ok()) out.emplace_back(build_construction_I(q));
    }
    return out;
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("weight_distribution examples") {
    const auto rep = weight_distribution(LinearCode(RingMatrix::from_rows({parse_symbols("11", RingKind::F2)})));
    CHECK(rep.distribution == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(rep.min_distance == 2);
    CHECK(rep.complete());
    CHECK_THROWS_AS(weight_distribution(LinearCode(RingMatrix(RingKind::F2, 41, 82))), ResourceRefusal);
    CHECK_THROWS_AS(weight_distribution(LinearCode(RingMatrix(RingKind::F3, 1, 2))), DomainError);
    CHECK_THROWS_AS(rep.count(3), std::out_of_range);
}

TEST_CASE("full pass equals per-codeword recomputation (random [n,k], k<=16)") {
    std::mt19937_64 rng(1616);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t k = 1 + t % 16;
        const std::size_t n = k + 1 + (t * 7) % (t % 5 == 0 ? 200 : 40);
        const auto code = oracle::random_systematic(rng, RingKind::F2, k, n);
        CAPTURE(k);
        CAPTURE(n);
        const auto want = oracle::weight_distribution(code);
        const auto rep = weight_distribution(code, t % 2 == 0);
        CHECK(rep.distribution == want);
        CHECK(rep.min_distance == oracle::first_weight(want));
        std::uint64_t total = 0;
        for (auto a : rep.distribution) total += a;
        CHECK(total == (std::uint64_t{1} << k));
        CHECK(rep.distribution[0] == 1);
    }
}

TEST_CASE("ternary full pass equals per-codeword recomputation (random, k<=8)") {
    std::mt19937_64 rng(333);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t k = 1 + t % 8;
        const std::size_t n = k + 1 + (t * 5) % (t % 7 == 0 ? 120 : 16);
        const auto code = oracle::random_systematic(rng, RingKind::F3, k, n);
        const auto rep = ternary_weight_distribution(code, t % 2 == 1);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(rep.distribution == oracle::weight_distribution(code));
    }
}

TEST_CASE("information-set counts equal the naive distribution prefix (random, binary and ternary)") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 1200; ++t) {
        const bool ternary = t % 3 == 2;
        const RingKind r = ternary ? RingKind::F3 : RingKind::F2;
        const std::size_t k = 1 + t % (ternary ? 8 : 16);
        const std::size_t n = k + 1 + (t * 11) % (t % 4 == 0 ? 150 : 3 * k + 4);
        const auto code = oracle::random_systematic(rng, r, k, n);
        const std::size_t through = static_cast<std::size_t>(t) % (n + 1);
        CAPTURE(ring_name(r));
        CAPTURE(k);
        CAPTURE(n);
        CAPTURE(through);
        const auto want = oracle::weight_distribution(code);
        const auto rep = low_weight_report(code, through, t % 2 == 0);
        REQUIRE(rep.distribution.size() == through + 1);
        CHECK(std::equal(rep.distribution.begin(), rep.distribution.end(), want.begin()));
        CHECK(rep.min_distance == oracle::first_weight(want));
    }
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const RingKind r = t % 2 ? RingKind::F3 : RingKind::F2;
        const std::size_t k = 4 + t % (r == RingKind::F2 ? 18 : 9);
        const std::size_t n = 2 * k + t % 60;
        const auto code = oracle::random_systematic(rng, r, k, n);
        const auto pc = PackedCode::from(code);
        CHECK(kernels::weight_distribution_serial(pc) == kernels::weight_distribution_parallel(pc));
        const auto plan = make_info_sets(code);
        const std::size_t w = t % (n / 2 + 1);
        CHECK(kernels::low_weight_counts_serial(plan, w) == kernels::low_weight_counts_parallel(plan, w));
        CHECK(kernels::min_distance_serial(plan) == kernels::min_distance_parallel(plan));
    }
}

TEST_CASE("information sets are disjoint and each is an identity block") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 1000; ++t) {
        const RingKind r = t % 2 ? RingKind::F3 : RingKind::F2;
        const std::size_t k = 1 + t % 10, n = 2 * k + t % 7;
        const auto code = oracle::random_systematic(rng, r, k, n);
        const auto plan = make_info_sets(code);
        REQUIRE(plan.sets() >= 1);
        std::vector<int> used(n, 0);
        for (std::size_t s = 0; s < plan.sets(); ++s) {
            REQUIRE(plan.positions[s].size() == k);
            const auto& g = plan.generators[s];
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t col = plan.positions[s][i];
                ++used[col];
                for (std::size_t row = 0; row < k; ++row) {
                    const bool bit = (g.plus[row * g.words + col / 64] >> (col % 64)) & 1;
                    CHECK(bit == (row == i));
                }
            }
        }
        for (int u : used) CHECK(u <= 1);
    }
    CHECK_THROWS_AS(make_info_sets(LinearCode(RingMatrix::from_rows(
                        {parse_symbols("110", RingKind::F2), parse_symbols("110", RingKind::F2)}))),
                    UnsupportedShape);
}

TEST_CASE("self-dual inputs: even weights, Type II detection matches a divisibility scan") {
    std::size_t type_two = 0, total = 0;
    for (std::size_t n : {1, 2, 3}) {
        for (const auto& code : binary_self_dual(n)) {
            const auto full = weight_distribution(code);
            for (std::size_t w = 1; w < full.distribution.size(); w += 2) CHECK(full.distribution[w] == 0);
            bool scan = true;
            for (std::size_t w = 0; w < full.distribution.size(); ++w)
                if (w % 4 && full.distribution[w]) scan = false;
            CHECK(full.type_two == scan);
            CHECK(low_weight_report(code, code.length()).type_two == scan);
            CHECK(low_weight_report(code, 4).type_two == scan);
            type_two += scan;
            ++total;
        }
    }
    CHECK(total > 100);
    CHECK(type_two > 0);
    CHECK(type_two < total);
}

TEST_CASE("Gray image counts of a table row and its extension") {
    const auto d6 = low_weight_report(gray_image_code(corpus_code("D6")), 14);
    CHECK(d6.length == 64);
    CHECK(d6.min_distance == 12);
    CHECK(d6.count(12) == 2592);
    CHECK(d6.count(14) == 17920);
    REQUIRE(d6.classification);
    CHECK(*d6.classification == cls(Family::W64_2, 80));

    const auto spec = SpecFile::load(std::string(SDC_CORPUS_DIR) + "/C68_1.spec");
    const auto& e = spec.extensions.at(0);
    const auto c68 = low_weight_report(gray_image_code(extend_code({spec.base_code(), e.c, e.x})), 14);
    CHECK(c68.min_distance == 12);
    CHECK(c68.count(12) == 1138);
    CHECK(c68.count(14) == 13568);
}

TEST_CASE("ternary minimum distance") {
    CHECK(min_distance_ternary(LinearCode(RingMatrix::from_rows({parse_symbols("11", RingKind::F3)}))).distance == 2);
    const auto ex7 = SpecFile::load(std::string(SDC_CORPUS_DIR) + "/ex7a.spec").base_code();
    const auto td = min_distance_ternary(ex7, true);
    CHECK(td.distance == 9);
    const auto dist = oracle::weight_distribution(ex7);
    CHECK(oracle::first_weight(dist) == 9);
    REQUIRE(td.min_weight_words);
    CHECK(*td.min_weight_words == dist[9]);
    CHECK_THROWS_AS(min_distance_ternary(LinearCode(RingMatrix(RingKind::F2, 1, 2))), DomainError);
}

TEST_CASE("ternary distance equals full enumeration (random, k<=8)") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t k = 1 + t % 8, n = k + 1 + t % (2 * k + 3);
        const auto code = oracle::random_systematic(rng, RingKind::F3, k, n);
        const auto td = min_distance_ternary(code, true, t % 2 == 0);
        const auto dist = oracle::weight_distribution(code);
        const auto d = oracle::first_weight(dist);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(td.distance == d);
        REQUIRE(td.min_weight_words);
        CHECK(*td.min_weight_words == dist[d]);
    }
}

TEST_CASE("classify examples") {
    CHECK(classify_counts(64, 1312, 23040) == cls(Family::W64_2, 0));
    CHECK(classify_counts(68, 1226, 12368) == cls(Family::W68_2, 196, 4));
    CHECK(classify_counts(68, 442, 14960) == cls(Family::W68_2, 0, 0));
    CHECK(classify_counts(68, 1138, 13568) == cls(Family::W68_2, 174, 0));
    CHECK_THROWS_AS(classify_counts(64, 1313, 23040), ClassificationError);
    CHECK_THROWS_AS(classify_counts(64, 2976, 0), ClassificationError);
    CHECK_THROWS_AS(classify_counts(72, 1312, 23040), ClassificationError);
    try {
        classify_counts(64, 1312, 23041);
        FAIL("expected unclassifiable");
    } catch (const ClassificationError& e) {
        CHECK(e.a12() == 1312);
        CHECK(e.a14() == 23041);
        CHECK(std::string(e.what()).find("unclassifiable") != std::string::npos);
    }
    WeightReport short_rep;
    short_rep.length = 64;
    short_rep.dimension = 32;
    short_rep.distribution.assign(13, 0);
    CHECK_THROWS_AS(classify(short_rep), ClassificationError);
}

TEST_CASE("classify recovers every (family, beta, gamma) from the formulas (exhaustive ranges)") {
    std::size_t cases = 0;
    for (std::int64_t b = 14; b <= 284; ++b, ++cases)
        CHECK(classify_counts(64, 1312 + 16 * b, 22016 - 64 * b) == cls(Family::W64_1, b));
    for (std::int64_t b = 0; b <= 277; ++b, ++cases)
        CHECK(classify_counts(64, 1312 + 16 * b, 23040 - 64 * b) == cls(Family::W64_2, b));
    for (std::int64_t b = 104; b <= 1358; ++b, ++cases)
        CHECK(classify_counts(68, 442 + 4 * b, 10864 - 8 * b) == cls(Family::W68_1, b));
    for (std::int64_t g = 0; g <= 11; ++g)
        for (std::int64_t b = 14 * g; b <= 1870 - 32 * g; ++b, ++cases)
            CHECK(classify_counts(68, 442 + 4 * b, 14960 - 8 * b - 256 * g) == cls(Family::W68_2, b, g));
    CHECK(cases > 1000);
}

TEST_CASE("W64 families never both match") {
    for (std::int64_t b = -20; b <= 400; ++b)
        for (std::int64_t a14 = 0; a14 <= 30000; a14 += 64) {
            const auto a12 = static_cast<std::uint64_t>(1312 + 16 * b);
            const bool one = a14 == 22016 - 64 * b, two = a14 == 23040 - 64 * b;
            CHECK_FALSE((one && two));
            if (!one && !two) continue;
            CHECK(classify_counts(64, a12, static_cast<std::uint64_t>(a14)).family ==
                  (one ? Family::W64_1 : Family::W64_2));
        }
}

TEST_CASE("out-of-range parameters classify but are flagged") {
    const auto c = classify_counts(64, 1312 + 16 * 300, 23040 - 64 * 300);
    CHECK(c.family == Family::W64_2);
    CHECK_FALSE(c.in_published_range);
    CHECK(novelty_check(c, known()) == Novelty::OutOfFamily);
    CHECK_FALSE(classify_counts(68, 442 + 4 * 50, 10864 - 8 * 50).in_published_range);
}

TEST_CASE("extremality") {
    CHECK(is_extremal(64, 12, false));
    CHECK(is_extremal(68, 12, false));
    CHECK_FALSE(is_extremal(64, 10, false));
    CHECK(extremal_bound(22, false) == 6);
    CHECK(extremal_bound(24, true) == 8);
    CHECK_THROWS_AS(is_extremal(22, 8, false), DomainError);
    CHECK(is_extremal_ternary(56, 15));
    CHECK(is_extremal_ternary(24, 9));
    CHECK_FALSE(is_extremal_ternary(24, 6));
}

TEST_CASE("known parameter table") {
    const auto& t = known();
    CHECK(t.count(Family::W68_2, false) == 465);
    CHECK(t.count(Family::W68_2, true) == 492);
    CHECK(t.count(Family::W64_1, false) == 15);
    CHECK(novelty_check(cls(Family::W68_2, 174, 0), t) == Novelty::New);
    CHECK(novelty_check(cls(Family::W68_2, 174, 0), t, true) == Novelty::Known);
    CHECK(novelty_check(cls(Family::W68_2, 11, 0), t) == Novelty::Known);
    CHECK(novelty_check(cls(Family::W64_2, 0), t) == Novelty::Known);
    CHECK(novelty_check(cls(Family::W64_2, 19), t) == Novelty::AmbiguousKnown);
    CHECK(novelty_check(cls(Family::W68_2, 196, 4), t) == Novelty::New);
    for (const auto& e : t.entries()) {
        if (e.added.empty()) continue;
        CHECK(e.added == "table5");
        CHECK(e.family == Family::W68_2);
    }
}

TEST_CASE("known table parsing") {
    std::istringstream in("# c\nW64_2 - 3\nW68_2 2 40 ambiguous\nW68_2 0 174 added=table5  # note\n\n");
    const auto t = KnownParameterTable::parse(in);
    REQUIRE(t.entries().size() == 3);
    CHECK(t.entries()[1].ambiguous);
    CHECK(t.entries()[1].gamma == 2);
    CHECK(t.entries()[2].added == "table5");
    CHECK_FALSE(t.entries()[0].gamma);
    std::istringstream bad1("W64_2 3\n"), bad2("W99 - 3\n"), bad3("W64_2 - x\n"), bad4("W64_2 - 3 weird\n");
    CHECK_THROWS_AS(KnownParameterTable::parse(bad1), ParseError);
    CHECK_THROWS_AS(KnownParameterTable::parse(bad2), ParseError);
    CHECK_THROWS_AS(KnownParameterTable::parse(bad3), ParseError);
    CHECK_THROWS_AS(KnownParameterTable::parse(bad4), ParseError);
    CHECK(family_name(parse_family("W68_1")) == "W68_1");
}

}  // TEST_SUITE
