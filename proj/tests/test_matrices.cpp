#include "doctest.h"
#include "oracle.hpp"
#include "sdc/matrix.hpp"

using namespace sdc;

namespace {

const RingKind kRings[] = {RingKind::F2, RingKind::F3, RingKind::F2U};

RingMatrix mat(RingKind r, std::initializer_list<const char*> rows) {
    std::vector<RingVector> v;
    for (auto* s : rows) v.push_back(parse_symbols(s, r));
    return RingMatrix::from_rows(v);
}

RingElement random_unit(std::mt19937_64& rng, RingKind r) {
    const auto units = Ring(r).units();
    return {r, units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]};
}

RingMatrix random_matrix(std::mt19937_64& rng, RingKind r, std::size_t rows, std::size_t cols) {
    RingMatrix m(r, rows, cols);
    std::uniform_int_distribution<int> sym(0, oracle::size_of(r) - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<std::uint8_t>(sym(rng));
    return m;
}

}  // namespace

TEST_SUITE("matrices") {

TEST_CASE("lambda_circulant examples") {
    CHECK(lambda_circulant(parse_symbols("010", RingKind::F2), {RingKind::F2, 1}) ==
          mat(RingKind::F2, {"010", "001", "100"}));
    CHECK(lambda_circulant(parse_symbols("1u", RingKind::F2U), {RingKind::F2U, 3}) ==
          mat(RingKind::F2U, {"1u", "u1"}));
    CHECK(lambda_circulant(parse_symbols("01", RingKind::F2U), {RingKind::F2U, 3}) ==
          mat(RingKind::F2U, {"01", "30"}));
    CHECK_THROWS_AS(lambda_circulant(parse_symbols("01", RingKind::F2U), {RingKind::F2U, 2}), DomainError);
    CHECK_THROWS_AS(lambda_circulant(parse_symbols("01", RingKind::F3), {RingKind::F3, 0}), DomainError);
}

TEST_CASE("left-shift convention mirrors the right-shift one") {
    const auto L = lambda_circulant(parse_symbols("01", RingKind::F2U), {RingKind::F2U, 3}, ShiftConvention::LeftShift);
    CHECK(L == mat(RingKind::F2U, {"01", "10"}));
}

TEST_CASE("lambda_circulant matches the entry formula (randomized)") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        const auto r = kRings[t % 3];
        const std::size_t n = 1 + t % 9;
        const auto row = oracle::random_vector(rng, r, n);
        const auto lambda = random_unit(rng, r);
        const auto C = lambda_circulant(row, lambda);
        oracle::Vec rv(row.entries().begin(), row.entries().end());
        CHECK(oracle::to_mat(C) == oracle::circulant(r, rv, lambda.value));
        CHECK(is_lambda_circulant(C, lambda));
    }
}

TEST_CASE("back_diagonal") {
    CHECK(back_diagonal(1, RingKind::F2) == mat(RingKind::F2, {"1"}));
    CHECK(back_diagonal(2, RingKind::F2) == mat(RingKind::F2, {"01", "10"}));
    CHECK(back_diagonal(3, RingKind::F3) == mat(RingKind::F3, {"001", "010", "100"}));
    CHECK_THROWS_AS(back_diagonal(0, RingKind::F2), DomainError);
}

TEST_CASE("R*R = I and R^T = R (exhaustive n<=16)") {
    for (auto r : kRings)
        for (std::size_t n = 1; n <= 16; ++n) {
            const auto R = back_diagonal(n, r);
            CHECK(R * R == RingMatrix::identity(r, n));
            CHECK(R.transpose() == R);
        }
}

TEST_CASE("matrix algebra basics") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const auto r = kRings[t % 3];
        const std::size_t a = 1 + t % 5, b = 1 + (t / 5) % 5;
        const auto X = random_matrix(rng, r, a, b), Y = random_matrix(rng, r, b, a);
        CHECK(RingMatrix::identity(r, a) * X == X);
        CHECK(X.transpose().transpose() == X);
        CHECK((X + (-X)).is_zero());
        CHECK(oracle::to_mat(X * Y) == oracle::multiply(r, oracle::to_mat(X), oracle::to_mat(Y)));
        CHECK((X * Y).transpose() == Y.transpose() * X.transpose());
        if (r != RingKind::F3) CHECK(-X == X);
    }
    CHECK_THROWS_AS(RingMatrix(RingKind::F2, 2, 3) * RingMatrix(RingKind::F2, 2, 3), DomainError);
    CHECK_THROWS_AS(RingMatrix(RingKind::F2, 2, 3) + RingMatrix(RingKind::F2, 3, 2), DomainError);
    CHECK_THROWS_AS(RingMatrix(RingKind::F2, 2, 2) + RingMatrix(RingKind::F3, 2, 2), DomainError);
}

TEST_CASE("is_symmetric_reverse_circulant examples") {
    const auto C = lambda_circulant(parse_symbols("110", RingKind::F2), {RingKind::F2, 1});
    CHECK(is_symmetric_reverse_circulant(C * back_diagonal(3, RingKind::F2), {RingKind::F2, 1}));
    CHECK(is_symmetric_reverse_circulant(back_diagonal(4, RingKind::F2), {RingKind::F2, 1}));
    CHECK_FALSE(is_symmetric_reverse_circulant(mat(RingKind::F2, {"01", "00"}), {RingKind::F2, 1}));
}

TEST_CASE("Lemma identities for lambda-circulants (randomized, all rings, n<=8)") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 1500; ++t) {
        const auto r = kRings[t % 3];
        const std::size_t n = 1 + t % 8;
        const auto lambda = random_unit(rng, r);
        const auto A = lambda_circulant(oracle::random_vector(rng, r, n), lambda);
        const auto B = lambda_circulant(oracle::random_vector(rng, r, n), lambda);
        const auto C = lambda_circulant(oracle::random_vector(rng, r, n), lambda);
        const auto R = back_diagonal(n, r);
        const auto CR = C * R;
        CAPTURE(ring_name(r));
        CAPTURE(n);
        CHECK(CR.transpose() == CR);
        CHECK(is_symmetric_reverse_circulant(CR, lambda));
        CHECK(A * CR == CR * A.transpose());
        CHECK((A * R * C.transpose() - C * R * A.transpose()).is_zero());
        CHECK(A * B == B * A);
        const RingElement inv{r, Ring(r).inverse(lambda.value)};
        CHECK(is_lambda_circulant(A.transpose(), inv));
    }
}

}  // TEST_SUITE
