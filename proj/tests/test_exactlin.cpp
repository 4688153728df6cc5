#include <gtest/gtest.h>

#include <random>

#include "semihom/exactlin.hpp"

using namespace semihom;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread = 3) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Rational(static_cast<long>(rng() % (2 * spread + 1)) - spread,
                               static_cast<long>(rng() % 3) + 1);
    return m;
}

// Low rank on purpose: a product through a narrow middle.
RatMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational a(6, -4);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("7").str(), "7");
}

TEST(Rational, RejectsMalformedText) {
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ExactWithWideNumerators) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        mpz_class na = 0;
        mpz_class nb = 0;
        for (int k = 0; k < 4; ++k) {
            na = (na << 64) + mpz_class(std::to_string(rng()));
            nb = (nb << 64) + mpz_class(std::to_string(rng()));
        }
        Rational a(na, mpz_class(std::to_string(rng() | 1)));
        Rational b(-nb, mpz_class(std::to_string(rng() | 1)));
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ((a * b) / b, a);
    }
}

TEST(Rref, Examples) {
    auto id = rref(RatMatrix::identity(2));
    EXPECT_EQ(id.reduced, RatMatrix::identity(2));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(id.rank, 2u);

    auto dep = rref(RatMatrix::from_rows({{1, 2}, {2, 4}}));
    EXPECT_EQ(dep.reduced, RatMatrix::from_rows({{1, 2}, {0, 0}}));
    EXPECT_EQ(dep.pivots, (std::vector<std::size_t>{0}));
    EXPECT_EQ(dep.rank, 1u);

    auto swap = rref(RatMatrix::from_rows({{0, 1}, {1, 0}}));
    EXPECT_EQ(swap.reduced, RatMatrix::identity(2));
    EXPECT_EQ(swap.rank, 2u);
}

TEST(Rref, IdempotentAndRankSymmetric) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_low_rank(rng, 1 + rng() % 6, 1 + rng() % 6, rng() % 4);
        auto r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        EXPECT_EQ(rank(m), rank(m.transpose()));
        for (std::size_t k = 1; k < r.pivots.size(); ++k)
            EXPECT_LT(r.pivots[k - 1], r.pivots[k]);
    }
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel_basis(RatMatrix(1, 3)).cols(), 3u);
    auto k = kernel_basis(RatMatrix::from_rows({{1, 1}}));
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(k(0, 0), -k(1, 0));
    EXPECT_FALSE(k(0, 0).is_zero());
    EXPECT_EQ(kernel_basis(RatMatrix::identity(2)).cols(), 0u);
}

TEST(Kernel, RankNullity) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_low_rank(rng, 1 + rng() % 5, 1 + rng() % 7, rng() % 4);
        auto k = kernel_basis(m);
        EXPECT_EQ(k.cols() + rank(m), m.cols());
        EXPECT_TRUE((m * k).is_zero());
        EXPECT_EQ(rank(k), k.cols());
    }
}

TEST(Image, Examples) {
    EXPECT_EQ(image_basis(RatMatrix::identity(3)).cols(), 3u);
    auto col = image_basis(RatMatrix::from_rows({{1}, {2}}));
    ASSERT_EQ(col.cols(), 1u);
    EXPECT_EQ(col(1, 0), col(0, 0) * Rational(2));
    EXPECT_EQ(image_basis(RatMatrix::from_rows({{1, 2}, {2, 4}})).cols(), 1u);
}

TEST(Quotient, Examples) {
    EXPECT_EQ(quotient_map(2, RatMatrix(2, 0)), RatMatrix::identity(2));
    auto q = quotient_map(2, RatMatrix::from_rows({{1}, {1}}));
    EXPECT_EQ(q.rows(), 1u);
    EXPECT_EQ(q.cols(), 2u);
    EXPECT_TRUE((q * RatMatrix::from_rows({{1}, {1}})).is_zero());
    EXPECT_EQ(rank(q), 1u);
    auto full = quotient_map(1, RatMatrix::from_rows({{1}}));
    EXPECT_EQ(full.rows(), 0u);
    EXPECT_EQ(full.cols(), 1u);
    EXPECT_THROW(quotient_map(3, RatMatrix(2, 1)), std::invalid_argument);
}

TEST(Quotient, AnnihilatesAndComplements) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 6;
        auto sub = random_low_rank(rng, n, rng() % 5, rng() % 4);
        auto q = quotient(n, sub);
        EXPECT_TRUE((q.projection * sub).is_zero());
        EXPECT_EQ(rank(q.projection) + rank(sub), n);
        // Unit vectors at the complement map to the standard basis.
        for (std::size_t k = 0; k < q.complement.size(); ++k)
            for (std::size_t r = 0; r < q.projection.rows(); ++r)
                EXPECT_EQ(q.projection(r, q.complement[k]), Rational(r == k ? 1 : 0));
    }
}

TEST(Solve, Examples) {
    auto b = RatMatrix::from_rows({{3}, {Rational(1, 2)}});
    EXPECT_EQ(*solve(RatMatrix::identity(2), b), b);
    auto a = RatMatrix::from_rows({{1, 1}});
    auto x = solve(a, RatMatrix::from_rows({{2}}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, RatMatrix::from_rows({{2}}));
    EXPECT_FALSE(solve(RatMatrix::from_rows({{0}}), RatMatrix::from_rows({{1}})).has_value());
}

TEST(Solve, SolvesConsistentSystems) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_low_rank(rng, 1 + rng() % 5, 1 + rng() % 5, 1 + rng() % 3);
        auto truth = random_matrix(rng, a.cols(), 2);
        auto x = solve(a, a * truth);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(a * *x, a * truth);
    }
}

TEST(Inverse, RoundTrip) {
    auto m = RatMatrix::from_rows({{2, 1}, {1, 1}});
    auto inv = inverse(m);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, RatMatrix::identity(2));
    EXPECT_FALSE(inverse(RatMatrix::from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST(Matrix, EmptyShapesAreLegal) {
    RatMatrix a(0, 3);
    RatMatrix b(3, 0);
    EXPECT_EQ((b * a).rows(), 3u);
    EXPECT_TRUE((b * a).is_zero());
    EXPECT_EQ((a * b).rows(), 0u);
    EXPECT_EQ(rank(a), 0u);
    EXPECT_EQ(kernel_basis(a).cols(), 3u);
}

TEST(SparseEchelon, MatchesDenseRank) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_low_rank(rng, 1 + rng() % 6, 1 + rng() % 6, rng() % 4);
        SparseEchelon e(m.rows());
        for (std::size_t c = 0; c < m.cols(); ++c)
            e.insert(sparse_from_column(m, c));
        EXPECT_EQ(e.rank(), rank(m));
        EXPECT_EQ(e.free_columns().size(), m.rows() - rank(m));
        for (std::size_t c = 0; c < m.cols(); ++c)
            EXPECT_TRUE(e.reduce(sparse_from_column(m, c)).empty());
    }
}
