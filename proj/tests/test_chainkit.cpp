#include <gtest/gtest.h>

#include <random>

#include "semihom/chainkit.hpp"
#include "semihom/transport.hpp"

using namespace semihom;

namespace {

// k_bullet: k in every degree, d_n = 0 for odd n and 1 for even n >= 2.
ChainComplex k_bullet(int truncation) {
    std::vector<std::size_t> dims(truncation + 1, 1);
    std::vector<RatMatrix> diff;
    for (int n = 1; n <= truncation; ++n)
        diff.push_back(RatMatrix::from_rows({{n % 2 == 0 ? 1 : 0}}));
    return make_complex(0, truncation, dims, diff);
}

ChainComplex k_at_zero(int truncation) {
    std::vector<std::size_t> dims(truncation + 1, 0);
    dims[0] = 1;
    std::vector<RatMatrix> diff;
    for (int n = 1; n <= truncation; ++n)
        diff.emplace_back(dims[n - 1], dims[n]);
    return make_complex(0, truncation, dims, diff);
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        RatMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = Rational(static_cast<long>(rng() % 7) - 3);
        if (rank(m) == n)
            return m;
    }
}

// Homology dimension by rank-nullity alone: dim C_n - rank d_n - rank d_{n+1}.
std::size_t naive_homology(const ChainComplex& c, int n) {
    return c.dim(n) - rank(c.d(n)) - rank(c.d(n + 1));
}

ChainComplex random_complex(std::mt19937_64& rng, int lower, int truncation) {
    std::vector<Cell> cells;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
        int n = lower + static_cast<int>(rng() % (truncation - lower + 1));
        if (rng() % 2 == 0 && n < truncation)
            cells.push_back(Cell::disk(n + 1));
        else
            cells.push_back(Cell::sphere(n));
    }
    auto plain = disk_sphere_complex(lower, truncation, cells);
    std::vector<RatMatrix> twist;
    for (int n = lower; n <= truncation; ++n)
        twist.push_back(random_invertible(rng, plain.dim(n)));
    return disk_sphere_complex(lower, truncation, cells, &twist);
}

}  // namespace

TEST(Homology, RestrictedEdgeRepresentable) {
    auto c = restrict(Functor::u_delta, representable(Kind::ssimp, 1, 2));
    EXPECT_EQ(c.dim(0), 2u);
    EXPECT_EQ(c.dim(1), 1u);
    auto h = homology(c);
    EXPECT_EQ(h.dim(0), 1u);
    EXPECT_EQ(h.dim(1), 0u);
    EXPECT_EQ(naive_homology(c, 0), 1u);
}

TEST(Homology, KBullet) {
    auto h = homology(k_bullet(6));
    EXPECT_EQ(h.lower, 0);
    EXPECT_EQ(h.upper, 5);
    EXPECT_EQ(h.dim(0), 1u);
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(h.dim(n), 0u);
    EXPECT_THROW(h.at(6), ComplexError);
}

TEST(Homology, ZeroComplex) {
    auto h = homology(zero_complex(-1, 3));
    for (int n = -1; n <= 2; ++n)
        EXPECT_EQ(h.dim(n), 0u);
}

TEST(Homology, BasesAreConsistent) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = random_complex(rng, trial % 2 == 0 ? 0 : -1, 4);
        auto h = homology(c);
        for (int n = h.lower; n <= h.upper; ++n) {
            const auto& hd = h.at(n);
            EXPECT_EQ(hd.dim, naive_homology(c, n));
            EXPECT_TRUE((c.d(n) * hd.cycles).is_zero());
            EXPECT_TRUE((c.d(n) * hd.representatives).is_zero());
            EXPECT_EQ(hd.to_homology * hd.representatives, RatMatrix::identity(hd.dim));
            EXPECT_TRUE((hd.to_homology * hd.boundaries).is_zero());
        }
    }
}

TEST(Homology, EulerIdentity) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        // Cells below the top keep the window closed: d_N and C_N vanish.
        int lower = trial % 2 == 0 ? 0 : -1;
        std::vector<Cell> cells;
        for (int k = 0; k < 4; ++k) {
            int n = lower + static_cast<int>(rng() % 4);
            cells.push_back(rng() % 2 == 0 && n < lower + 3 ? Cell::disk(n + 1) : Cell::sphere(n));
        }
        auto c = disk_sphere_complex(lower, lower + 5, cells);
        auto h = homology(c);
        long chi_c = 0;
        long chi_h = 0;
        for (int n = lower; n <= h.upper; ++n) {
            long s = (n - lower) % 2 == 0 ? 1 : -1;
            chi_c += s * static_cast<long>(c.dim(n));
            chi_h += s * static_cast<long>(h.dim(n));
        }
        EXPECT_EQ(chi_c, chi_h);
    }
}

TEST(HomologyMap, IdentityAndComposition) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 15; ++trial) {
        auto c = random_complex(rng, 0, 4);
        auto id = homology_map(identity_chain_map(c));
        auto h = homology(c);
        for (int n = h.lower; n <= h.upper; ++n)
            EXPECT_EQ(id[n - h.lower], RatMatrix::identity(h.dim(n)));

        // An automorphism P of c: conjugate by a complex isomorphic to c.
        std::vector<RatMatrix> p;
        std::vector<RatMatrix> pinv;
        for (int n = 0; n <= 4; ++n) {
            p.push_back(random_invertible(rng, c.dim(n)));
            pinv.push_back(*inverse(p.back()));
        }
        std::vector<RatMatrix> diff;
        for (int n = 1; n <= 4; ++n)
            diff.push_back(p[n - 1] * c.d(n) * pinv[n]);
        auto d = make_complex(0, 4, c.dims, diff);
        ChainMap f{c, d, p};
        ChainMap g{d, c, pinv};
        ASSERT_TRUE(check_chain_map(f).ok());
        auto hf = homology_map(f);
        auto hg = homology_map(g);
        auto hgf = homology_map(compose(g, f));
        for (std::size_t k = 0; k < hf.size(); ++k)
            EXPECT_EQ(hgf[k], hg[k] * hf[k]);
        EXPECT_TRUE(is_quasi_iso(f).holds);
    }
}

TEST(HomologyMap, ContractibleSummandInclusion) {
    auto sphere = disk_sphere_complex(0, 4, {Cell::sphere(1)});
    auto both = disk_sphere_complex(0, 4, {Cell::sphere(1), Cell::disk(2)});
    std::vector<RatMatrix> comps;
    for (int n = 0; n <= 4; ++n) {
        RatMatrix m(both.dim(n), sphere.dim(n));
        for (std::size_t k = 0; k < sphere.dim(n); ++k)
            m(k, k) = 1;
        comps.push_back(m);
    }
    ChainMap inc{sphere, both, comps};
    ASSERT_TRUE(check_chain_map(inc).ok());
    auto hm = homology_map(inc);
    EXPECT_EQ(hm[1], RatMatrix::identity(1));
    EXPECT_EQ(hm[2].rows(), 0u);
    EXPECT_TRUE(is_quasi_iso(inc).holds);
}

TEST(HomologyMap, PointIntoKBullet) {
    auto src = k_at_zero(5);
    auto tgt = k_bullet(5);
    std::vector<RatMatrix> comps;
    for (int n = 0; n <= 5; ++n)
        comps.emplace_back(tgt.dim(n), src.dim(n));
    comps[0] = RatMatrix::identity(1);
    ChainMap f{src, tgt, comps};
    ASSERT_TRUE(check_chain_map(f).ok());
    auto verdict = is_quasi_iso(f);
    EXPECT_TRUE(verdict.holds);
    EXPECT_EQ(verdict.lower, 0);
    EXPECT_EQ(verdict.upper, 4);
}

TEST(QuasiIso, ZeroMapBetweenSpheres) {
    auto s = disk_sphere_complex(0, 4, {Cell::sphere(2)});
    std::vector<RatMatrix> comps;
    for (int n = 0; n <= 4; ++n)
        comps.emplace_back(s.dim(n), s.dim(n));
    auto verdict = is_quasi_iso(ChainMap{s, s, comps});
    EXPECT_FALSE(verdict.holds);
    EXPECT_EQ(verdict.failing_degree, 2);
}

TEST(CheckChainMap, RejectsNonChainMaps) {
    auto c = disk_sphere_complex(0, 3, {Cell::disk(1)});
    auto f = identity_chain_map(c);
    f.components[0] = RatMatrix(1, 1);
    EXPECT_FALSE(check_chain_map(f).ok());
    EXPECT_THROW(make_complex(0, 2, {1, 1, 1}, {RatMatrix::identity(1), RatMatrix::identity(1)}), ComplexError);
}

TEST(GoodTruncation, AugmentedRepresentable) {
    auto c = augmented_chain(representable(Kind::aug_ssimp, 0, 3));
    EXPECT_EQ(c.d(0), RatMatrix::identity(1));
    auto t = good_truncation(c);
    EXPECT_EQ(t.lower, 0);
    EXPECT_EQ(t.dim(0), 0u);
}

TEST(GoodTruncation, ZeroAugmentationIsBrutal) {
    std::vector<RatMatrix> diff{RatMatrix(1, 2), RatMatrix::from_rows({{1}, {-1}})};
    auto c = make_complex(-1, 1, {1, 2, 1}, diff);
    EXPECT_EQ(good_truncation(c), brutal_truncation(c));
}

TEST(GoodTruncation, KernelDimensionAndHomology) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = random_complex(rng, -1, 4);
        auto t = good_truncation(c);
        EXPECT_EQ(t.dim(0), kernel_basis(c.d(0)).cols());
        auto hc = homology(c);
        auto ht = homology(t);
        auto hb = homology(brutal_truncation(c));
        for (int n = 1; n <= ht.upper; ++n)
            EXPECT_EQ(ht.dim(n), hc.dim(n));
        // 0 -> H_0(tau C) -> H_0(brutal C) -> im d_0 -> 0
        EXPECT_EQ(hb.dim(0), ht.dim(0) + rank(c.d(0)));
        EXPECT_TRUE(check_chain_map(good_truncation_inclusion(c)).ok());
    }
}

TEST(GoodTruncation, RejectsUnaugmentedComplexes) {
    EXPECT_THROW(good_truncation(zero_complex(0, 3)), ComplexError);
}

TEST(Reindex, ShiftRoundTripAndHomology) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        auto c = random_complex(rng, -1, 4);
        auto s = reindex_shift(c, 1);
        EXPECT_EQ(s.lower, 0);
        EXPECT_EQ(reindex_shift(s, -1), c);
        auto hc = homology(c);
        auto hs = homology(s);
        EXPECT_EQ(hs.lower, hc.lower + 1);
        EXPECT_EQ(hs.upper, hc.upper + 1);
        for (int n = hs.lower; n <= hs.upper; ++n)
            EXPECT_EQ(hs.dim(n), hc.dim(n - 1));
    }
    EXPECT_THROW(reindex_shift(zero_complex(0, 2), 1), ComplexError);
}

TEST(DiskSphere, Examples) {
    auto disk = homology(disk_sphere_complex(0, 4, {Cell::disk(2)}));
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(disk.dim(n), 0u);
    auto sphere = homology(disk_sphere_complex(0, 4, {Cell::sphere(1)}));
    EXPECT_EQ(sphere.dim(1), 1u);
    EXPECT_EQ(sphere.dim(0), 0u);

    std::mt19937_64 rng(12);
    auto plain = disk_sphere_complex(0, 3, {Cell::sphere(0), Cell::disk(1)});
    std::vector<RatMatrix> twist;
    for (int n = 0; n <= 3; ++n)
        twist.push_back(random_invertible(rng, plain.dim(n)));
    auto twisted = disk_sphere_complex(0, 3, {Cell::sphere(0), Cell::disk(1)}, &twist);
    EXPECT_TRUE(validate(twisted).ok());
    auto h = homology(twisted);
    EXPECT_EQ(h.dim(0), 1u);
    EXPECT_EQ(h.dim(1), 0u);
    EXPECT_EQ(h.dim(2), 0u);
}

TEST(ModuleBridge, RoundTrips) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        auto c = random_complex(rng, trial % 2 == 0 ? 0 : -1, 4);
        auto x = to_module(c);
        EXPECT_EQ(x.kind(), c.lower == 0 ? Kind::chain0 : Kind::chain_neg1);
        EXPECT_EQ(to_complex(x), c);
        auto f = identity_chain_map(c);
        EXPECT_EQ(to_chain_map(to_module_map(f)).components, f.components);
    }
}
