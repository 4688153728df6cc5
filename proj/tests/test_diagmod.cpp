#include <gtest/gtest.h>

#include <random>

#include "semihom/diagmod.hpp"

using namespace semihom;

namespace {

const Kind kAllKinds[] = {Kind::ssimp, Kind::aug_ssimp, Kind::scube, Kind::chain0, Kind::chain_neg1};

std::size_t count_injections(int m, int n) {
    if (m == -1)
        return 1;
    if (n < m)
        return 0;
    return count_injections(m, n - 1) + count_injections(m - 1, n - 1);
}

// Precomposition by f on A(-, c), built from the composition table alone.
RatMatrix precomposition(Kind kind, int c, const Morphism& f) {
    const auto& from = hom_basis(kind, target_of(f), c);
    const auto& to = hom_basis(kind, source_of(f), c);
    RatMatrix m(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        auto product = compose(from[j], f);
        for (const auto& [h, coeff] : product.terms())
            m(hom_index(kind, h), j) += coeff;
    }
    return m;
}

ModuleData ssimp_line(int truncation) {
    ModuleData d;
    d.kind = Kind::ssimp;
    d.truncation = truncation;
    d.dims.assign(truncation + 1, 1);
    for (const auto& g : all_generators(Kind::ssimp, truncation))
        d.actions[g] = RatMatrix::identity(1);
    return d;
}

}  // namespace

TEST(Validate, RepresentablesAreModules) {
    for (Kind k : kAllKinds)
        for (int n = 0; n <= 6; ++n)
            for (int c = min_degree(k); c <= n; ++c)
                EXPECT_TRUE(validate(representable(k, c, n).data()).ok()) << to_string(k) << " c=" << c;
}

TEST(Validate, ZeroModuleIsValid) {
    for (Kind k : kAllKinds)
        EXPECT_TRUE(validate(DiagramModule::zero(k, 4).data()).ok());
}

TEST(Validate, ReportsTheBrokenRelation) {
    // All faces equal to 1 is the constant module; changing delta 2 2 breaks
    // delta^2 delta^0 = delta^0 delta^1 read contravariantly in degree 2.
    auto d = ssimp_line(3);
    EXPECT_TRUE(validate(d).ok());
    d.actions[GeneratorId::delta(2, 2)] = RatMatrix::from_rows({{2}});
    auto report = validate(d);
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.violation->degree, 2);
    EXPECT_THROW(DiagramModule{d}, ModuleError);
}

TEST(Validate, ChainKindsRequireSquareZero) {
    ModuleData d;
    d.kind = Kind::chain0;
    d.truncation = 2;
    d.dims = {1, 1, 1};
    d.actions[GeneratorId::omega_d(1)] = RatMatrix::identity(1);
    d.actions[GeneratorId::omega_d(2)] = RatMatrix::identity(1);
    auto report = validate(d);
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.violation->degree, 2);
}

TEST(Validate, RejectsBadShapes) {
    auto d = ssimp_line(2);
    d.actions[GeneratorId::delta(0, 1)] = RatMatrix(2, 1);
    EXPECT_FALSE(validate(d).ok());
    auto missing = ssimp_line(2);
    missing.actions.erase(GeneratorId::delta(1, 2));
    EXPECT_FALSE(validate(missing).ok());
    auto extra = ssimp_line(2);
    extra.actions[GeneratorId::delta(0, 3)] = RatMatrix(1, 1);
    EXPECT_FALSE(validate(extra).ok());
}

TEST(Representable, Examples) {
    auto cube = representable(Kind::scube, 1, 4);
    EXPECT_EQ(cube.dim(0), 2u);
    EXPECT_EQ(cube.dim(1), 1u);
    for (int n = 2; n <= 4; ++n)
        EXPECT_EQ(cube.dim(n), 0u);

    auto aug = representable(Kind::aug_ssimp, 0, 3);
    EXPECT_EQ(aug.dim(-1), 1u);
    EXPECT_EQ(aug.dim(0), 1u);
    EXPECT_EQ(aug.dim(1), 0u);
    EXPECT_EQ(aug.action(GeneratorId::delta(0, 0)), RatMatrix::identity(1));
}

TEST(Representable, DimsMatchHomCounts) {
    for (int c = 0; c <= 4; ++c) {
        auto x = representable(Kind::ssimp, c, 5);
        for (int n = 0; n <= 5; ++n)
            EXPECT_EQ(x.dim(n), count_injections(n, c));
    }
    auto minimal = representable(Kind::aug_ssimp, -1, 3);
    EXPECT_EQ(minimal.dim(-1), 1u);
    EXPECT_EQ(minimal.total_dim(), 1u);
}

TEST(Act, Examples) {
    auto x = representable(Kind::ssimp, 3, 4);
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(act(x, LinComb(InjMap::identity(n))), RatMatrix::identity(x.dim(n)));
    for (int n = 1; n <= 4; ++n) {
        RatMatrix sum(x.dim(n - 1), x.dim(n));
        for (int i = 0; i <= n; ++i)
            sum += x.action(GeneratorId::delta(i, n)) * Rational(i % 2 == 0 ? 1 : -1);
        EXPECT_EQ(act(x, apply_functor(Functor::u_delta, GeneratorId::omega_d(n))), sum);
    }
    auto y = representable(Kind::scube, 2, 3);
    EXPECT_EQ(act(y, apply_functor(Functor::v, GeneratorId::delta(0, 0))),
              y.action(GeneratorId::cube(1, 1, 1)) - y.action(GeneratorId::cube(1, 0, 1)));
}

TEST(Act, AgreesWithPrecomposition) {
    for (Kind k : kAllKinds)
        for (int c = min_degree(k); c <= 4; ++c) {
            auto x = representable(k, c, 4);
            for (int n = min_degree(k); n <= 4; ++n)
                for (int m = min_degree(k); m <= n; ++m)
                    for (const auto& f : hom_basis(k, m, n))
                        EXPECT_EQ(act(x, f), precomposition(k, c, f)) << to_string(f) << " c=" << c;
        }
}

TEST(Act, Multiplicative) {
    auto x = direct_sum(representable(Kind::scube, 2, 4), representable(Kind::scube, 3, 4));
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= n; ++m)
            for (int l = 0; l <= m; ++l)
                for (const auto& g : hom_basis(Kind::scube, m, n))
                    for (const auto& f : hom_basis(Kind::scube, l, m))
                        EXPECT_EQ(act(x, compose(g, f)), act(x, f) * act(x, g));
}

TEST(CheckMap, IdentityYonedaAndPerturbation) {
    auto x = representable(Kind::aug_ssimp, 2, 3);
    EXPECT_TRUE(check_map(identity_map(x)).ok());
    auto y = yoneda_map(Kind::aug_ssimp, LinComb(InjMap::coface(1, 2)), 3);
    EXPECT_TRUE(check_map(y).ok());
    auto broken = y;
    broken.components[1](0, 0) += Rational(1);
    EXPECT_FALSE(check_map(broken).ok());
}

TEST(Yoneda, ComponentOfACoface) {
    auto f = yoneda_map(Kind::scube, LinComb(CubeMap::coface(1, 0, 1)), 2);
    EXPECT_EQ(f.source, representable(Kind::scube, 0, 2));
    EXPECT_EQ(f.target, representable(Kind::scube, 1, 2));
    const auto& c0 = f.component(0);
    ASSERT_EQ(c0.rows(), 2u);
    ASSERT_EQ(c0.cols(), 1u);
    std::size_t expected = hom_index(Kind::scube, CubeMap::coface(1, 0, 1));
    for (std::size_t r = 0; r < 2; ++r)
        EXPECT_EQ(c0(r, 0), Rational(r == expected ? 1 : 0));
}

TEST(Yoneda, RespectsComposition) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        int a = static_cast<int>(rng() % 3);
        int b = a + static_cast<int>(rng() % 2);
        int c = b + static_cast<int>(rng() % 2);
        const auto& hb = hom_basis(Kind::scube, a, b);
        const auto& hc = hom_basis(Kind::scube, b, c);
        LinComb h(a, b);
        LinComb g(b, c);
        for (const auto& m : hb)
            h += LinComb(m, Rational(static_cast<long>(rng() % 5) - 2));
        for (const auto& m : hc)
            g += LinComb(m, Rational(static_cast<long>(rng() % 5) - 2));
        auto lhs = yoneda_map(Kind::scube, compose(g, h), 4);
        auto rhs = compose(yoneda_map(Kind::scube, g, 4), yoneda_map(Kind::scube, h, 4));
        EXPECT_EQ(lhs.components, rhs.components);
    }
}

TEST(DirectSum, DimsAddAndZeroIsNeutral) {
    auto x = representable(Kind::ssimp, 2, 3);
    auto y = representable(Kind::ssimp, 3, 3);
    auto s = direct_sum(x, y);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(s.dim(n), x.dim(n) + y.dim(n));
    auto z = direct_sum(x, DiagramModule::zero(Kind::ssimp, 3));
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(z.dim(n), x.dim(n));
    EXPECT_EQ(z, x);
    EXPECT_THROW(direct_sum(x, representable(Kind::scube, 1, 3)), ModuleError);
    EXPECT_TRUE(check_map(direct_sum(identity_map(x), zero_map(y, y))).ok());
}

TEST(Truncate, KeepsLowDegrees) {
    auto x = representable(Kind::scube, 3, 4);
    auto t = truncate(x, 2);
    EXPECT_EQ(t.truncation(), 2);
    for (int n = 0; n <= 2; ++n)
        EXPECT_EQ(t.dim(n), x.dim(n));
    EXPECT_TRUE(validate(t.data()).ok());
    EXPECT_TRUE(check_map(truncate(identity_map(x), 2)).ok());
}
