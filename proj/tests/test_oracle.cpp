#include <gtest/gtest.h>

#include <set>

#include "semihom/io.hpp"
#include "semihom/oracle.hpp"

using namespace semihom;

namespace {

CorpusSpec small_spec(std::uint64_t seed) {
    CorpusSpec s;
    s.seed = seed;
    s.truncation = 3;
    s.max_dim = 5;
    s.representables = 3;
    s.induced = 3;
    s.direct_sums = 2;
    s.yoneda_maps = 2;
    return s;
}

long choose(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

const CheckResult* find(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

}  // namespace

TEST(Corpus, Deterministic) {
    auto a = generate_corpus(small_spec(3));
    auto b = generate_corpus(small_spec(3));
    ASSERT_EQ(a.modules.size(), b.modules.size());
    for (std::size_t i = 0; i < a.modules.size(); ++i) {
        EXPECT_EQ(a.modules[i].name, b.modules[i].name);
        EXPECT_EQ(dump_module(a.modules[i].module), dump_module(b.modules[i].module));
    }
    ASSERT_EQ(a.maps.size(), b.maps.size());
    for (std::size_t i = 0; i < a.maps.size(); ++i)
        EXPECT_EQ(dump_canonical(map_to_json(a.maps[i].map)), dump_canonical(map_to_json(b.maps[i].map)));
}

TEST(Corpus, ModulesValidateAndFit) {
    auto spec = small_spec(5);
    auto c = generate_corpus(spec);
    EXPECT_EQ(c.modules.size(), spec.module_count());
    for (const auto& m : c.modules) {
        EXPECT_TRUE(validate(m.module.data()).ok()) << m.name;
        EXPECT_EQ(m.module.truncation(), spec.truncation);
        EXPECT_EQ(m.module.dim(spec.truncation), 0u) << m.name;
        for (int n = m.module.min_degree(); n <= spec.truncation; ++n)
            EXPECT_LE(m.module.dim(n), spec.max_dim) << m.name;
    }
    for (const auto& s : c.sources) {
        EXPECT_TRUE(validate(s.source.data()).ok());
        auto r = induce(s.along, s.source);
        EXPECT_EQ(r.module, c.modules[s.module_index].module);
    }
    for (const auto& f : c.maps)
        EXPECT_TRUE(check_map(f.map).ok()) << f.name;
}

TEST(Corpus, EmptySpec) {
    auto spec = small_spec(1);
    spec.representables = spec.induced = spec.direct_sums = spec.yoneda_maps = 0;
    auto c = generate_corpus(spec);
    EXPECT_TRUE(c.modules.empty());
    EXPECT_TRUE(c.maps.empty());
}

TEST(Corpus, SpecBounds) {
    auto spec = small_spec(1);
    EXPECT_NO_THROW(check_spec(spec, 8));
    spec.truncation = 1;
    EXPECT_THROW(check_spec(spec, 8), std::invalid_argument);
    spec.truncation = 9;
    EXPECT_THROW(check_spec(spec, 8), std::invalid_argument);
    spec.truncation = 3;
    spec.max_dim = 0;
    EXPECT_THROW(check_spec(spec, 8), std::invalid_argument);
}

TEST(WeakEquivalence, IdentityAndZero) {
    for (Kind k : {Kind::ssimp, Kind::aug_ssimp, Kind::scube, Kind::chain0}) {
        auto x = representable(k, 1, 3);
        auto v = check_weak_equivalence(identity_map(x));
        EXPECT_TRUE(v.holds) << to_string(k);
        EXPECT_TRUE(v.agree);
        EXPECT_GE(v.conditions.size(), 1u);
    }
    // The constant-k representable at [0] has H_0 = k, so zero on it is not a weq.
    auto x = representable(Kind::ssimp, 0, 3);
    auto z = check_weak_equivalence(zero_map(x, x));
    EXPECT_FALSE(z.holds);
    EXPECT_TRUE(z.agree);
}

TEST(WeakEquivalence, VUnitOnTheAugmentedPoint) {
    auto eta = unit_map(Functor::v, representable(Kind::aug_ssimp, 0, 4));
    auto v = check_weak_equivalence(eta);
    EXPECT_FALSE(v.holds);
    EXPECT_TRUE(v.agree);
    EXPECT_FALSE(v.witness.empty());
}

TEST(Fibration, Fixtures) {
    auto x = representable(Kind::scube, 2, 3);
    auto y = representable(Kind::scube, 1, 3);
    auto zero = DiagramModule::zero(Kind::scube, 3);
    EXPECT_TRUE(check_fibration(zero_map(x, zero)).holds);
    EXPECT_FALSE(check_fibration(zero_map(x, y)).holds);

    // The projection X + Y -> X is onto.
    auto s = direct_sum(x, y);
    ModuleMap p{s, x, {}};
    for (int n = 0; n <= 3; ++n) {
        RatMatrix m(x.dim(n), s.dim(n));
        for (std::size_t k = 0; k < x.dim(n); ++k)
            m(k, k) = 1;
        p.components.push_back(m);
    }
    ASSERT_TRUE(check_map(p).ok());
    EXPECT_TRUE(check_fibration(p).holds);
}

TEST(BruteForce, HomCounts) {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m) {
            EXPECT_EQ(static_cast<long>(brute_force_injections(m, n)), choose(n + 1, m + 1));
            EXPECT_EQ(static_cast<long>(brute_force_cube_maps(m, n)), choose(n, m) << (n - m));
        }
}

TEST(Counterexample, Reproduces) {
    auto r = run_counterexample();
    EXPECT_TRUE(r.ok());
    bool expected = false;
    for (const auto& c : r.checks)
        expected = expected || c.verdict == Verdict::expected_failure;
    EXPECT_TRUE(expected);
    auto text = report_to_json(r).dump();
    auto back = report_from_json(report_to_json(r));
    EXPECT_EQ(report_to_json(back).dump(), text);
    EXPECT_NE(report_table(r).find("OK"), std::string::npos);
}

TEST(Battery, ThreadCountDoesNotChangeTheReport) {
    auto spec = small_spec(2);
    auto one = report_to_json(run_battery(spec, 1)).dump();
    auto three = report_to_json(run_battery(spec, 3)).dump();
    EXPECT_EQ(one, three);
}

TEST(Battery, StructuralChecksAloneOnEmptyCorpus) {
    auto spec = small_spec(1);
    spec.representables = spec.induced = spec.direct_sums = spec.yoneda_maps = 0;
    auto r = run_battery(spec, 1);
    EXPECT_TRUE(r.ok());
    EXPECT_NE(find(r, "coface_relations"), nullptr);
    EXPECT_NE(find(r, "freeness_bases"), nullptr);
    EXPECT_EQ(find(r, "module_roundtrip"), nullptr);
}

TEST(Battery, FailuresAreConfinedToTheUDeltaAdjunction) {
    // The u_delta unit and counit are not weak equivalences in general (the
    // disk D[1] induces the 1-simplex, whose H_0 is k); every other check passes.
    auto r = run_battery(small_spec(4), 1);
    std::set<std::string> failing;
    for (const auto& c : r.checks)
        if (c.verdict == Verdict::fail || c.verdict == Verdict::unexpected_pass)
            failing.insert(c.name);
    for (const auto& name : failing)
        EXPECT_TRUE(name == "unit_u_delta" || name == "counit_u_delta") << name;
    bool expected = false;
    for (const auto& c : r.checks)
        expected = expected || (c.name == "counterexample" && c.verdict == Verdict::expected_failure);
    EXPECT_TRUE(expected);
}
