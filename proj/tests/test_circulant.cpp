#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "tdc/circulant.hpp"

namespace tdc {
namespace {

TEST(BuildCirculant, SixWithOneThreeIsCompleteBipartite) {
    auto g = build_circulant(6, {1, 3});
    EXPECT_EQ(g.regular_degree(), 3);
    for (int u = 1; u <= 6; ++u)
        for (int v = 1; v <= 6; ++v)
            EXPECT_EQ(g.adjacent(u, v), (u % 2) != (v % 2)) << u << "," << v;
}

TEST(BuildCirculant, EightWithOneThree) {
    auto g = build_circulant(8, {1, 3});
    EXPECT_EQ(g.neighbors(1).to_vector(), (std::vector<int>{2, 4, 6, 8}));
    for (int v = 1; v <= 8; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(BuildCirculant, FiveWithOneTwoIsComplete) {
    auto g = build_circulant(5, {1, 2});
    for (int u = 1; u <= 5; ++u) EXPECT_EQ(g.degree(u), 4);
}

TEST(BuildCirculant, NormalizesGenerators) {
    auto g = build_circulant(10, {9, 13});
    EXPECT_EQ(g.connection_set(), std::vector<int>({1, 3}));
    EXPECT_TRUE(g.is_standard());
    EXPECT_THROW(build_circulant(10, {9, 13, 29}), InvalidInput);
    EXPECT_EQ(build_circulant(10, {9, 13, 29}, GeneratorPolicy::merge).connection_set(), std::vector<int>({1, 3}));
}

TEST(BuildCirculant, Errors) {
    EXPECT_THROW(build_circulant(2, {1}), InvalidInput);
    EXPECT_THROW(build_circulant(8, {8}), InvalidInput);
    EXPECT_THROW(build_circulant(8, {1, 7}), InvalidInput);
    EXPECT_THROW(build_circulant(8, {}), InvalidInput);
    EXPECT_THROW(build_circulant(4, {1, 3}), InvalidInput);
}

TEST(BuildCirculant, MergePolicyGivesDegenerateStandardGraphs) {
    auto c3 = standard_graph(3);
    EXPECT_EQ(c3.connection_set(), std::vector<int>({1}));
    EXPECT_EQ(c3.regular_degree(), 2);
    auto c4 = standard_graph(4);
    EXPECT_EQ(c4.connection_set(), std::vector<int>({1}));
    EXPECT_EQ(c4.edges().size(), 4u);
    EXPECT_TRUE(c4.is_standard());
}

// Degree formula, symmetry, no loops, and edge rule against the naive oracle.
TEST(BuildCirculant, PropertiesOverAllSmallConnectionSets) {
    for (int n = 3; n <= 16; ++n) {
        for (unsigned mask = 1; mask < (1U << (n / 2)); ++mask) {
            std::vector<int> s;
            for (int d = 1; d <= n / 2; ++d)
                if (mask >> (d - 1) & 1U) s.push_back(d);
            auto g = build_circulant(n, s);
            int k = 2 * static_cast<int>(s.size()) - (n % 2 == 0 && s.back() == n / 2 ? 1 : 0);
            EXPECT_EQ(g.regular_degree(), k);
            for (int u = 1; u <= n; ++u) {
                EXPECT_EQ(g.degree(u), k);
                EXPECT_FALSE(g.adjacent(u, u));
                for (int v = 1; v <= n; ++v) {
                    EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
                    ASSERT_EQ(g.adjacent(u, v), oracle::adjacent(n, u, v, s)) << n << " " << u << " " << v;
                }
            }
        }
    }
}

TEST(Reduce, SevenTwoSix) {
    auto r = reduce_to_standard(7, 2, 6);
    EXPECT_EQ(r.a_inverse, 4);
    EXPECT_EQ(r.standard_c, 3);
    EXPECT_EQ(r.map(1), 4);
    EXPECT_EQ(r.map(2), 1);
    EXPECT_TRUE(verify_isomorphism(build_circulant(7, {2, 6}), build_circulant(7, {1, 3}), r.vertex_map));
}

TEST(Reduce, IdentityWhenAIsOne) {
    for (int n : {7, 8, 13, 20}) {
        auto r = reduce_to_standard(n, 1, 3);
        EXPECT_EQ(r.standard_c, 3);
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 1);
        EXPECT_EQ(r.vertex_map, id);
    }
}

TEST(Reduce, ElevenFourOne) {
    auto r = reduce_to_standard(11, 4, 1);
    EXPECT_EQ(r.a_inverse, 3);
    EXPECT_EQ(r.raw_c, 3);
    EXPECT_EQ(r.standard_c, 3);
    EXPECT_TRUE(verify_isomorphism(build_circulant(11, {4, 1}), build_circulant(11, {1, 3}), r.vertex_map));
}

TEST(Reduce, FoldsLargeC) {
    // 1^{-1} * 8 = 8 = -3 mod 11
    auto r = reduce_to_standard(11, 1, 8);
    EXPECT_EQ(r.raw_c, 8);
    EXPECT_EQ(r.standard_c, 3);
}

TEST(Reduce, RejectsNonUnitA) {
    EXPECT_THROW(reduce_to_standard(8, 2, 3), InvalidInput);
    EXPECT_THROW(reduce_to_standard(9, 3, 1), InvalidInput);
    EXPECT_THROW(reduce_to_standard(9, 9, 1), InvalidInput);
    EXPECT_THROW(reduce_to_standard(9, 1, 0), InvalidInput);
}

TEST(Reduce, AllUnitPairsPreserveEdges) {
    for (int n = 3; n <= 16; ++n)
        for (int a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            for (int b = 1; b < n; ++b) {
                auto r = reduce_to_standard(n, a, b);
                auto g1 = build_circulant(n, {a, b}, GeneratorPolicy::merge);
                auto g2 = build_circulant(n, {1, r.standard_c}, GeneratorPolicy::merge);
                ASSERT_TRUE(verify_isomorphism(g1, g2, r.vertex_map)) << n << " " << a << " " << b;
            }
        }
}

TEST(VerifyIsomorphism, IdentityAndNonIsomorphic) {
    auto g = build_circulant(8, {1, 3});
    std::vector<int> id{1, 2, 3, 4, 5, 6, 7, 8};
    EXPECT_TRUE(verify_isomorphism(g, g, id));
    auto h = build_circulant(8, {1, 2});
    EXPECT_TRUE(g.adjacent(1, 4));
    EXPECT_FALSE(h.adjacent(1, 4));
    EXPECT_FALSE(verify_isomorphism(g, h, id));
}

TEST(VerifyIsomorphism, Errors) {
    auto g8 = build_circulant(8, {1, 3});
    auto g9 = build_circulant(9, {1, 3});
    std::vector<int> id8{1, 2, 3, 4, 5, 6, 7, 8};
    EXPECT_THROW(verify_isomorphism(g8, g9, id8), InvalidInput);
    EXPECT_THROW(verify_isomorphism(g8, g8, {1, 1, 3, 4, 5, 6, 7, 8}), InvalidInput);
    EXPECT_THROW(verify_isomorphism(g8, g8, {1, 2, 3}), InvalidInput);
    EXPECT_THROW(verify_isomorphism(g8, g8, {0, 2, 3, 4, 5, 6, 7, 8}), InvalidInput);
}

TEST(ModInverse, MatchesDefinition) {
    for (int n = 2; n <= 40; ++n)
        for (int a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) {
                EXPECT_THROW(mod_inverse(a, n), InvalidInput);
                continue;
            }
            EXPECT_EQ((static_cast<long long>(mod_inverse(a, n)) * a) % n, 1 % n);
        }
}

}  // namespace
}  // namespace tdc
