#include <gtest/gtest.h>

#include <set>

#include "hsspos/root_system.hpp"

using namespace hsspos;

namespace {

Root r(std::initializer_list<int> coords) {
    std::vector<int> twice;
    for (int c : coords) twice.push_back(2 * c);
    return Root(twice);
}

// Every vector of squared length 2 in the E8 lattice (coordinates all integers
// or all in Z+1/2, even coordinate sum) that is orthogonal to the given
// vectors.  Coordinates are scanned over {-1,-1/2,0,1/2,1}, which contains
// every norm-2 lattice vector.
std::set<std::vector<int>> lattice_roots(const std::vector<std::vector<int>>& orthogonal_to) {
    std::set<std::vector<int>> out;
    std::vector<int> t(8, -2);
    for (;;) {
        bool all_even = true, all_odd = true;
        int norm4 = 0, sum2 = 0;
        for (int x : t) {
            all_even &= x % 2 == 0;
            all_odd &= x % 2 != 0;
            norm4 += x * x;
            sum2 += x;
        }
        if ((all_even || all_odd) && norm4 == 8 && sum2 % 4 == 0) {
            bool ok = true;
            for (const auto& o : orthogonal_to) {
                int dot = 0;
                for (int i = 0; i < 8; ++i) dot += t[std::size_t(i)] * o[std::size_t(i)];
                ok &= dot == 0;
            }
            if (ok) out.insert(t);
        }
        std::size_t i = 0;
        while (i < 8 && t[i] == 2) t[i++] = -2;
        if (i == 8) break;
        ++t[i];
    }
    return out;
}

std::set<std::vector<int>> as_set(const RootSystem& rs) {
    std::set<std::vector<int>> out;
    for (const auto& root : rs.roots()) out.insert(root.twice());
    return out;
}

} // namespace

TEST(RootSystem, ClassicalCounts) {
    EXPECT_EQ(build_root_system(Family::A, 3).size(), 12u);
    EXPECT_EQ(build_root_system(Family::B, 2).size(), 8u);
    EXPECT_EQ(build_root_system(Family::C, 4).size(), 32u);
    EXPECT_EQ(build_root_system(Family::D, 5).size(), 40u);
    EXPECT_EQ(build_root_system(Family::E6, 6).size(), 72u);
    EXPECT_EQ(build_root_system(Family::E7, 7).size(), 126u);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(build_root_system(Family::A, n).size(), std::size_t(n * (n + 1)));
}

TEST(RootSystem, A3IsEveryDifferenceOfUnitVectors) {
    const auto rs = build_root_system(Family::A, 3);
    std::set<std::vector<int>> expected;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) expected.insert((Root::unit(4, std::size_t(i)) - Root::unit(4, std::size_t(j))).twice());
    EXPECT_EQ(as_set(rs), expected);
}

TEST(RootSystem, E7MatchesLatticeEnumeration) {
    // e7 + e8 in doubled coordinates
    const std::vector<int> w1{0, 0, 0, 0, 0, 0, 2, 2};
    const auto lattice = lattice_roots({w1});
    EXPECT_EQ(lattice.size(), 126u);
    EXPECT_EQ(as_set(build_root_system(Family::E7, 7)), lattice);
}

TEST(RootSystem, E6MatchesLatticeEnumeration) {
    const std::vector<int> w1{0, 0, 0, 0, 0, 0, 2, 2};
    const std::vector<int> w2{0, 0, 0, 0, 0, -2, 2, 0};
    const auto lattice = lattice_roots({w1, w2});
    EXPECT_EQ(lattice.size(), 72u);
    EXPECT_EQ(as_set(build_root_system(Family::E6, 6)), lattice);
}

TEST(RootSystem, RankBoundsAreConfigErrors) {
    EXPECT_THROW(build_root_system(Family::D, 2), ConfigError);
    EXPECT_THROW(build_root_system(Family::A, 0), ConfigError);
    EXPECT_THROW(build_root_system(Family::B, 1), ConfigError);
    EXPECT_THROW(build_root_system(Family::C, 1), ConfigError);
    EXPECT_THROW(build_root_system(Family::E6, 7), ConfigError);
    EXPECT_THROW(build_root_system(Family::E7, 6), ConfigError);
    try {
        build_root_system(Family::D, 2);
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("rank"), std::string::npos);
    }
    EXPECT_NO_THROW(build_root_system(Family::D, 3));
    EXPECT_THROW(parse_family("F4"), ConfigError);
}

TEST(RootSystem, IsRoot) {
    const auto a3 = build_root_system(Family::A, 3);
    EXPECT_TRUE(a3.is_root(r({1, 0, -1, 0})));
    EXPECT_FALSE(a3.is_root(r({1, -1, -1, 1})));
    EXPECT_FALSE(a3.is_root(r({0, 0, 0, 0})));
    EXPECT_THROW(a3.is_root(r({1, -1})), ArgumentError);
    const auto b2 = build_root_system(Family::B, 2);
    EXPECT_TRUE(b2.is_root(r({1, 0})));
    EXPECT_FALSE(b2.is_root(r({2, 0})));
    const auto c2 = build_root_system(Family::C, 2);
    EXPECT_TRUE(c2.is_root(r({2, 0})));
    EXPECT_FALSE(c2.is_root(r({1, 0})));
}

TEST(RootSystem, InnerProductNormalization) {
    const auto a3 = build_root_system(Family::A, 3);
    EXPECT_EQ(a3.inner(r({1, 0, -1, 0}), r({1, 0, 0, -1})), 1);
    EXPECT_EQ(a3.inner(r({1, 0, -1, 0}), r({0, 1, 0, -1})), 0);
    const auto b3 = build_root_system(Family::B, 3);
    EXPECT_EQ(b3.inner(r({1, 0, 0}), r({1, 0, 0})), 1);
    EXPECT_EQ(b3.inner(r({1, -1, 0}), r({1, -1, 0})), 2);
    const auto c3 = build_root_system(Family::C, 3);
    EXPECT_EQ(c3.inner(r({2, 0, 0}), r({2, 0, 0})), 2);
    EXPECT_EQ(c3.inner(r({1, 1, 0}), r({1, 1, 0})), 1);
    const auto e7 = build_root_system(Family::E7, 7);
    for (RootSystem::Index i = 0; i < RootSystem::Index(e7.size()); ++i) EXPECT_EQ(e7.inner(i, i), 2);
}

TEST(RootSystem, RootStrings) {
    const auto a3 = build_root_system(Family::A, 3);
    auto s = root_string(a3, r({1, -1, 0, 0}), r({0, 1, -1, 0}));
    EXPECT_EQ(s.down, 0);
    EXPECT_EQ(s.up, 1);
    s = root_string(a3, r({1, -1, 0, 0}), r({0, 0, 1, -1}));
    EXPECT_EQ(s.down, 0);
    EXPECT_EQ(s.up, 0);
    const auto b2 = build_root_system(Family::B, 2);
    s = root_string(b2, r({0, 1}), r({1, -1}));
    EXPECT_EQ(s.down, 0);
    EXPECT_EQ(s.up, 2);
    EXPECT_THROW(root_string(b2, r({0, 1}), r({0, 1})), ArgumentError);
    EXPECT_THROW(root_string(b2, r({0, 1}), r({0, -1})), ArgumentError);
}

TEST(RootSystem, StringLengthsMatchCartanIntegers) {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::E6, 6}}) {
        const auto rs = build_root_system(f, n);
        const auto size = RootSystem::Index(rs.size());
        for (RootSystem::Index a = 0; a < size; ++a)
            for (RootSystem::Index b = 0; b < size; ++b) {
                if (a == b || a == rs.negative(b)) continue;
                const auto s = root_string(rs, a, b);
                EXPECT_EQ(s.down - s.up, rs.cartan(b, a));
                // -2(b,a)/(a,a) from plain coordinates
                EXPECT_EQ(Rational(s.down - s.up),
                          2 * rs.inner(rs.root(a), rs.root(b)) / rs.inner(rs.root(a), rs.root(a)));
            }
    }
}

TEST(RootSystem, WeylClosureAndPositivity) {
    const auto rs = build_root_system(Family::C, 4);
    const auto size = RootSystem::Index(rs.size());
    for (RootSystem::Index a = 0; a < size; ++a) {
        for (RootSystem::Index b = 0; b < size; ++b) EXPECT_TRUE(rs.is_root(rs.reflect(a, b)));
        const auto& k = rs.simple_coefficients(a);
        for (int c : k) EXPECT_TRUE(rs.is_positive(a) ? c >= 0 : c <= 0);
        EXPECT_EQ(rs.root(rs.negative(a)), -rs.root(a));
    }
}

TEST(RootSystem, BourbakiSimpleRoots) {
    const auto b3 = build_root_system(Family::B, 3);
    EXPECT_EQ(b3.simple_root(0), r({1, -1, 0}));
    EXPECT_EQ(b3.simple_root(2), r({0, 0, 1}));
    const auto c3 = build_root_system(Family::C, 3);
    EXPECT_EQ(c3.simple_root(2), r({0, 0, 2}));
    const auto d4 = build_root_system(Family::D, 4);
    EXPECT_EQ(d4.simple_root(3), r({0, 0, 1, 1}));
    const auto a3 = build_root_system(Family::A, 3);
    EXPECT_EQ(a3.root(a3.highest_root()), r({1, 0, 0, -1}));
}

TEST(RootSystem, CanonicalOrderIsHeightThenCoordinates) {
    const auto rs = build_root_system(Family::D, 5);
    for (RootSystem::Index i = 1; i < RootSystem::Index(rs.positive_count()); ++i) {
        EXPECT_LE(rs.height(i - 1), rs.height(i));
        if (rs.height(i - 1) == rs.height(i)) {
            EXPECT_LT(rs.root(i - 1), rs.root(i));
        }
    }
}

TEST(RootSystem, NamesRoundTrip) {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::C, 3}, {Family::B, 3}, {Family::E7, 7}}) {
        const auto rs = build_root_system(f, n);
        for (const auto& root : rs.roots()) {
            EXPECT_EQ(parse_root(root.name(), rs.ambient_dim()), root);
            EXPECT_EQ(parse_root(root.name(true), rs.ambient_dim()), root);
        }
    }
    EXPECT_EQ(r({1, 0, -1}).name(), "e1-e3");
    EXPECT_EQ(r({2, 0}).name(), "2e1");
    EXPECT_EQ(parse_root(" e1 + e2 ", 3), r({1, 1, 0}));
    EXPECT_THROW(parse_root("e4", 3), ArgumentError);
    EXPECT_THROW(parse_root("e1e2", 3), ArgumentError);
    EXPECT_THROW(parse_root("[1,2]", 3), ArgumentError);
    EXPECT_THROW(parse_root("[1/3,0,0]", 3), ArgumentError);
    EXPECT_THROW(parse_root("", 3), ArgumentError);
}
