#include <gtest/gtest.h>

#include <set>

#include "hsspos/hss_catalog.hpp"

using namespace hsspos;

namespace {

Root r(std::initializer_list<int> coords) {
    std::vector<int> twice;
    for (int c : coords) twice.push_back(2 * c);
    return Root(twice);
}

std::set<Root> psi_set(const HermitianSpace& s) {
    const auto v = complementary_roots(s);
    return {v.begin(), v.end()};
}

} // namespace

TEST(SpaceId, Grammar) {
    EXPECT_EQ(SpaceId::parse("gr:2,3"), SpaceId::grassmannian(2, 3));
    EXPECT_EQ(SpaceId::parse("quadric:5"), SpaceId::quadric(5));
    EXPECT_EQ(SpaceId::parse("lagr:4"), SpaceId::lagrangian(4));
    EXPECT_EQ(SpaceId::parse("spinor:6"), SpaceId::spinor(6));
    EXPECT_EQ(SpaceId::parse("e6"), SpaceId::e6());
    EXPECT_EQ(SpaceId::parse("e7"), SpaceId::e7());
    for (const char* id : {"gr:2,3", "quadric:12", "lagr:2", "spinor:3", "e6", "e7"})
        EXPECT_EQ(SpaceId::parse(id).str(), id);
}

TEST(SpaceId, RejectsBadInput) {
    for (const char* bad : {"", "gr", "gr:2", "gr:0,3", "gr:2,-1", "gr:a,b", "quadric:2", "quadric:1", "lagr:1",
                            "spinor:2", "e8", "E6", "foo:3", "quadric:", "gr:2,3,4", "quadric:25"})
        EXPECT_THROW(SpaceId::parse(bad), ConfigError) << bad;
    try {
        SpaceId::parse("quadric:2");
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("quadric:2"), std::string::npos);
    }
}

TEST(Resolve, Grassmannian22) {
    const auto s = resolve("gr:2,2");
    EXPECT_EQ(s.roots().name(), "A3");
    EXPECT_EQ(s.cominuscule_node(), 2);
    EXPECT_EQ(s.dimension(), 4);
    EXPECT_EQ(psi_set(s), (std::set<Root>{r({1, 0, -1, 0}), r({1, 0, 0, -1}), r({0, 1, -1, 0}), r({0, 1, 0, -1})}));
}

TEST(Resolve, AmbientAlgebras) {
    EXPECT_EQ(resolve("quadric:5").roots().name(), "B3");
    EXPECT_EQ(resolve("quadric:6").roots().name(), "D4");
    EXPECT_EQ(resolve("lagr:3").roots().name(), "C3");
    EXPECT_EQ(resolve("spinor:5").roots().name(), "D5");
    EXPECT_EQ(resolve("spinor:5").cominuscule_node(), 5);
    EXPECT_EQ(resolve("e6").cominuscule_node(), 1);
    EXPECT_EQ(resolve("e7").cominuscule_node(), 7);
}

TEST(Resolve, DimensionsMatchClosedForms) {
    EXPECT_EQ(resolve("e7").dimension(), 27);
    EXPECT_EQ(resolve("e6").dimension(), 16);
    EXPECT_EQ(resolve("spinor:5").dimension(), 10);
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) EXPECT_EQ(resolve(SpaceId::grassmannian(p, q)).dimension(), p * q);
    for (int p = 3; p <= 12; ++p) EXPECT_EQ(resolve(SpaceId::quadric(p)).dimension(), p);
    for (int k = 2; k <= 8; ++k) EXPECT_EQ(resolve(SpaceId::lagrangian(k)).dimension(), k * (k + 1) / 2);
    for (int k = 3; k <= 8; ++k) EXPECT_EQ(resolve(SpaceId::spinor(k)).dimension(), k * (k - 1) / 2);
}

TEST(ComplementaryRoots, SmallExamples) {
    EXPECT_EQ(psi_set(resolve("lagr:2")), (std::set<Root>{r({2, 0}), r({1, 1}), r({0, 2})}));
    EXPECT_EQ(psi_set(resolve("quadric:4")), (std::set<Root>{r({1, 1, 0}), r({1, -1, 0}), r({1, 0, 1}), r({1, 0, -1})}));
    EXPECT_EQ(psi_set(resolve("gr:1,2")), (std::set<Root>{r({1, -1, 0}), r({1, 0, -1})}));
}

TEST(ComplementaryRoots, CoefficientOneOnNode) {
    for (const auto& id : verification_catalog()) {
        const auto s = resolve(id);
        for (auto a : s.psi()) {
            EXPECT_TRUE(s.roots().is_positive(a));
            EXPECT_EQ(s.roots().simple_coefficients(a)[std::size_t(s.cominuscule_node() - 1)], 1) << id.str();
        }
    }
}

TEST(PsiClosure, Counts) {
    auto rep = check_psi_closure(resolve("gr:2,2"));
    EXPECT_EQ(rep.pairs_checked, 16u);
    EXPECT_EQ(rep.violations, 0u);
    rep = check_psi_closure(resolve("e7"));
    EXPECT_EQ(rep.pairs_checked, 729u);
    EXPECT_EQ(rep.violations, 0u);
    const auto q5 = resolve("quadric:5");
    EXPECT_GT(check_psi_closure(q5).orthogonal_pairs, 0u);
    EXPECT_EQ(q5.roots().inner(r({1, -1, 0}), r({1, 1, 0})), 0);
}

TEST(PsiClosure, ExhaustiveOnCatalog) {
    for (const auto& id : verification_catalog()) {
        const auto s = resolve(id);
        for (auto a : s.psi())
            for (auto b : s.psi()) {
                EXPECT_FALSE(s.roots().is_root(s.roots().root(a) + s.roots().root(b)));
                EXPECT_GE(s.roots().inner(a, b), 0);
            }
    }
}

TEST(Cascade, Examples) {
    const auto g23 = resolve("gr:2,3");
    const auto c = strongly_orthogonal_cascade(g23);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(g23.roots().root(c[0]), r({1, 0, 0, 0, -1}));
    EXPECT_EQ(g23.roots().root(c[1]), r({0, 1, 0, -1, 0}));

    const auto q6 = resolve("quadric:6");
    std::set<Root> got;
    for (auto a : strongly_orthogonal_cascade(q6)) got.insert(q6.roots().root(a));
    EXPECT_EQ(got, (std::set<Root>{r({1, 1, 0, 0}), r({1, -1, 0, 0})}));

    const auto l3 = resolve("lagr:3");
    got.clear();
    for (auto a : strongly_orthogonal_cascade(l3)) got.insert(l3.roots().root(a));
    EXPECT_EQ(got, (std::set<Root>{r({2, 0, 0}), r({0, 2, 0}), r({0, 0, 2})}));
}

TEST(Cascade, SizesAndVanishingConstants) {
    for (const auto& id : verification_catalog()) {
        const auto s = resolve(id);
        const auto c = strongly_orthogonal_cascade(s);
        EXPECT_EQ(int(c.size()), closed_form_symmetric_rank(id)) << id.str();
        for (auto a : c)
            for (auto b : c) {
                if (a == b) continue;
                EXPECT_TRUE(strongly_orthogonal(s.roots(), a, b));
                EXPECT_EQ(s.table().n(a, s.roots().negative(b)), 0);
            }
    }
}

TEST(Resolve, PsiAccessorsRejectOutsiders) {
    const auto s = resolve("gr:2,2");
    EXPECT_THROW(s.require_psi(r({1, -1, 0, 0}), "test"), ArgumentError);
    EXPECT_THROW(s.require_psi(r({1, 1, 0, 0}), "test"), ArgumentError);
    EXPECT_NO_THROW(s.require_psi(r({1, 0, -1, 0}), "test"));
}
