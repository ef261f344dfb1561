#include <gtest/gtest.h>

#include "hsspos/exact_linalg.hpp"
#include "hsspos/rational.hpp"
#include "hsspos/sampling.hpp"

using namespace hsspos;

namespace {

RationalMatrix from(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m{rows.size(), rows.begin()->size()};
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

} // namespace

TEST(Rational, Parse) {
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-3/6"), frac(-1, 2));
    EXPECT_EQ(parse_rational("+4/2"), 2);
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    for (const char* bad : {"", "1/0", "a", "1/-2", "--1", "1.5", "/3", "3/"})
        EXPECT_THROW(parse_rational(bad), ArgumentError) << bad;
}

TEST(Rational, FracIsCanonical) {
    EXPECT_EQ(frac(2, 4).get_num(), 1);
    EXPECT_EQ(frac(2, 4).get_den(), 2);
    EXPECT_TRUE(is_integer(frac(4, 2)));
}

TEST(ExactLinalg, Rank) {
    EXPECT_EQ(rank(from({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank(from({{0, 0}, {0, 0}})), 0u);
    EXPECT_EQ(rank(from({{0, 1, 2}, {1, 0, 3}, {1, 1, 5}})), 2u);
    EXPECT_EQ(nullity(from({{0, 1, 2}, {1, 0, 3}, {1, 1, 5}})), 1u);
    RationalMatrix h{3, 3};
    h(0, 0) = frac(1, 2);
    h(1, 1) = frac(1, 3);
    h(2, 2) = frac(1, 5);
    h(0, 1) = h(1, 0) = frac(1, 7);
    EXPECT_EQ(rank(h), 3u);
}

TEST(ExactLinalg, Inverse) {
    const auto m = from({{2, 1}, {7, 4}});
    const auto inv = inverse(m);
    EXPECT_EQ(inv, from({{4, -1}, {-7, 2}}));
    EXPECT_THROW(inverse(from({{1, 2}, {2, 4}})), ArgumentError);
}

TEST(ExactLinalg, PsdCertificate) {
    auto c = certify_psd(from({{2, 1}, {1, 2}}));
    EXPECT_TRUE(c.positive_semidefinite);
    EXPECT_EQ(c.rank, 2u);
    c = certify_psd(from({{1, 1}, {1, 1}}));
    EXPECT_TRUE(c.positive_semidefinite);
    EXPECT_EQ(c.rank, 1u);
    EXPECT_FALSE(certify_psd(from({{1, 2}, {2, 1}})).positive_semidefinite);
    EXPECT_FALSE(certify_psd(from({{0, 1}, {1, 0}})).positive_semidefinite);
    EXPECT_FALSE(certify_psd(from({{-1}})).positive_semidefinite);
    EXPECT_FALSE(certify_psd(from({{1, 2}, {3, 1}})).positive_semidefinite);
    EXPECT_TRUE(certify_psd(from({{0, 0}, {0, 0}})).positive_semidefinite);
}

TEST(ExactLinalg, PsdAgreesWithGramConstruction) {
    Sampler rng(21);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 5, r = std::size_t(rng.between(1, 5));
        RationalMatrix b{r, n};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = rng.small_rational();
        RationalMatrix g{n, n};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < r; ++t) g(i, j) += b(t, i) * b(t, j);
        const auto cert = certify_psd(g);
        EXPECT_TRUE(cert.positive_semidefinite);
        EXPECT_EQ(cert.rank, rank(b));
        EXPECT_EQ(cert.rank, rank(g));
        g(0, 0) -= 1000;
        EXPECT_FALSE(certify_psd(g).positive_semidefinite);
    }
}

TEST(Sampling, Deterministic) {
    Sampler a(42, "stream"), b(42, "stream"), c(42, "other");
    bool differs = false;
    for (int k = 0; k < 20; ++k) {
        const auto x = a.small_rational();
        EXPECT_EQ(x, b.small_rational());
        differs |= x != c.small_rational();
        EXPECT_LE(abs(x), 3);
    }
    EXPECT_TRUE(differs);
}
