#include "gaussbin/koh.hpp"
#include "gaussbin/unimodality.hpp"

#include <gtest/gtest.h>

#include <thread>

namespace gaussbin {
namespace {

TEST(Koh, TermSingleRowTwo) {
    auto t = koh_term(2, Partition({2}));
    EXPECT_EQ(t.shift, 2);
    ASSERT_EQ(t.factors.size(), 1u);
    EXPECT_EQ(t.factors[0], (KohFactor{2, 2}));
    EXPECT_EQ(expand(t), IntPolynomial::monomial(2));
}

TEST(Koh, TermTwoOnes) {
    auto t = koh_term(2, Partition({1, 1}));
    EXPECT_EQ(t.shift, 0);
    ASSERT_EQ(t.factors.size(), 2u);
    EXPECT_EQ(t.factors[0], (KohFactor{2, 0}));
    EXPECT_TRUE(t.factors[0].trivial());
    EXPECT_EQ(t.factors[1], (KohFactor{5, 1}));
    EXPECT_EQ(expand(t), (IntPolynomial{1, 1, 1, 1, 1}));
    EXPECT_EQ(add(expand(t), expand(koh_term(2, Partition({2})))), qbinom(2, 2));
}

TEST(Koh, SingleRowTermVanishesWhenTooNarrow) {
    auto t = koh_term(7, Partition({5}));
    EXPECT_EQ(t.shift, 20);
    ASSERT_EQ(t.factors.size(), 1u);
    EXPECT_EQ(t.factors[0], (KohFactor{4, 5}));
    EXPECT_TRUE(t.vanishes());
    EXPECT_TRUE(expand(t).is_zero());
}

TEST(Koh, RegimeErrors) {
    EXPECT_THROW(koh_term(3, Partition({4})), UnsupportedRegime);
    EXPECT_THROW(koh_term(5, Partition({1})), UnsupportedRegime);
    EXPECT_THROW(koh_sum(3, 5), UnsupportedRegime);
    EXPECT_THROW(koh_sum(5, 1), UnsupportedRegime);
}

TEST(Koh, IdentityOnSmallRange) {
    EXPECT_EQ(koh_sum(2, 2), (IntPolynomial{1, 1, 2, 1, 1}));
    EXPECT_EQ(koh_sum(5, 3), qbinom(5, 3));
    EXPECT_EQ(koh_sum(20, 12), qbinom(20, 12));
    for (long a = 2; a <= 14; ++a)
        for (long b = 2; b <= a; ++b) EXPECT_EQ(koh_sum(a, b), qbinom(a, b)) << a << "," << b;
}

TEST(Koh, ShiftIsTwiceSumOfPairCounts) {
    for (int b = 2; b <= 12; ++b)
        for (const auto& lambda : partitions_of(b)) {
            long s = 0;
            for (int part : lambda.parts()) s += 2 * (static_cast<long>(part) * (part - 1) / 2);
            EXPECT_EQ(koh_term(b + 3, lambda).shift, s);
        }
}

TEST(Koh, TermsAreSymmetricUnimodalAndCentred) {
    for (long a = 2; a <= 14; ++a)
        for (long b = 2; b <= a; ++b)
            for (const auto& lambda : partitions_of(static_cast<int>(b))) {
                const auto p = expand(koh_term(a, lambda));
                if (p.is_zero()) continue;
                const std::size_t ab = static_cast<std::size_t>(a * b);
                for (std::size_t d = 0; d <= ab; ++d)
                    ASSERT_EQ(p[d], p[ab - d]) << a << "," << b << " " << lambda.to_string();
                ASSERT_TRUE(is_unimodal(p)) << a << "," << b << " " << lambda.to_string();
            }
}

TEST(Koh, FactorTopsNeverNegative) {
    for (long a = 2; a <= 25; ++a)
        for (long b = 2; b <= a; ++b)
            for (const auto& lambda : partitions_of(static_cast<int>(b)))
                for (const auto& f : koh_term(a, lambda).factors) ASSERT_GE(f.top, 0);
}

TEST(Koh, FamilyPartitions) {
    EXPECT_EQ(family_partition(8, Family::EvenBase).parts(), (std::vector<int>{2, 2, 2, 1, 1}));
    EXPECT_EQ(family_partition(7, Family::OddBase).parts(), (std::vector<int>{2, 2, 2, 1}));
    EXPECT_EQ(family_partition(15, Family::Mod3Zero).parts(), (std::vector<int>{5, 5, 5}));
    EXPECT_EQ(family_partition(19, Family::Mod3One).parts(), (std::vector<int>{6, 6, 6, 1}));
    EXPECT_EQ(family_partition(20, Family::Mod3Two).parts(), (std::vector<int>{6, 6, 6, 1, 1}));
    EXPECT_EQ(family_partition(9, Family::SingleRow).parts(), (std::vector<int>{9}));
    EXPECT_EQ(family_partition(8, Family::Growth, 3).parts(), (std::vector<int>{5, 1, 1, 1}));
}

TEST(Koh, InapplicableFamilies) {
    EXPECT_THROW(koh_term_for_family(20, 16, Family::Mod3Zero), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(20, 15, Family::Mod3One), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(20, 15, Family::Mod3Two), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(20, 9, Family::EvenBase), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(20, 10, Family::OddBase), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(20, 8, Family::Growth, 0), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(20, 8, Family::Growth, 8), FamilyNotApplicable);
    EXPECT_THROW(koh_term_for_family(5, 8, Family::SingleRow), UnsupportedRegime);
    EXPECT_THROW(family_from_name("mod-4"), std::invalid_argument);
}

TEST(Koh, FamilyClosedFormsMatchGenericExpansion) {
    for (long a = 2; a <= 20; ++a)
        for (long b = 2; b <= a; ++b)
            for (Family f : kAllFamilies) {
                const long kmax = f == Family::Growth ? std::min(4L, b - 1) : 0;
                for (long k = (f == Family::Growth ? 1 : 0); k <= kmax; ++k) {
                    Partition lambda;
                    try {
                        lambda = family_partition(b, f, k);
                    } catch (const FamilyNotApplicable&) {
                        continue;
                    }
                    EXPECT_EQ(expand(koh_term(a, lambda)), family_closed_form(a, b, f, k).expand())
                        << family_name(f) << " a=" << a << " b=" << b << " k=" << k;
                }
            }
}

TEST(Koh, EvenBaseClosedFormEndpoints) {
    // b = 10, a = 20: q^8 [73 choose 1] [113 choose 1].
    auto cf = family_closed_form(20, 10, Family::EvenBase);
    EXPECT_EQ(cf.shift, 8);
    EXPECT_EQ(cf.linear_tops, (std::vector<long>{73, 113}));
}

TEST(Koh, ConcurrentSumsAreIdentical) {
    const auto expected = koh_sum(16, 10);
    std::vector<IntPolynomial> got(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < got.size(); ++i) pool.emplace_back([&, i] { got[i] = koh_sum(16, 10); });
    }
    for (const auto& g : got) EXPECT_EQ(g, expected);
}

}  // namespace
}  // namespace gaussbin
