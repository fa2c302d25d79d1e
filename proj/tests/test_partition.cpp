#include "isobaric/isopoly.hpp"
#include "isobaric/partition.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace isobaric;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<ExponentVector>& v) {
    std::vector<std::vector<int>> out;
    for (const auto& a : v) out.push_back(a.multiplicities());
    return out;
}

} // namespace

TEST(Enumerate, SpecExamples) {
    EXPECT_EQ(as_lists(enumerate(3, 3)), (std::vector<std::vector<int>>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(as_lists(enumerate(0, 5)), (std::vector<std::vector<int>>{{0, 0, 0, 0, 0}}));
    EXPECT_EQ(as_lists(enumerate(4, 2)), (std::vector<std::vector<int>>{{4, 0}, {2, 1}, {0, 2}}));
}

TEST(Enumerate, MatchesBruteForceAsSets) {
    for (int n = 0; n <= 9; ++n)
        for (int k = 1; k <= 5; ++k) {
            const auto brute = oracle::brute_force_partitions(n, k);
            const auto got = as_lists(enumerate(n, k));
            EXPECT_EQ(std::set(got.begin(), got.end()), std::set(brute.begin(), brute.end())) << n << "," << k;
            EXPECT_EQ(got.size(), brute.size());
        }
}

TEST(Enumerate, CountsMatchPartitionCounter) {
    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= 6; ++k)
            EXPECT_EQ(static_cast<long>(enumerate(n, k).size()), oracle::count_partitions(n, k)) << n << "," << k;
}

TEST(Enumerate, OrderIsStrictlyDescendingLex) {
    for (int n = 0; n <= 10; ++n) {
        const auto v = as_lists(enumerate(n, 4));
        for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GT(v[i - 1], v[i]);
    }
}

TEST(Enumerate, LargeKSameAsKEqualsN) {
    for (int n = 1; n <= 8; ++n)
        for (int k = n; k <= n + 3; ++k) {
            const auto a = as_lists(enumerate(n, k));
            const auto b = as_lists(enumerate(n, n));
            ASSERT_EQ(a.size(), b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                auto trimmed = a[i];
                trimmed.resize(static_cast<std::size_t>(n));
                EXPECT_EQ(trimmed, b[i]);
                for (std::size_t j = static_cast<std::size_t>(n); j < a[i].size(); ++j) EXPECT_EQ(a[i][j], 0);
            }
        }
}

TEST(Enumerate, RejectsBadArguments) {
    EXPECT_THROW(enumerate(-1, 2), Error);
    EXPECT_THROW(enumerate(3, 0), Error);
}

TEST(ExponentVector, InvariantsAndNorm) {
    ExponentVector a({2, 1, 0});
    EXPECT_EQ(a.degree(), 4);
    EXPECT_EQ(a.norm(), 3);
    EXPECT_EQ(a.k(), 3);
    EXPECT_EQ(a[1], 2);
    EXPECT_EQ(a[4], 0);
    EXPECT_EQ(ExponentVector::zero(4).norm(), 0);
    EXPECT_EQ(a.bumped(3).degree(), 7);
    EXPECT_THROW(ExponentVector({1, -1}), Error);
    EXPECT_THROW(ExponentVector(std::vector<int>{}), Error);
    EXPECT_THROW(a.bumped(4), Error);
}

TEST(Multinomial, SpecExamples) {
    EXPECT_EQ(multinomial(ExponentVector({1, 1, 0})), 2);
    EXPECT_EQ(multinomial(ExponentVector({2, 1})), 3);
    EXPECT_EQ(multinomial(ExponentVector({3, 0, 0})), 1);
}

TEST(Multinomial, TimesFactorialsIsNormFactorial) {
    for (int n = 0; n <= 12; ++n)
        for (const auto& a : enumerate(n, 5)) {
            Integer prod = 1;
            for (int m : a.multiplicities()) prod *= oracle::fact(m);
            EXPECT_EQ(multinomial(a) * prod, oracle::fact(a.norm()));
        }
}

TEST(WeightDot, SpecExamples) {
    EXPECT_EQ(weight_dot(ExponentVector({1, 1, 0}), WeightVector::ones()), 2);
    EXPECT_EQ(weight_dot(ExponentVector({1, 1, 0}), WeightVector::identity()), 3);
    const auto w = WeightVector::from_list({Rational(7), Rational(-2), Rational(5, 3)});
    EXPECT_EQ(weight_dot(ExponentVector({0, 0, 1}), w), Rational(5, 3));
}
