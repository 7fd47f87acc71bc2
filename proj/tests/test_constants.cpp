#include <gtest/gtest.h>

#include "gausslab/constants.hpp"
#include "gausslab/arith.hpp"

using namespace gausslab;

namespace {

class ConstantsTest : public ::testing::Test {
  protected:
    void SetUp() override { set_precision_bits(160); }
};

TEST_F(ConstantsTest, SegmentedSieveMatchesSimple) {
    std::vector<std::uint64_t> got;
    for_each_prime(10000, [&](std::uint64_t q) { got.push_back(q); });
    auto want = primes_in_range(2, 10000);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], want[i]);
}

TEST_F(ConstantsTest, FactorValues) {
    EXPECT_NEAR(euler_factor(2, 64).convert_to<double>(), 1.073182, 1e-5);
    EXPECT_NEAR(euler_factor(3, 64).convert_to<double>(), 1.029660, 1e-5);
}

TEST_F(ConstantsTest, FactorBounds) {
    // 1 < factor < 1 + (4/3) q^{-2}
    for (std::uint64_t q : {2ull, 3ull, 5ull, 97ull, 10007ull}) {
        Real f = euler_factor(q, 64);
        EXPECT_GT(f, Real(1));
        Real cap = Real(4) / (Real(3) * Real(static_cast<long long>(q)) * Real(static_cast<long long>(q)));
        EXPECT_LT(f - 1, cap) << q;
    }
}

TEST_F(ConstantsTest, PartialProductsMonotone) {
    Real p1 = euler_product(100);
    Real p2 = euler_product(1000);
    Real p3 = euler_product(10000);
    EXPECT_LT(p1, p2);
    EXPECT_LT(p2, p3);
}

TEST_F(ConstantsTest, SelfConsistencyAtIncreasingCutoffs) {
    EulerProductResult c = constant_c(1e-4);
    Real doubled = euler_product(2 * c.cutoff);
    EXPECT_LT(boost::multiprecision::abs(doubled - c.value), c.tail_bound);
    EXPECT_GE(doubled, c.value);
}

TEST_F(ConstantsTest, EpsGuards) {
    EXPECT_THROW(constant_c(1e-10), EpsUnattainable);
    EXPECT_THROW(constant_c(1e-9, 1000), EpsUnattainable);
}

}  // namespace
