#include <gtest/gtest.h>

#include "gausslab/lfun.hpp"

using namespace gausslab;

namespace {

class LfunTest : public ::testing::Test {
  protected:
    void SetUp() override { set_precision_bits(160); }
};

TEST_F(LfunTest, LegendreModFive) {
    PrimeContext ctx(5);
    CharacterSystem sys(ctx);
    LValue s = l_one_series(ctx, sys, 2, 1000000);
    EXPECT_NEAR(abs(s.value).convert_to<double>(), 0.430409, 1e-5);
    LValue c = l_one_even(ctx, sys, 2);
    EXPECT_NEAR(abs(c.value).convert_to<double>(), 0.430409, 1e-5);
    // cross-check against the real-quadratic class number form 2 ln((1+sqrt5)/2)/sqrt5
    double want = 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0) / std::sqrt(5.0);
    EXPECT_NEAR(abs(c.value).convert_to<double>(), want, 1e-12);
}

TEST_F(LfunTest, SeriesTailBoundShrinks) {
    PrimeContext ctx(5);
    CharacterSystem sys(ctx);
    LValue a = l_one_series(ctx, sys, 2, 10000);
    LValue b = l_one_series(ctx, sys, 2, 100000);
    EXPECT_LT(b.abs_error, a.abs_error);
    EXPECT_LT(abs(a.value - b.value), a.abs_error + b.abs_error);
}

TEST_F(LfunTest, ClosedFormMatchesSeries) {
    for (std::uint32_t p : primes_in_range(5, 61)) {
        PrimeContext ctx(p);
        CharacterSystem sys(ctx);
        for (std::uint32_t j = 2; j < p - 1; j += 2) {
            LValue closed = l_one_even(ctx, sys, j);
            LValue series = l_one_series(ctx, sys, j, 400000);
            Real tol = std::max(Real("1e-8"), series.abs_error);
            EXPECT_LT(abs(closed.value - series.value), tol) << "p=" << p << " j=" << j;
            EXPECT_GT(abs(closed.value), Real(0));  // L(1,chi) != 0
        }
    }
}

TEST_F(LfunTest, ConjugatePairsShareModulus) {
    PrimeContext ctx(13);
    CharacterSystem sys(ctx);
    for (std::uint32_t j : {2u, 4u}) {
        LValue a = l_one_even(ctx, sys, j);
        LValue b = l_one_even(ctx, sys, 12 - j);
        EXPECT_LT(boost::multiprecision::abs(abs(a.value) - abs(b.value)), Real("1e-30"));
    }
}

TEST_F(LfunTest, TauModulus) {
    for (std::uint32_t p : {5u, 13u, 31u}) {
        PrimeContext ctx(p);
        CharacterSystem sys(ctx);
        Real sqrtp = boost::multiprecision::sqrt(Real(p));
        for (std::uint32_t j = 1; j < p - 1; ++j) {
            Real rel = boost::multiprecision::abs(abs(gauss_sum_tau(ctx, sys, j)) - sqrtp) / sqrtp;
            EXPECT_LT(rel, Real("1e-20")) << p << " " << j;
        }
    }
}

TEST_F(LfunTest, BulkMatchesPerCharacter) {
    PrimeContext ctx(29);
    CharacterSystem sys(ctx);
    std::vector<Real> bulk = l_abs_even_bulk(ctx, sys);
    for (std::uint32_t j = 2; j < 28; j += 2) {
        LValue one = l_one_even(ctx, sys, j);
        EXPECT_LT(boost::multiprecision::abs(bulk[j] - abs(one.value)), Real("1e-25")) << j;
    }
    EXPECT_EQ(bulk[0], 0);
    EXPECT_EQ(bulk[1], 0);
}

TEST_F(LfunTest, Guards) {
    PrimeContext ctx(13);
    CharacterSystem sys(ctx);
    EXPECT_THROW(l_one_even(ctx, sys, 0), PrincipalCharacter);
    EXPECT_THROW(l_one_even(ctx, sys, 3), OddCharacter);
    EXPECT_THROW(l_one_series(ctx, sys, 0, 100000), PrincipalCharacter);
    EXPECT_THROW(l_one_series(ctx, sys, 2, 5), ConfigError);
}

}  // namespace
