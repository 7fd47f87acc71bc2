#include <gtest/gtest.h>

#include "gausslab/arith.hpp"

using namespace gausslab;

namespace {

bool trial_division_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

TEST(IsPrime, SmallCases) {
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(7));
    EXPECT_FALSE(is_prime(561));  // Carmichael number
    EXPECT_TRUE(is_prime(1999));
}

TEST(IsPrime, MatchesTrialDivision) {
    for (std::uint64_t q = 1; q <= 5000; ++q) EXPECT_EQ(is_prime(q), trial_division_prime(q)) << q;
}

TEST(PrimeContext, KnownRoots) {
    PrimeContext c7(7);
    EXPECT_EQ(c7.g(), 3u);
    EXPECT_EQ(c7.dlog(2), 2u);  // 3^2 = 9 = 2 mod 7
    PrimeContext c5(5);
    EXPECT_EQ(c5.g(), 2u);
    EXPECT_EQ(c5.dlog(4), 2u);
    PrimeContext c3(3);
    EXPECT_EQ(c3.g(), 2u);
    EXPECT_EQ(c3.dlog(2), 1u);
}

TEST(PrimeContext, RejectsComposite) {
    EXPECT_THROW(PrimeContext(9), NotPrime);
    EXPECT_THROW(PrimeContext(2), NotPrime);
    EXPECT_THROW(PrimeContext(1), NotPrime);
}

TEST(PrimeContext, DlogInvariants) {
    for (std::uint32_t p : {5u, 7u, 13u, 101u, 199u}) {
        PrimeContext ctx(p);
        std::vector<bool> seen(p - 1, false);
        for (std::uint32_t a = 1; a < p; ++a) {
            std::uint32_t k = ctx.dlog(a);
            ASSERT_LT(k, p - 1);
            EXPECT_FALSE(seen[k]);
            seen[k] = true;
            EXPECT_EQ(ctx.pow_g(k), a);  // round trip
        }
        EXPECT_EQ(ctx.dlog(1), 0u);
        EXPECT_EQ(ctx.dlog(p - 1), (p - 1) / 2);
        // homomorphism
        for (std::uint32_t a = 1; a < p; a += 3)
            for (std::uint32_t b = 1; b < p; b += 5)
                EXPECT_EQ((ctx.dlog(a) + ctx.dlog(b)) % (p - 1),
                          ctx.dlog(static_cast<std::uint64_t>(a) * b % p));
    }
}

TEST(PrimeContext, InverseViaTable) {
    PrimeContext ctx(199);
    for (std::uint32_t a = 1; a < 199; ++a)
        EXPECT_EQ(static_cast<std::uint64_t>(a) * ctx.inverse(a) % 199, 1u);
}

TEST(Legendre, BasicValues) {
    PrimeContext c7(7), c5(5);
    EXPECT_EQ(c7.legendre(1), 1);
    EXPECT_EQ(c5.legendre(1), 1);
    EXPECT_EQ(c7.legendre(-1), -1);  // 7 = 3 mod 4
    EXPECT_EQ(c5.legendre(0), 0);
}

TEST(Legendre, MatchesEulerCriterion) {
    for (std::uint32_t p : primes_in_range(3, 199)) {
        PrimeContext ctx(p);
        for (std::uint32_t a = 0; a < p; ++a) EXPECT_EQ(ctx.legendre(a), legendre_symbol(a, p));
        EXPECT_EQ(ctx.legendre(-1), p % 4 == 1 ? 1 : -1);
    }
}

TEST(Legendre, Multiplicative) {
    for (std::uint32_t p : {13u, 199u}) {
        PrimeContext ctx(p);
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b)
                EXPECT_EQ(ctx.legendre(static_cast<long long>(a) * b), ctx.legendre(a) * ctx.legendre(b));
    }
}

TEST(Legendre, SmallestNonresidue) {
    EXPECT_EQ(PrimeContext(7).smallest_nonresidue(), 3u);
    EXPECT_EQ(PrimeContext(5).smallest_nonresidue(), 2u);
}

}  // namespace
