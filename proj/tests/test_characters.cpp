#include <gtest/gtest.h>

#include "gausslab/characters.hpp"

using namespace gausslab;

namespace {

double dabs(const Real& x) { return boost::multiprecision::abs(x).convert_to<double>(); }
double dmag(const Complex& z) { return abs(z).convert_to<double>(); }

struct Rng {
    std::uint64_t s;
    double next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s % 2000001) / 1000000.0 - 1.0;
    }
};

class CharacterTest : public ::testing::Test {
  protected:
    void SetUp() override { set_precision_bits(160); }
};

TEST_F(CharacterTest, PrincipalIsOne) {
    PrimeContext ctx(7);
    CharacterSystem sys(ctx);
    Character chi0 = sys.character(0);
    for (int a = 1; a <= 6; ++a) {
        EXPECT_NEAR(chi0(a).re.convert_to<double>(), 1.0, 1e-30);
        EXPECT_NEAR(chi0(a).im.convert_to<double>(), 0.0, 1e-30);
    }
    EXPECT_LT(dmag(chi0(7)), 1e-30);  // zero on multiples of p
}

TEST_F(CharacterTest, ParityAndLegendre) {
    PrimeContext ctx(7);
    CharacterSystem sys(ctx);
    // chi_3(-1) = (-1)^3 = -1 (odd character)
    EXPECT_NEAR(sys.chi(3, -1).re.convert_to<double>(), -1.0, 1e-30);
    EXPECT_FALSE(sys.character(3).is_even());
    // chi_{(p-1)/2} is the Legendre symbol
    PrimeContext c5(5);
    CharacterSystem s5(c5);
    for (int a = 1; a < 5; ++a) {
        EXPECT_NEAR(s5.chi(2, a).re.convert_to<double>(), c5.legendre(a), 1e-30);
        EXPECT_LT(dabs(s5.chi(2, a).im), 1e-30);
    }
    EXPECT_NEAR(s5.chi(2, 2).re.convert_to<double>(), -1.0, 1e-30);
}

TEST_F(CharacterTest, Multiplicative) {
    PrimeContext ctx(13);
    CharacterSystem sys(ctx);
    for (std::uint32_t j : {1u, 5u, 11u}) {
        for (int a = 1; a < 13; ++a) {
            EXPECT_NEAR(dmag(sys.chi(j, a)), 1.0, 1e-30);
            for (int b = 1; b < 13; ++b) {
                Complex lhs = sys.chi(j, a * b);
                Complex rhs = sys.chi(j, a) * sys.chi(j, b);
                EXPECT_LT(dmag(lhs - rhs), 1e-40);
            }
        }
    }
}

TEST_F(CharacterTest, IndexOutOfRange) {
    PrimeContext ctx(7);
    CharacterSystem sys(ctx);
    EXPECT_THROW(sys.character(6), IndexOutOfRange);
    EXPECT_THROW(sys.character(-1), IndexOutOfRange);
}

TEST_F(CharacterTest, OrthogonalityAllOnes) {
    PrimeContext ctx(31);
    CharacterSystem sys(ctx);
    std::vector<Complex> w(30, Complex(Real(1)));
    std::vector<Complex> F = sys.transform(w);
    EXPECT_NEAR(F[0].re.convert_to<double>(), 30.0, 1e-30);
    for (std::size_t j = 1; j < F.size(); ++j) EXPECT_LT(dmag(F[j]), 1e-30);
}

TEST_F(CharacterTest, TransformMatchesDirect) {
    Rng rng{42};
    for (std::uint32_t p : {7u, 13u, 31u, 61u, 127u, 199u}) {
        PrimeContext ctx(p);
        CharacterSystem sys(ctx);
        Real tol = eps_scale(32);
        for (int rep = 0; rep < (p < 100 ? 4 : 2); ++rep) {
            std::vector<Complex> w(p - 1);
            for (auto& z : w) z = Complex(Real(rng.next()), Real(rng.next()));
            std::vector<Complex> fast = sys.transform(w);
            std::vector<Complex> slow = sys.transform_direct(w);
            Real scale(0);
            for (const auto& z : slow) scale = std::max(scale, abs(z));
            for (std::size_t j = 0; j < fast.size(); ++j)
                EXPECT_LT(abs(fast[j] - slow[j]), tol * std::max(scale, Real(1))) << "p=" << p << " j=" << j;
        }
    }
}

TEST_F(CharacterTest, Parseval) {
    Rng rng{7};
    for (std::uint32_t p : {13u, 199u, 499u}) {
        PrimeContext ctx(p);
        CharacterSystem sys(ctx);
        std::vector<Complex> w(p - 1);
        Real ssum(0);
        for (auto& z : w) {
            z = Complex(Real(rng.next()), Real(rng.next()));
            ssum += norm(z);
        }
        std::vector<Complex> F = sys.transform(w);
        Real fsum(0);
        for (const auto& f : F) fsum += norm(f);
        Real rel = boost::multiprecision::abs(fsum - (p - 1) * ssum) / ((p - 1) * ssum);
        EXPECT_LT(rel, Real("1e-20")) << p;
    }
}

TEST_F(CharacterTest, ConjugationSymmetryForRealInput) {
    Rng rng{11};
    PrimeContext ctx(61);
    CharacterSystem sys(ctx);
    std::vector<Complex> w(60);
    for (auto& z : w) z = Complex(Real(rng.next()));
    std::vector<Complex> F = sys.transform(w);
    for (std::uint32_t j = 1; j < 60; ++j) EXPECT_LT(dmag(F[60 - j] - conj(F[j])), 1e-35);
}

TEST_F(CharacterTest, QuadraticWeightExample) {
    // w(a) = e(a^2/5): F[0] = sqrt(5) - 1
    PrimeContext ctx(5);
    CharacterSystem sys(ctx);
    std::vector<Complex> roots = unit_root_table(5);
    std::vector<Complex> w(4);
    for (int a = 1; a < 5; ++a) w[a - 1] = roots[a * a % 5];
    std::vector<Complex> F = sys.transform(w);
    Real want = boost::multiprecision::sqrt(Real(5)) - 1;
    EXPECT_LT(dabs(F[0].re - want), 1e-40);
    EXPECT_LT(dabs(F[0].im), 1e-40);
}

TEST_F(CharacterTest, LengthMismatch) {
    PrimeContext ctx(7);
    CharacterSystem sys(ctx);
    std::vector<Complex> w(5);
    EXPECT_THROW(sys.transform(w), LengthMismatch);
}

TEST_F(CharacterTest, PrecisionTooLow) {
    ScopedPrecision prec(64);
    PrimeContext ctx(499);
    CharacterSystem sys(ctx);
    std::vector<Complex> w(498, Complex(Real(1)));
    EXPECT_THROW(sys.transform(w), PrecisionTooLow);
}

}  // namespace
