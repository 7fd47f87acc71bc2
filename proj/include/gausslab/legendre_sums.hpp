#pragma once

#include <cstdint>
#include <vector>

#include "gausslab/characters.hpp"

namespace gausslab {

// values[j] = sum_{a=1}^{p-1} chi_j(a) (a^2-1 / p). The a = 1 and a = p-1
// terms vanish, so sums over a = 1..p-1 and a = 2..p-2 coincide.
struct LegendreSpectrum {
    std::uint32_t p;
    std::vector<Complex> values;
};

inline std::vector<int> legendre_table(const PrimeContext& ctx) {
    std::vector<int> rho(ctx.p());
    for (std::uint32_t a = 0; a < ctx.p(); ++a) rho[a] = ctx.legendre(a);
    return rho;
}

inline LegendreSpectrum legendre_spectrum(const PrimeContext& ctx, const CharacterSystem& sys) {
    const std::uint32_t p = ctx.p();
    std::vector<int> rho = legendre_table(ctx);
    std::vector<Complex> w(p - 1);
    for (std::uint32_t a = 1; a < p; ++a) {
        std::uint64_t v = (static_cast<std::uint64_t>(a) * a + p - 1) % p;  // a^2 - 1 mod p
        w[a - 1] = Complex(Real(rho[v]));
    }
    return {p, sys.transform(w)};
}

// S_r = sum_j values[j]^r; real up to rounding noise.
inline Complex s_r_sum(const LegendreSpectrum& spec, std::uint32_t r) {
    Complex total;
    for (const Complex& v : spec.values) {
        Complex acc(1L);
        for (std::uint32_t i = 0; i < r; ++i) acc *= v;
        total += acc;
    }
    return total;
}

// Exact tuple-enumeration oracle:
//   S_r = (p-1) * sum over (a_1..a_r) with prod a_i = 1 of prod (a_i^2-1 / p)
// kept to r <= 3 and p <= 61 (O(p^{r-1}) enumeration).
inline long long s_r_bruteforce(const PrimeContext& ctx, std::uint32_t r) {
    const std::uint32_t p = ctx.p();
    if (r < 1 || r > 3) throw TooLarge("s_r_bruteforce supports r in 1..3");
    if (p > 61) throw TooLarge("s_r_bruteforce supports p <= 61");
    std::vector<int> rho = legendre_table(ctx);
    auto term = [&](std::uint64_t a) { return rho[(a * a + p - 1) % p]; };
    long long inner = 0;
    if (r == 1) {
        inner = term(1);
    } else if (r == 2) {
        for (std::uint32_t a = 1; a < p; ++a) inner += term(a) * term(ctx.inverse(a));
    } else {
        for (std::uint32_t a = 1; a < p; ++a)
            for (std::uint32_t b = 1; b < p; ++b) {
                std::uint64_t c = ctx.inverse(static_cast<std::uint64_t>(a) * b % p);
                inner += term(a) * term(b) * term(c);
            }
    }
    return static_cast<long long>(p - 1) * inner;
}

// N = sum_{a=2}^{p-2} sum_{c=1}^{p-1} (a^2-c^2 / p)(c^2-1 / p)(a^2-1 / p)
inline long long n_sum(const PrimeContext& ctx) {
    const std::uint32_t p = ctx.p();
    std::vector<int> rho = legendre_table(ctx);
    long long total = 0;
    for (std::uint32_t a = 2; a <= p - 2; ++a) {
        std::uint64_t a2 = static_cast<std::uint64_t>(a) * a % p;
        int outer = rho[(a2 + p - 1) % p];
        if (outer == 0) continue;
        long long inner = 0;
        for (std::uint32_t c = 1; c < p; ++c) {
            std::uint64_t c2 = static_cast<std::uint64_t>(c) * c % p;
            inner += rho[(a2 + p - c2 % p) % p] * rho[(c2 + p - 1) % p];
        }
        total += outer * inner;
    }
    return total;
}

// T = sum_{a=2}^{p-2} U(a)^2 with U(a) = sum_b (a^2-b^2 / p)(b^2-1 / p);
// equal to the triple sum since the b and d sums factor.
inline long long t_sum(const PrimeContext& ctx) {
    const std::uint32_t p = ctx.p();
    std::vector<int> rho = legendre_table(ctx);
    long long total = 0;
    for (std::uint32_t a = 2; a <= p - 2; ++a) {
        std::uint64_t a2 = static_cast<std::uint64_t>(a) * a % p;
        long long u = 0;
        for (std::uint32_t b = 1; b < p; ++b) {
            std::uint64_t b2 = static_cast<std::uint64_t>(b) * b % p;
            u += rho[(a2 + p - b2 % p) % p] * rho[(b2 + p - 1) % p];
        }
        total += u * u;
    }
    return total;
}

// Literal triple loop, oracle for t_sum; p <= 31.
inline long long t_sum_bruteforce(const PrimeContext& ctx) {
    const std::uint32_t p = ctx.p();
    if (p > 31) throw TooLarge("t_sum_bruteforce supports p <= 31");
    std::vector<int> rho = legendre_table(ctx);
    auto sq = [&](std::uint64_t x) { return x * x % p; };
    long long total = 0;
    for (std::uint32_t a = 2; a <= p - 2; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            for (std::uint32_t d = 1; d < p; ++d)
                total += rho[(sq(a) + p - sq(b)) % p] * rho[(sq(b) + p - 1) % p] *
                         rho[(sq(a) + p - sq(d)) % p] * rho[(sq(d) + p - 1) % p];
    return total;
}

// sum_{a=1}^{p-1} chi_j(t a + a^{-1}), non-principal j only.
inline Complex kloosterman_char_sum(const PrimeContext& ctx, const CharacterSystem& sys,
                                    std::uint32_t j, long long t) {
    if (j == 0) throw PrincipalNotAllowed();
    if (j >= ctx.order()) throw IndexOutOfRange(j, ctx.order());
    const std::uint32_t p = ctx.p();
    std::uint64_t tr = ctx.reduce(t);
    if (tr == 0) throw TwistNotCoprime(t, p);
    Complex s;
    for (std::uint32_t a = 1; a < p; ++a) {
        std::uint64_t v = (tr * a + ctx.inverse(a)) % p;
        if (v != 0) s += sys.chi(j, static_cast<long long>(v));
    }
    return s;
}

}  // namespace gausslab
