#pragma once

#include <cstdint>
#include <vector>

#include "gausslab/characters.hpp"

namespace gausslab {

// G(1;q) = (1/2) sqrt(q) (1+i)(1 + e^{-pi i q / 2}); piecewise by q mod 4:
// sqrt(q), 0, i sqrt(q), (1+i) sqrt(q) for q = 1,2,3,0 (mod 4).
inline Complex classical_gauss_closed(std::uint64_t q) {
    Real s = boost::multiprecision::sqrt(Real(static_cast<long long>(q)));
    switch (q % 4) {
        case 1: return Complex(s, Real(0));
        case 2: return Complex();
        case 3: return Complex(Real(0), s);
        default: return Complex(s, s);
    }
}

// G(n;q) = sum_{a=1}^{q} e(n a^2 / q) by direct summation.
inline Complex classical_gauss_direct(std::uint64_t q, long long n) {
    std::vector<Complex> roots = unit_root_table(q);
    std::uint64_t nr = static_cast<std::uint64_t>(((n % static_cast<long long>(q)) + static_cast<long long>(q))) % q;
    Complex s;
    for (std::uint64_t a = 1; a <= q; ++a) {
        std::uint64_t e = (a % q) * (a % q) % q * nr % q;
        s += roots[e];
    }
    return s;
}

// G(n,k,chi_j;p) = sum_{a=1}^{p} chi_j(a) e(n a^k / p). The a = p term is
// zero since chi(p) = 0.
inline Complex generalized_gauss_direct(const PrimeContext& ctx, const CharacterSystem& sys,
                                        long long n, std::uint32_t k, std::uint32_t j) {
    const std::uint32_t p = ctx.p();
    if (ctx.reduce(n) == 0) throw TwistNotCoprime(n, p);
    if (j >= ctx.order()) throw IndexOutOfRange(j, ctx.order());
    std::vector<Complex> roots = unit_root_table(p);
    std::uint64_t nr = ctx.reduce(n);
    Complex s;
    for (std::uint32_t a = 1; a < p; ++a) {
        std::uint64_t ak = detail::powmod64(a, k, p);
        s += sys.chi(j, a) * roots[nr * ak % p];
    }
    return s;
}

// G(n,chi_j;p) for every j at once: the all-characters transform of
// w(a) = e(n a^2 / p).
inline std::vector<Complex> all_quadratic_gauss_sums(const PrimeContext& ctx,
                                                     const CharacterSystem& sys, long long n) {
    const std::uint32_t p = ctx.p();
    if (ctx.reduce(n) == 0) throw TwistNotCoprime(n, p);
    std::vector<Complex> roots = unit_root_table(p);
    std::uint64_t nr = ctx.reduce(n);
    std::vector<Complex> w(p - 1);
    for (std::uint32_t a = 1; a < p; ++a)
        w[a - 1] = roots[nr * (static_cast<std::uint64_t>(a) * a % p) % p];
    return sys.transform(w);
}

}  // namespace gausslab
