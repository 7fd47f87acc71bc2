#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "gausslab/characters.hpp"

namespace gausslab {

struct LValue {
    std::uint32_t p;
    std::uint32_t j;
    Complex value;
    Real abs_error;  // rigorous for the series path, heuristic 0 for closed form
    std::string method;
};

// tau(chi_j) = sum_a chi_j(a) e(a/p)
inline Complex gauss_sum_tau(const PrimeContext& ctx, const CharacterSystem& sys, std::uint32_t j) {
    const std::uint32_t p = ctx.p();
    std::vector<Complex> roots = unit_root_table(p);
    Complex s;
    for (std::uint32_t a = 1; a < p; ++a) s += sys.chi(j, a) * roots[a];
    return s;
}

// Partial sum of the Dirichlet series sum chi(n)/n with an Abel-summation
// tail bound: |tail| <= 2 * max_x |sum_{n<=x} chi(n)| / (N+1).
inline LValue l_one_series(const PrimeContext& ctx, const CharacterSystem& sys, std::uint32_t j,
                           std::uint64_t terms) {
    if (j == 0) throw PrincipalCharacter();
    const std::uint32_t p = ctx.p();
    if (terms < p) throw ConfigError("series length must be at least p");
    // max partial character sum over one period (chi is p-periodic)
    Real smax(0);
    {
        Complex s;
        for (std::uint32_t a = 1; a < p; ++a) {
            s += sys.chi(j, a);
            Real m = abs(s);
            if (m > smax) smax = m;
        }
    }
    Complex sum;
    for (std::uint64_t n = 1; n <= terms; ++n) {
        std::uint32_t r = static_cast<std::uint32_t>(n % p);
        if (r == 0) continue;
        sum += sys.chi(j, r) * (Real(1) / Real(static_cast<long long>(n)));
    }
    Real bound = 2 * smax / Real(static_cast<long long>(terms + 1));
    return {p, j, sum, bound, "series"};
}

namespace detail {

// sign convention of the even-character closed form, fixed once against the
// series oracle (textbook normalizations differ)
inline int lfun_closed_form_sign();

inline Complex l_one_even_with_sign(const PrimeContext& ctx, const CharacterSystem& sys,
                                    std::uint32_t j, int sign) {
    const std::uint32_t p = ctx.p();
    const std::uint32_t ord = ctx.order();
    Real pi = real_pi();
    Complex acc;
    for (std::uint32_t a = 1; a < p; ++a) {
        Real ls = boost::multiprecision::log(boost::multiprecision::sin(pi * a / p));
        acc += sys.chi((ord - j) % ord, a) * ls;  // conjugate character
    }
    Complex tau = gauss_sum_tau(ctx, sys, j);
    return tau * acc * (Real(sign) / Real(p));
}

inline int lfun_closed_form_sign() {
    static int sign = [] {
        for (int cand : {-1, 1}) {
            bool ok = true;
            for (std::uint32_t p : {5u, 13u}) {
                PrimeContext ctx(p);
                CharacterSystem sys(ctx);
                Complex closed = l_one_even_with_sign(ctx, sys, 2, cand);
                LValue series = l_one_series(ctx, sys, 2, 400000);
                Complex diff = closed - series.value;
                if (abs(diff) > series.abs_error + Real("1e-4")) {
                    ok = false;
                    break;
                }
            }
            if (ok) return cand;
        }
        throw ConfigError("no sign convention matches the L(1,chi) series oracle");
    }();
    return sign;
}

}  // namespace detail

// Closed-form L(1,chi_j) for even non-principal chi:
//   sign * (tau(chi_j)/p) * sum_a conj(chi_j)(a) ln sin(pi a / p)
inline LValue l_one_even(const PrimeContext& ctx, const CharacterSystem& sys, std::uint32_t j) {
    if (j == 0) throw PrincipalCharacter();
    if (j & 1) throw OddCharacter();
    Complex v = detail::l_one_even_with_sign(ctx, sys, j, detail::lfun_closed_form_sign());
    return {ctx.p(), j, v, Real(0), "closed-form"};
}

// |L(1,chi_j)| for every even j != 0 in two transforms (tau spectrum and the
// ln-sin spectrum). Odd and principal slots hold zero.
inline std::vector<Real> l_abs_even_bulk(const PrimeContext& ctx, const CharacterSystem& sys) {
    const std::uint32_t p = ctx.p();
    const std::uint32_t ord = ctx.order();
    std::vector<Complex> roots = unit_root_table(p);
    std::vector<Complex> we(p - 1), wl(p - 1);
    Real pi = real_pi();
    for (std::uint32_t a = 1; a < p; ++a) {
        we[a - 1] = roots[a];
        wl[a - 1] = Complex(boost::multiprecision::log(boost::multiprecision::sin(pi * a / p)));
    }
    std::vector<Complex> tau = sys.transform(we);
    std::vector<Complex> lsin = sys.transform(wl);
    int sign = detail::lfun_closed_form_sign();
    std::vector<Real> out(ord, Real(0));
    for (std::uint32_t j = 2; j < ord; j += 2) {
        Complex v = tau[j] * lsin[(ord - j) % ord] * (Real(sign) / Real(p));
        out[j] = abs(v);
    }
    return out;
}

}  // namespace gausslab
