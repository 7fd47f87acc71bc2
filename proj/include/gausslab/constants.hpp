#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "gausslab/precision.hpp"
#include "gausslab/errors.hpp"

namespace gausslab {

// Visit all primes <= limit with a segmented sieve (memory stays bounded for
// large cutoffs).
inline void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
    if (limit < 2) return;
    std::uint64_t root = 2;
    while (root * root <= limit) ++root;
    std::vector<std::uint64_t> base;
    {
        std::vector<bool> comp(root + 1, false);
        for (std::uint64_t i = 2; i <= root; ++i) {
            if (comp[i]) continue;
            base.push_back(i);
            for (std::uint64_t j = i * i; j <= root; j += i) comp[j] = true;
        }
    }
    for (std::uint64_t p : base)
        if (p <= limit) fn(p);
    const std::uint64_t seg = 1u << 20;
    std::vector<bool> mark;
    for (std::uint64_t lo = root + 1; lo <= limit; lo += seg) {
        std::uint64_t hi = std::min(limit, lo + seg - 1);
        mark.assign(hi - lo + 1, false);
        for (std::uint64_t p : base) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = true;
        }
        for (std::uint64_t v = lo; v <= hi; ++v)
            if (!mark[v - lo]) fn(v);
    }
}

// One Euler factor: 1 + sum_{k>=1} C(2k,k)^2 16^{-k} q^{-2k}. Since
// C(2k,k)/4^k < 1, the series is dominated by the geometric series in q^{-2}.
inline Real euler_factor(std::uint64_t q, unsigned kmax) {
    Real x = Real(1) / (Real(static_cast<long long>(q)) * Real(static_cast<long long>(q)));
    Real term(1);  // C(2k,k)^2 / 16^k * x^k, built iteratively
    Real sum(1);
    Real cutoff = eps_scale(2);
    for (unsigned k = 1; k <= kmax; ++k) {
        // C(2k,k)/4^k = prod_{i<=k} (2i-1)/(2i)
        Real ratio = Real(2 * static_cast<long>(k) - 1) / Real(2 * static_cast<long>(k));
        term *= ratio * ratio * x;
        sum += term;
        if (term < cutoff) break;
    }
    return sum;
}

struct EulerProductResult {
    std::uint64_t cutoff = 0;  // largest prime bound included
    Real value;
    Real tail_bound;  // upper bound on log of the omitted factor product
    double requested_eps = 0;
};

// C = prod over primes of euler_factor(q). Omitted-prime tail: each factor
// satisfies factor - 1 < (4/3) q^{-2}, and summing over odd integers > P
// majorizes the prime sum, giving log-tail <= (2/3)/P (plus the q=2 factor
// already included).
inline Real euler_product(std::uint64_t P) {
    Real prod(1);
    for_each_prime(P, [&](std::uint64_t q) { prod *= euler_factor(q, 256); });
    return prod;
}

inline EulerProductResult constant_c(double eps, std::uint64_t sieve_cap = 100000000ull) {
    if (eps < 1e-9) throw EpsUnattainable("eps below 1e-9 is outside the supported range");
    std::uint64_t P = static_cast<std::uint64_t>((2.0 / 3.0) / eps) + 3;
    if (P < 1000) P = 1000;
    if (P > sieve_cap) throw EpsUnattainable("required prime cutoff exceeds the sieve cap");
    EulerProductResult r;
    r.cutoff = P;
    r.value = euler_product(P);
    r.tail_bound = Real(2) / (Real(3) * Real(static_cast<long long>(P)));
    r.requested_eps = eps;
    return r;
}

}  // namespace gausslab
