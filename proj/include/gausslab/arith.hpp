#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gausslab/errors.hpp"

namespace gausslab {

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all q < 2^64.
inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (q == sp) return true;
        if (q % sp == 0) return false;
    }
    std::uint64_t d = q - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod64(a, d, q);
        if (x == 1 || x == q - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod64(x, x, q);
            if (x == q - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Odd prime p with its smallest primitive root g and the dense discrete-log
// table: dlog[a] = k with g^k = a (mod p). Immutable after construction and
// safe to share across threads.
class PrimeContext {
  public:
    explicit PrimeContext(std::uint32_t p) : p_(p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p)) throw NotPrime(p);
        order_ = p - 1;
        auto qs = prime_factors(order_);
        for (std::uint32_t c = 2;; ++c) {
            bool ok = true;
            for (auto q : qs) {
                if (detail::powmod64(c, order_ / q, p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g_ = c;
                break;
            }
        }
        pow_.resize(order_);
        dlog_.assign(p, 0);
        std::uint64_t x = 1;
        for (std::uint32_t k = 0; k < order_; ++k) {
            pow_[k] = static_cast<std::uint32_t>(x);
            dlog_[x] = k;
            x = (x * g_) % p;
        }
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t g() const { return g_; }
    std::uint32_t order() const { return order_; }

    // k with g^k = a (mod p); a must not be divisible by p
    std::uint32_t dlog(std::uint64_t a) const { return dlog_[a % p_]; }
    // g^k mod p for k in [0, p-1)
    std::uint32_t pow_g(std::uint32_t k) const { return pow_[k % order_]; }

    std::uint32_t reduce(long long a) const {
        long long r = a % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    // modular inverse via the power table
    std::uint32_t inverse(std::uint64_t a) const {
        std::uint32_t k = dlog_[a % p_];
        return pow_[(order_ - k) % order_];
    }

    // Legendre symbol (a/p) in {-1,0,+1}
    int legendre(long long a) const {
        std::uint32_t r = reduce(a);
        if (r == 0) return 0;
        return (dlog_[r] & 1) ? -1 : 1;
    }

    std::uint32_t smallest_nonresidue() const {
        for (std::uint32_t n = 2; n < p_; ++n)
            if (legendre(n) == -1) return n;
        throw Error("no quadratic non-residue found");  // unreachable for p >= 3
    }

  private:
    std::uint32_t p_, g_ = 0, order_ = 0;
    std::vector<std::uint32_t> pow_;
    std::vector<std::uint32_t> dlog_;
};

// Standalone Legendre symbol by Euler's criterion (no context required).
inline int legendre_symbol(long long a, std::uint64_t p) {
    std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<long long>(p)) + static_cast<long long>(p))) % p;
    if (r == 0) return 0;
    std::uint64_t e = detail::powmod64(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

inline std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    if (hi < 2) return out;
    std::vector<bool> comp(hi + 1, false);
    for (std::uint32_t i = 2; static_cast<std::uint64_t>(i) * i <= hi; ++i)
        if (!comp[i])
            for (std::uint32_t j = i * i; j <= hi; j += i) comp[j] = true;
    for (std::uint32_t i = std::max<std::uint32_t>(lo, 2); i <= hi; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

}  // namespace gausslab
