#pragma once

#include <cstddef>
#include <vector>

#include "gausslab/complex.hpp"
#include "gausslab/errors.hpp"

namespace gausslab {

namespace detail {

inline std::size_t next_pow2(std::size_t n) {
    std::size_t L = 1;
    while (L < n) L <<= 1;
    return L;
}

// In-place iterative radix-2 FFT. twiddle holds e(k/L) for k = 0..L/2-1.
// inverse applies conjugate twiddles without the 1/L scale.
inline void fft_pow2(std::vector<Complex>& v, const std::vector<Complex>& twiddle, bool inverse) {
    const std::size_t L = v.size();
    for (std::size_t i = 1, j = 0; i < L; ++i) {
        std::size_t bit = L >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= L; len <<= 1) {
        std::size_t step = L / len;
        for (std::size_t i = 0; i < L; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex& w = twiddle[k * step];
                Complex& lo = v[i + k];
                Complex& hi = v[i + k + len / 2];
                Complex t = inverse ? conj(w) * hi : w * hi;
                hi = lo - t;
                lo += t;
            }
        }
    }
}

}  // namespace detail

// DFT of arbitrary length n with kernel e(+jk/n):
//   F[j] = sum_k x[k] e(jk/n)
// via Bluestein's chirp-z reduction to a power-of-two cyclic convolution of
// length >= 2n-1. Plans are reusable across inputs of the same length.
class BluesteinPlan {
  public:
    explicit BluesteinPlan(std::size_t n) : n_(n), L_(detail::next_pow2(2 * n - 1)) {
        // chirp c[m] = e(m^2 / (2n)); exponent reduced mod 2n in integers
        chirp_.reserve(n_);
        std::vector<Complex> roots2n = unit_root_table(2 * n_);
        for (std::size_t m = 0; m < n_; ++m) {
            std::size_t e = (m * m) % (2 * n_);
            chirp_.push_back(roots2n[e]);
        }
        twiddle_.reserve(L_ / 2);
        std::vector<Complex> rootsL = unit_root_table(L_);
        twiddle_.assign(rootsL.begin(), rootsL.begin() + static_cast<std::ptrdiff_t>(L_ / 2));
        // filter h[m] = conj(c[|m|]) laid out cyclically, pre-transformed
        filter_fft_.assign(L_, Complex());
        for (std::size_t m = 0; m < n_; ++m) {
            filter_fft_[m] = conj(chirp_[m]);
            if (m > 0) filter_fft_[L_ - m] = conj(chirp_[m]);
        }
        detail::fft_pow2(filter_fft_, twiddle_, false);
        inv_L_ = Real(1) / static_cast<long>(L_);
    }

    std::size_t length() const { return n_; }

    std::vector<Complex> apply(const std::vector<Complex>& x) const {
        if (x.size() != n_) throw LengthMismatch(x.size(), n_);
        std::vector<Complex> a(L_, Complex());
        for (std::size_t k = 0; k < n_; ++k) a[k] = x[k] * chirp_[k];
        detail::fft_pow2(a, twiddle_, false);
        for (std::size_t i = 0; i < L_; ++i) a[i] *= filter_fft_[i];
        detail::fft_pow2(a, twiddle_, true);
        std::vector<Complex> out(n_);
        for (std::size_t j = 0; j < n_; ++j) out[j] = a[j] * chirp_[j] * inv_L_;
        return out;
    }

  private:
    std::size_t n_, L_;
    std::vector<Complex> chirp_;
    std::vector<Complex> twiddle_;
    std::vector<Complex> filter_fft_;
    Real inv_L_;
};

// Direct O(n^2) DFT with the same kernel; the correctness oracle for the
// Bluestein path.
inline std::vector<Complex> dft_direct(const std::vector<Complex>& x) {
    const std::size_t n = x.size();
    std::vector<Complex> roots = unit_root_table(n);
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex s;
        for (std::size_t k = 0; k < n; ++k) s += x[k] * roots[(j * k) % n];
        out[j] = s;
    }
    return out;
}

}  // namespace gausslab
