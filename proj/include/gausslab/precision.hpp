#pragma once

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/mpfr.hpp>

#include "gausslab/errors.hpp"

namespace gausslab {

// Arbitrary-precision real. Precision is a thread-local setting; every value
// constructed after set_precision_bits() carries the new precision.
using Real = boost::multiprecision::mpfr_float;

namespace detail {
inline unsigned& requested_bits() {
    thread_local unsigned bits = 128;
    return bits;
}
}  // namespace detail

inline void set_precision_bits(unsigned bits) {
    if (bits < 64) throw ConfigError("precision below 64 bits is not supported");
    detail::requested_bits() = bits;
    // digits10 -> the backend rounds up to at least this many bits
    Real::default_precision(static_cast<unsigned>(std::ceil(bits / 3.3219280948873623)) + 2);
}

inline unsigned precision_bits() { return detail::requested_bits(); }

// Minimum working precision for 2m-th power moments at prime p. Moment
// magnitudes reach p^{m+1} while residuals of interest sit near p^{m+1/2},
// so (2m+2)*log2(p) significant bits plus guard bits are required.
inline unsigned precision_floor_bits(unsigned long long p, unsigned m) {
    double need = (2.0 * m + 2.0) * std::log2(static_cast<double>(std::max<unsigned long long>(p, 3)));
    return std::max<unsigned>(128, static_cast<unsigned>(std::ceil(need)) + 64);
}

inline void require_precision(unsigned long long p, unsigned m) {
    unsigned need = precision_floor_bits(p, m);
    if (precision_bits() < need) throw PrecisionTooLow(precision_bits(), need);
}

// RAII precision override.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
    ~ScopedPrecision() { set_precision_bits(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

inline Real real_pi() {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

// 2^-(precision - slack): the tolerance scale used by transform/direct
// agreement contracts.
inline Real eps_scale(unsigned slack_bits) {
    return boost::multiprecision::pow(Real(2), -static_cast<long>(precision_bits()) + static_cast<long>(slack_bits));
}

}  // namespace gausslab
