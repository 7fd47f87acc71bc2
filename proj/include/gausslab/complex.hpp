#pragma once

#include <utility>
#include <vector>

#include "gausslab/precision.hpp"

namespace gausslab {

// Complex number over the arbitrary-precision Real.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(0) {}
    explicit Complex(long v) : re(v), im(0) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator*=(long s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }

    friend Complex conj(Complex a) {
        a.im = -a.im;
        return a;
    }

    // |z|^2, exact in the ring sense
    friend Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
    friend Real abs(const Complex& a) { return boost::multiprecision::sqrt(norm(a)); }
};

// e(x) = exp(2*pi*i*x)
inline Complex unit_phase(const Real& x) {
    Real angle = 2 * real_pi() * x;
    Complex z;
    mpfr_sin_cos(z.im.backend().data(), z.re.backend().data(), angle.backend().data(), MPFR_RNDN);
    return z;
}

// Table of e(k/n) for k = 0..n-1, computed entrywise from high-precision pi
// (no multiplicative drift).
inline std::vector<Complex> unit_root_table(std::size_t n) {
    std::vector<Complex> t(n);
    Real two_pi_over_n = 2 * real_pi() / static_cast<long>(n);
    for (std::size_t k = 0; k < n; ++k) {
        Real angle = two_pi_over_n * static_cast<long>(k);
        mpfr_sin_cos(t[k].im.backend().data(), t[k].re.backend().data(), angle.backend().data(),
                     MPFR_RNDN);
    }
    return t;
}

}  // namespace gausslab
