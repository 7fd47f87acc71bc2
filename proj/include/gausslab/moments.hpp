#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gausslab/gauss.hpp"
#include "gausslab/legendre_sums.hpp"
#include "gausslab/lfun.hpp"

namespace gausslab {

using Int = boost::multiprecision::cpp_int;

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Real to_real(const Int& v) { return Real(v.str()); }

// Closed-form or main-term prediction of value a + b*sqrt(p).
struct ExactPrediction {
    std::uint32_t p = 0;
    Int a = 0;
    Int b = 0;
    std::string kind;
    bool asymptotic = false;  // main term only, unquantified remainder

    Real value() const { return to_real(a) + to_real(b) * boost::multiprecision::sqrt(Real(static_cast<long long>(p))); }
};

// Prediction for sum_chi |G(n,chi;p)|^{2m}. Exact for m <= 4 (given the
// convolution sums N and T for m = 3,4); main term 126 p^6 for m = 5.
// The sqrt(p) coefficient of the 6th/8th forms groups as
//   m=3: p(p-1)N + 18p^2 - 12p - 6
//   m=4: 56p^3 + 8p^2 - 56p - 8 + 8p^2(p-1)N
// confirmed numerically against the transform path (see tests).
inline ExactPrediction predicted_power_mean(std::uint32_t p, int n_class, unsigned m,
                                            long long N = 0, long long T = 0) {
    if (m < 2 || m > 5) throw UnsupportedM(m);
    ExactPrediction pred;
    pred.p = p;
    const Int P = p;
    const bool p1mod4 = (p % 4 == 1);
    switch (m) {
        case 2:
            pred.kind = "power4";
            pred.a = (P - 1) * (3 * P * P - 6 * P - 1);
            if (p1mod4) pred.b = Int(4 * n_class) * (P - 1);
            break;
        case 3:
            pred.kind = "power6";
            if (p1mod4) {
                pred.a = (P - 1) * (10 * P * P * P - 25 * P * P - 16 * P - 1);
                pred.b = Int(n_class) * (P * (P - 1) * N + 18 * P * P - 12 * P - 6);
            } else {
                pred.a = (P - 1) * (10 * P * P * P - 25 * P * P - 4 * P - 1);
            }
            break;
        case 4:
            pred.kind = "power8";
            if (p1mod4) {
                pred.a = (P - 1) * (34 * P * P * P * P - 99 * P * P * P - 65 * P * P - 29 * P - 1) +
                         P * P * (P - 1) * T;
                pred.b = Int(n_class) *
                         (56 * P * P * P + 8 * P * P - 56 * P - 8 + 8 * P * P * (P - 1) * N);
            } else {
                pred.a = (P - 1) * (34 * P * P * P * P - 99 * P * P * P + 7 * P * P - 5 * P - 1) +
                         P * P * (P - 1) * T;
            }
            break;
        case 5:
            pred.kind = "power10-main";
            pred.a = 126 * P * P * P * P * P * P;
            pred.asymptotic = true;
            break;
    }
    return pred;
}

struct MomentRecord {
    std::uint32_t p = 0;
    int n_class = 1;
    unsigned m = 1;
    Real value;
    ExactPrediction prediction;
    Real residual;             // value - prediction
    Real normalized_residual;  // residual / p^{error exponent}
    Real imag_residue;         // size of the discarded imaginary part
};

namespace detail {

inline double moment_error_exponent(unsigned m) {
    if (m <= 4) return 0.0;  // closed form is exact
    return m + 0.5;
}

inline MomentRecord make_moment_record(std::uint32_t p, int n_class, unsigned m, Real value,
                                       Real imag, ExactPrediction pred) {
    MomentRecord rec;
    rec.p = p;
    rec.n_class = n_class;
    rec.m = m;
    rec.value = std::move(value);
    rec.prediction = std::move(pred);
    rec.residual = rec.value - rec.prediction.value();
    double e = moment_error_exponent(m);
    rec.normalized_residual =
        e == 0.0 ? rec.residual
                 : rec.residual / boost::multiprecision::pow(Real(static_cast<long long>(p)), Real(e));
    rec.imag_residue = std::move(imag);
    return rec;
}

}  // namespace detail

// sum over all p-1 characters of |G(n,chi;p)|^{2m}
inline MomentRecord power_mean(const PrimeContext& ctx, const CharacterSystem& sys, long long n,
                               unsigned m) {
    const std::uint32_t p = ctx.p();
    require_precision(p, m);
    std::vector<Complex> F = all_quadratic_gauss_sums(ctx, sys, n);
    Real total(0);
    for (const Complex& f : F) {
        Real q = norm(f);
        Real acc(1);
        for (unsigned i = 0; i < m; ++i) acc *= q;
        total += acc;
    }
    // built from |G|^2 = re^2 + im^2, so the moment is real by construction
    Real imag(0);
    int n_class = ctx.legendre(n);
    ExactPrediction pred;
    if (m == 1) {
        pred.p = p;
        pred.kind = "power2";
        pred.a = Int(p - 1) * Int(p - 1);
    } else if (m <= 4) {
        long long N = (m >= 3) ? n_sum(ctx) : 0;
        long long T = (m == 4) ? t_sum(ctx) : 0;
        pred = predicted_power_mean(p, n_class, m, N, T);
    } else if (m == 5) {
        pred = predicted_power_mean(p, n_class, m);
    } else {
        pred.p = p;
        pred.kind = "mt2-main";
        pred.a = binomial(2 * m - 1, m) * boost::multiprecision::pow(Int(p), m + 1);
        pred.asymptotic = true;
    }
    return detail::make_moment_record(p, n_class, m, total, imag, std::move(pred));
}

// Direct O(p^2)-free evaluation of the same moment without the Bluestein
// kernel; cross-path oracle.
inline Real power_mean_direct(const PrimeContext& ctx, const CharacterSystem& sys, long long n,
                              unsigned m) {
    const std::uint32_t p = ctx.p();
    if (ctx.reduce(n) == 0) throw TwistNotCoprime(n, p);
    std::vector<Complex> roots = unit_root_table(p);
    std::uint64_t nr = ctx.reduce(n);
    std::vector<Complex> w(p - 1);
    for (std::uint32_t a = 1; a < p; ++a)
        w[a - 1] = roots[nr * (static_cast<std::uint64_t>(a) * a % p) % p];
    std::vector<Complex> F = sys.transform_direct(w);
    Real total(0);
    for (const Complex& f : F) {
        Real q = norm(f);
        Real acc(1);
        for (unsigned i = 0; i < m; ++i) acc *= q;
        total += acc;
    }
    return total;
}

struct KloostermanMoment {
    std::uint32_t p = 0;
    unsigned m = 1;
    Real direct;        // transform of the value-count weights
    Real via_identity;  // from the Legendre spectrum, |sum chi(a)(a^2-1/p)|^{2m}
    ExactPrediction prediction;
    Real normalized_residual;
};

// sum over non-principal chi of |sum_a chi(a + a^{-1})|^{2m}, computed two
// ways and both retained.
inline KloostermanMoment kloosterman_moment(const PrimeContext& ctx, const CharacterSystem& sys,
                                            const LegendreSpectrum& spec, unsigned m) {
    const std::uint32_t p = ctx.p();
    require_precision(p, m);
    // counts c[x] = #{a : a + a^{-1} = x}; x = 0 contributes nothing
    std::vector<long> counts(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) counts[(a + ctx.inverse(a)) % p]++;
    std::vector<Complex> w(p - 1);
    for (std::uint32_t x = 1; x < p; ++x) w[x - 1] = Complex(Real(counts[x]));
    std::vector<Complex> K = sys.transform(w);
    auto pow_norm = [&](const Complex& z) {
        Real q = norm(z);
        Real acc(1);
        for (unsigned i = 0; i < m; ++i) acc *= q;
        return acc;
    };
    Real direct(0), via(0);
    for (std::uint32_t j = 1; j < ctx.order(); ++j) {
        direct += pow_norm(K[j]);
        via += pow_norm(spec.values[j]);
    }
    KloostermanMoment out;
    out.p = p;
    out.m = m;
    out.direct = direct;
    out.via_identity = via;
    out.prediction.p = p;
    out.prediction.kind = "mt3-main";
    out.prediction.a = binomial(2 * m - 1, m) * boost::multiprecision::pow(Int(p), m + 1);
    out.prediction.asymptotic = true;
    out.normalized_residual = (direct - out.prediction.value()) /
                              boost::multiprecision::pow(Real(static_cast<long long>(p)), Real(m + 0.5));
    return out;
}

struct WeightedMoment {
    std::uint32_t p = 0;
    int n_class = 1;
    unsigned m = 1;
    Real value;       // sum over chi != chi_0 of |G|^{2m} |L(1,chi)|
    Real unweighted;  // sum over all chi of |G|^{2m}
};

// L-weighted moment; only even non-principal characters contribute (odd
// quadratic Gauss sums vanish).
inline WeightedMoment weighted_power_mean(const PrimeContext& ctx, const CharacterSystem& sys,
                                          long long n, unsigned m) {
    const std::uint32_t p = ctx.p();
    require_precision(p, m);
    std::vector<Complex> F = all_quadratic_gauss_sums(ctx, sys, n);
    std::vector<Real> L = l_abs_even_bulk(ctx, sys);
    Real weighted(0), unweighted(0);
    for (std::uint32_t j = 0; j < ctx.order(); ++j) {
        Real q = norm(F[j]);
        Real acc(1);
        for (unsigned i = 0; i < m; ++i) acc *= q;
        unweighted += acc;
        if (j != 0 && (j & 1) == 0) weighted += acc * L[j];
    }
    return {p, ctx.legendre(n), m, weighted, unweighted};
}

// The two binomial-coefficient identities behind the main-term constants;
// both sides must equal C(2m,m).
inline std::pair<Int, Int> binomial_identities(unsigned m) {
    Int first = 0;
    for (unsigned k = 0; k <= m; k += 2) first += boost::multiprecision::pow(Int(2), m - k) * binomial(m, k) * binomial(k, k / 2);
    Int second = 0;
    for (unsigned k = 0; k <= 2 * m; ++k) {
        Int term = boost::multiprecision::pow(Int(2), 2 * m - k) * binomial(2 * m, k) * binomial(2 * k, k);
        second += (k % 2 == 0) ? term : -term;
    }
    return {first, second};
}

// (1/4pi) * integral over [0,2pi) of (2 cos t)^r dt by the periodic
// trapezoid rule, which is exact for trigonometric polynomials of degree
// below the node count.
inline Real haar_moment(unsigned r) {
    const unsigned Nn = std::max(32u, r + 2);
    Real pi = real_pi();
    Real sum(0);
    for (unsigned i = 0; i < Nn; ++i) {
        Real t = 2 * pi * i / Nn;
        Real c = 2 * boost::multiprecision::cos(t);
        Real acc(1);
        for (unsigned k = 0; k < r; ++k) acc *= c;
        sum += acc;
    }
    return sum / (2 * Nn);
}

struct DeviationReport {
    std::uint32_t p = 0;
    unsigned r = 1;
    Real s_r;
    Real main_term;    // (p-1) * main-per-character
    Real error_bound;  // (p-1) * r * 2^{r-1} * p^{(r-1)/2}
    bool pass = false;
};

// |S_r - (p-1) main_r| against the explicit bound (p-1) r 2^{r-1} p^{(r-1)/2},
// main_r = rho(-1)^{r/2} (1/2) C(r, r/2) p^{r/2} for even r, else 0.
inline DeviationReport mt1_deviation(const PrimeContext& ctx, const LegendreSpectrum& spec,
                                     unsigned r) {
    const std::uint32_t p = ctx.p();
    DeviationReport rep;
    rep.p = p;
    rep.r = r;
    rep.s_r = s_r_sum(spec, r).re;
    Real rp(static_cast<long long>(p));
    Real sqrtp = boost::multiprecision::sqrt(rp);
    Real main(0);
    if (r % 2 == 0) {
        int sgn = (ctx.legendre(-1) == -1 && (r / 2) % 2 == 1) ? -1 : 1;
        main = Real(sgn) * to_real(binomial(r, r / 2)) / 2 * boost::multiprecision::pow(sqrtp, static_cast<int>(r));
    }
    rep.main_term = (rp - 1) * main;
    rep.error_bound = (rp - 1) * Real(static_cast<long long>(r)) * boost::multiprecision::pow(Real(2), static_cast<int>(r) - 1) *
                      boost::multiprecision::pow(sqrtp, static_cast<int>(r) - 1);
    rep.pass = boost::multiprecision::abs(rep.s_r - rep.main_term) <= rep.error_bound + Real("1e-6");
    return rep;
}

}  // namespace gausslab
