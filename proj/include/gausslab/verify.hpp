#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gausslab/constants.hpp"
#include "gausslab/moments.hpp"
#include "gausslab/parallel.hpp"

namespace gausslab {

inline std::string real_to_string(const Real& x, unsigned digits = 0) {
    if (digits == 0) digits = Real::default_precision();
    return x.str(digits, std::ios_base::scientific);
}

namespace detail {

// deterministic per-prime rng for randomized spot checks
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline Real pow_int(Real base, unsigned e) {
    Real acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace detail

struct PrimeResult {
    std::uint32_t p = 0;  // prime, or the m/r/q index for non-prime-indexed statements
    Real residual;
    Real bound;
    bool pass = true;
};

struct CheckRequest {
    std::string id;
    std::uint32_t lo = 5;
    std::uint32_t hi = 199;
    unsigned m = 0;  // 0 = statement default
    unsigned r = 0;
    unsigned jobs = 0;
};

struct CheckReport {
    std::string statement_id;
    std::string anchor;
    std::uint32_t lo = 0, hi = 0;
    unsigned m = 0, r = 0;
    std::vector<PrimeResult> results;
    bool pass = true;
    bool empirical = false;
    unsigned precision_bits = 0;
    std::string version = "1";

    Real worst_residual() const {
        Real w(0);
        for (const auto& r_ : results)
            if (r_.residual > w) w = r_.residual;
        return w;
    }
};

inline const std::map<std::string, std::string>& statement_anchors() {
    static const std::map<std::string, std::string> anchors = {
        {"gauss-closed-form", "G(1;q) = (1/2) sqrt(q) (1+i)(1+e^{-pi i q/2})"},
        {"lemma-x2", "|G(n,chi;p)|^2 = (1+chi(-1)) p + (n/p) G(1;p) sum_a chi(a) ((a^2-1)/p)"},
        {"lemma-x12", "|sum_a chi(t a + 1/a)| = |sum_a chi(a) ((a^2-t)/p)|"},
        {"cochrane-bound", "|G(n,chi;q)| <= 2^{omega(q)} sqrt(q)"},
        {"power4", "sum_chi |G|^4 = (p-1)(3p^2-6p-1) [+ 4 (n/p) sqrt(p) (p-1) if p = 1 mod 4]"},
        {"power6", "sum_chi |G|^6 = (p-1)(10p^3-25p^2-16p-1) + (p(p-1)N + 18p^2 - 12p - 6) sqrt(p) (n/p) | (p-1)(10p^3-25p^2-4p-1)"},
        {"power8", "sum_chi |G|^8 = (p-1)(34p^4-...) + (56p^3+8p^2-56p-8+8p^2(p-1)N) sqrt(p) (n/p) + p^2(p-1)T"},
        {"power10", "sum_chi |G|^10 = 126 p^6 + O(p^{11/2})"},
        {"mt1", "sum_chi (sum_a chi(a)((a^2-1)/p))^r = A_r p^{(r+2)/2}, |error| <= r 2^{r-1} p^{(r-1)/2} per character"},
        {"mt2", "sum_chi |G(n,chi;p)|^{2m} = C(2m-1,m) p^{m+1} + O(p^{m+1/2})"},
        {"mt3", "sum_{chi != chi0} |sum_a chi(a+1/a)|^{2m} = C(2m-1,m) p^{m+1} + O(p^{m+1/2})"},
        {"binom-identities", "sum_{k even} 2^{m-k} C(m,k) C(k,k/2) = C(2m,m) = sum_k (-1)^k 2^{2m-k} C(2m,k) C(2k,k)"},
        {"haar-constant", "(1/4pi) int_0^{2pi} (2 cos t)^r dt = (1/2) C(r,r/2)"},
        {"parseval", "sum_j |F[j]|^2 = (p-1) sum_a |w(a)|^2"},
        {"weighted-ratio", "sum_{chi != chi0} |G|^{2m} |L(1,chi)| ~ C sum_chi |G|^{2m}"},
    };
    return anchors;
}

// cached Euler constant for the weighted-ratio report
inline const Real& weighted_ratio_constant() {
    static const Real c = [] { return constant_c(1e-8).value; }();
    return c;
}

inline CheckReport run_statement_check(const CheckRequest& req) {
    auto it = statement_anchors().find(req.id);
    if (it == statement_anchors().end()) throw UnknownStatement(req.id);

    CheckReport rep;
    rep.statement_id = req.id;
    rep.anchor = it->second;
    rep.lo = req.lo;
    rep.hi = req.hi;
    rep.m = req.m;
    rep.r = req.r;
    rep.precision_bits = precision_bits();
    rep.empirical = (req.id == "power10" || req.id == "mt2" || req.id == "mt3" ||
                     req.id == "weighted-ratio");

    const std::string& id = req.id;

    if (id == "gauss-closed-form") {
        std::uint32_t lo = std::max<std::uint32_t>(req.lo, 1);
        if (req.hi > 100000) throw RangeTooLarge("gauss-closed-form supports q <= 100000");
        std::size_t n = req.hi - lo + 1;
        rep.results = parallel_map<PrimeResult>(n, req.jobs, [&](std::size_t i) {
            std::uint32_t q = lo + static_cast<std::uint32_t>(i);
            Complex d = classical_gauss_direct(q, 1);
            Real res = abs(d - classical_gauss_closed(q));
            Real bound = Real("1e-9") * std::max(Real(1), boost::multiprecision::sqrt(Real(q)));
            return PrimeResult{q, res, bound, res < bound};
        });
    } else if (id == "binom-identities") {
        unsigned mmax = req.m ? req.m : 12;
        for (unsigned m = 1; m <= mmax; ++m) {
            auto [first, second] = binomial_identities(m);
            Int want = binomial(2 * m, m);
            bool ok = (first == want && second == want);
            rep.results.push_back({m, Real(ok ? 0 : 1), Real("0.5"), ok});
        }
    } else if (id == "haar-constant") {
        unsigned rmax = req.r ? req.r : 10;
        for (unsigned r = 2; r <= rmax; r += 2) {
            Real got = haar_moment(r);
            Real want = to_real(binomial(r, r / 2)) / 2;
            Real res = boost::multiprecision::abs(got - want);
            rep.results.push_back({r, res, Real("1e-9"), res < Real("1e-9")});
        }
    } else {
        std::vector<std::uint32_t> primes = primes_in_range(std::max<std::uint32_t>(req.lo, 3), req.hi);
        if (primes.empty()) throw RangeTooLarge("no odd primes in range");
        std::uint32_t cap = (id == "power10" || id == "cochrane-bound") ? 1999
                            : (id == "mt3" || id == "weighted-ratio" || id == "mt2") ? 999
                                                                                     : 499;
        if (id == "power6" || id == "power8" || id == "lemma-x2" || id == "lemma-x12") cap = 199;
        if (req.hi > cap)
            throw RangeTooLarge("prime range exceeds desk-scale cap " + std::to_string(cap) +
                                " for " + id);
        if (id == "weighted-ratio") weighted_ratio_constant();  // force init outside workers

        rep.results = parallel_map<PrimeResult>(primes.size(), req.jobs, [&](std::size_t i) {
            std::uint32_t p = primes[i];
            PrimeContext ctx(p);
            CharacterSystem sys(ctx);
            PrimeResult out;
            out.p = p;
            Real rp(static_cast<long long>(p));
            Real sqrtp = boost::multiprecision::sqrt(rp);

            if (id == "lemma-x2") {
                LegendreSpectrum spec = legendre_spectrum(ctx, sys);
                Complex gp = classical_gauss_closed(p);
                Real worst(0);
                for (long long n : {1LL, static_cast<long long>(ctx.smallest_nonresidue())}) {
                    std::vector<Complex> F = all_quadratic_gauss_sums(ctx, sys, n);
                    int rn = ctx.legendre(n);
                    for (std::uint32_t j = 1; j < ctx.order(); ++j) {
                        long A = (j % 2 == 0) ? 2 : 0;
                        Complex pred = Complex(Real(A) * rp) + Real(rn) * gp * spec.values[j];
                        Real res = abs(Complex(norm(F[j])) - pred);
                        if (res > worst) worst = res;
                    }
                    // principal-character case of the same lemma
                    Real pred0 = rp + 1;
                    if (p % 4 == 1) pred0 -= 2 * sqrtp * rn;
                    Real res0 = boost::multiprecision::abs(norm(F[0]) - pred0);
                    if (res0 > worst) worst = res0;
                }
                out.residual = worst;
                out.bound = Real("1e-9") * rp;
            } else if (id == "lemma-x12") {
                std::vector<int> rho = legendre_table(ctx);
                detail::SplitMix64 rng(p);
                Real worst(0);
                for (int trial = 0; trial < 10; ++trial) {
                    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.next() % (p - 1));
                    std::vector<Complex> w(p - 1);
                    for (std::uint32_t a = 1; a < p; ++a) {
                        std::uint64_t v = (static_cast<std::uint64_t>(a) * a + p - t % p) % p;
                        w[a - 1] = Complex(Real(rho[v]));
                    }
                    std::vector<Complex> X = sys.transform(w);
                    for (std::uint32_t j = 1; j < ctx.order(); ++j) {
                        Complex K = kloosterman_char_sum(ctx, sys, j, t);
                        Real res = boost::multiprecision::abs(abs(K) - abs(X[j]));
                        if (res > worst) worst = res;
                    }
                }
                out.residual = worst;
                out.bound = eps_scale(40) * sqrtp;
            } else if (id == "cochrane-bound") {
                Real worst(-1);
                for (long long n : {1LL, static_cast<long long>(ctx.smallest_nonresidue())}) {
                    std::vector<Complex> F = all_quadratic_gauss_sums(ctx, sys, n);
                    for (const Complex& f : F) {
                        Real ex = abs(f) - 2 * sqrtp;
                        if (ex > worst) worst = ex;
                    }
                }
                out.residual = std::max(worst, Real(0));
                out.bound = Real("1e-9") * sqrtp;
            } else if (id == "power4" || id == "power6" || id == "power8") {
                unsigned m = id == "power4" ? 2 : id == "power6" ? 3 : 4;
                Real worst(0);
                for (long long n : {1LL, static_cast<long long>(ctx.smallest_nonresidue())}) {
                    MomentRecord rec = power_mean(ctx, sys, n, m);
                    Real res = boost::multiprecision::abs(rec.residual);
                    if (res > worst) worst = res;
                }
                out.residual = worst;
                out.bound = Real("1e-6");
            } else if (id == "power10") {
                MomentRecord rec = power_mean(ctx, sys, 1, 5);
                out.residual = boost::multiprecision::abs(rec.normalized_residual);
                out.bound = Real(1000);
            } else if (id == "mt1") {
                LegendreSpectrum spec = legendre_spectrum(ctx, sys);
                unsigned rlo = req.r ? req.r : 1;
                unsigned rhi = req.r ? req.r : 8;
                Real worst(0);  // max over r of |S_r - main| / bound_r
                for (unsigned r = rlo; r <= rhi; ++r) {
                    DeviationReport dev = mt1_deviation(ctx, spec, r);
                    Real ratio = boost::multiprecision::abs(dev.s_r - dev.main_term) /
                                 (dev.error_bound + Real("1e-6"));
                    if (ratio > worst) worst = ratio;
                }
                out.residual = worst;
                out.bound = Real(1);
            } else if (id == "mt2") {
                unsigned m = req.m ? req.m : 3;
                MomentRecord rec = power_mean(ctx, sys, 1, m);
                Real main = to_real(binomial(2 * m - 1, m));
                out.residual =
                    boost::multiprecision::abs(rec.value / detail::pow_int(rp, m + 1) - main) * sqrtp;
                out.bound = Real(1000);
            } else if (id == "mt3") {
                unsigned m = req.m ? req.m : 2;
                LegendreSpectrum spec = legendre_spectrum(ctx, sys);
                KloostermanMoment km = kloosterman_moment(ctx, sys, spec, m);
                Real main = to_real(binomial(2 * m - 1, m));
                out.residual =
                    boost::multiprecision::abs(km.direct / detail::pow_int(rp, m + 1) - main) * sqrtp;
                out.bound = Real(1000);
                Real rel = boost::multiprecision::abs(km.direct - km.via_identity) /
                           std::max(km.direct, Real(1));
                if (rel > Real("1e-15")) out.pass = false;  // two-path disagreement
            } else if (id == "parseval") {
                detail::SplitMix64 rng(p * 2654435761ull);
                std::vector<Complex> w(p - 1);
                Real ssum(0);
                for (auto& z : w) {
                    z = Complex(Real(static_cast<long long>(rng.next() % 2001)) / 1000 - 1,
                                Real(static_cast<long long>(rng.next() % 2001)) / 1000 - 1);
                    ssum += norm(z);
                }
                std::vector<Complex> F = sys.transform(w);
                Real fsum(0);
                for (const Complex& f : F) fsum += norm(f);
                out.residual = boost::multiprecision::abs(fsum - (rp - 1) * ssum) / ((rp - 1) * ssum);
                out.bound = Real("1e-20");
            } else if (id == "weighted-ratio") {
                unsigned m = req.m ? req.m : 1;
                WeightedMoment wm = weighted_power_mean(ctx, sys, 1, m);
                Real ratio = wm.value / (weighted_ratio_constant() * wm.unweighted);
                out.residual = boost::multiprecision::abs(ratio - 1);
                out.bound = Real(0);
                out.pass = true;  // report-only statement
                return out;
            } else {
                throw UnknownStatement(id);
            }
            if (out.pass) out.pass = out.residual <= out.bound;
            return out;
        });
    }

    for (const auto& r_ : rep.results)
        if (!r_.pass) rep.pass = false;
    if (rep.statement_id == "weighted-ratio") rep.pass = true;
    return rep;
}

inline nlohmann::ordered_json report_to_json(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["statement_id"] = rep.statement_id;
    j["anchor"] = rep.anchor;
    j["range"] = {{"lo", rep.lo}, {"hi", rep.hi}};
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (rep.m) params["m"] = rep.m;
    if (rep.r) params["r"] = rep.r;
    j["params"] = params;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r_ : rep.results) {
        results.push_back({{"p", r_.p},
                           {"residual", real_to_string(r_.residual, 25)},
                           {"bound", real_to_string(r_.bound, 25)},
                           {"pass", r_.pass}});
    }
    j["results"] = results;
    j["pass"] = rep.pass;
    j["empirical_flag"] = rep.empirical;
    j["precision_bits"] = rep.precision_bits;
    j["version"] = rep.version;
    return j;
}

// ---------------------------------------------------------------------------
// moment scans with an append-only CSV cache

struct ScanKey {
    std::uint32_t p;
    int n_class;
    unsigned m;
    bool weighted;
    unsigned precision_bits;
    auto operator<=>(const ScanKey&) const = default;
};

struct ScanRow {
    ScanKey key;
    std::string value, prediction_a, prediction_b, residual, normalized_residual;
};

inline const char* scan_cache_header() {
    return "p,n_class,m,weighted,value,prediction_a,prediction_b,residual,normalized_residual,precision_bits";
}

namespace detail {
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}
}  // namespace detail

class ScanCache {
  public:
    explicit ScanCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

    bool contains(const ScanKey& k) const { return keys_.count(k) > 0; }

    void append(const std::vector<ScanRow>& rows) {
        std::ofstream out;
        if (!std::filesystem::exists(path_)) {
            out.open(path_);
            std::string header = scan_cache_header();
            char buf[32];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(detail::fnv1a(header)));
            out << "#checksum " << buf << "\n" << header << "\n";
        } else {
            out.open(path_, std::ios::app);
        }
        for (const auto& r : rows) {
            if (keys_.count(r.key)) continue;
            out << r.key.p << ',' << r.key.n_class << ',' << r.key.m << ','
                << (r.key.weighted ? 1 : 0) << ',' << r.value << ',' << r.prediction_a << ','
                << r.prediction_b << ',' << r.residual << ',' << r.normalized_residual << ','
                << r.key.precision_bits << "\n";
            keys_.insert(r.key);
        }
    }

  private:
    void load() {
        if (!std::filesystem::exists(path_)) return;
        std::ifstream in(path_);
        std::string line;
        if (!std::getline(in, line) || line.rfind("#checksum ", 0) != 0)
            throw CacheCorrupt("missing checksum line in " + path_.string());
        std::string hex = line.substr(10);
        std::string header;
        if (!std::getline(in, header) || header != scan_cache_header())
            throw CacheCorrupt("unexpected header in " + path_.string());
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(detail::fnv1a(header)));
        if (hex != buf) throw CacheCorrupt("header checksum mismatch in " + path_.string());
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string f;
            ScanKey k{};
            std::getline(ss, f, ',');
            k.p = static_cast<std::uint32_t>(std::stoul(f));
            std::getline(ss, f, ',');
            k.n_class = std::stoi(f);
            std::getline(ss, f, ',');
            k.m = static_cast<unsigned>(std::stoul(f));
            std::getline(ss, f, ',');
            k.weighted = (f == "1");
            for (int skip = 0; skip < 5; ++skip) std::getline(ss, f, ',');
            std::getline(ss, f, ',');
            k.precision_bits = static_cast<unsigned>(std::stoul(f));
            keys_.insert(k);
        }
    }

    std::filesystem::path path_;
    std::set<ScanKey> keys_;
};

// One MomentRecord per prime in range; rows already present in the cache are
// skipped (idempotent per key).
inline std::vector<ScanRow> scan_moments(std::uint32_t lo, std::uint32_t hi, unsigned m,
                                         int n_class, bool weighted, ScanCache* cache,
                                         unsigned jobs = 0) {
    if (weighted && m > 5) throw RangeTooLarge("weighted scans support m <= 5");
    if (!weighted && m > 8) throw RangeTooLarge("scans support m <= 8");
    std::vector<std::uint32_t> primes = primes_in_range(std::max<std::uint32_t>(lo, 3), hi);
    std::vector<std::uint32_t> todo;
    for (std::uint32_t p : primes) {
        ScanKey k{p, n_class, m, weighted, precision_bits()};
        if (!cache || !cache->contains(k)) todo.push_back(p);
    }
    std::vector<ScanRow> rows = parallel_map<ScanRow>(todo.size(), jobs, [&](std::size_t i) {
        std::uint32_t p = todo[i];
        PrimeContext ctx(p);
        CharacterSystem sys(ctx);
        long long n = (n_class == -1) ? ctx.smallest_nonresidue() : 1;
        ScanRow row;
        row.key = {p, n_class, m, weighted, precision_bits()};
        if (weighted) {
            WeightedMoment wm = weighted_power_mean(ctx, sys, n, m);
            row.value = real_to_string(wm.value);
            row.prediction_a = (binomial(2 * m - 1, m) * boost::multiprecision::pow(Int(p), m + 1)).str();
            row.prediction_b = "0";
            Real pred = to_real(binomial(2 * m - 1, m)) * detail::pow_int(Real(static_cast<long long>(p)), m + 1) *
                        weighted_ratio_constant();
            Real resid = wm.value - pred;
            row.residual = real_to_string(resid);
            row.normalized_residual = real_to_string(
                resid / boost::multiprecision::pow(Real(static_cast<long long>(p)), Real(m + 0.5)));
        } else {
            MomentRecord rec = power_mean(ctx, sys, n, m);
            row.value = real_to_string(rec.value);
            row.prediction_a = rec.prediction.a.str();
            row.prediction_b = rec.prediction.b.str();
            row.residual = real_to_string(rec.residual);
            row.normalized_residual = real_to_string(rec.normalized_residual);
        }
        return row;
    });
    if (cache) cache->append(rows);
    return rows;
}

}  // namespace gausslab
