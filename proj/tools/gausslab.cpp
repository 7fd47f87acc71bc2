// gausslab command-line front end.
//
// Subcommands: moments | kloosterman | sr | nt | lvalue | constant | verify | scan
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
// configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gausslab/lfun.hpp"
#include "gausslab/verify.hpp"

namespace gl = gausslab;

namespace {

struct GlobalOpts {
    std::optional<unsigned> precision_bits;
    unsigned jobs = 0;
    std::string out;
    std::string format = "json";
    std::string cache;
};

unsigned resolve_precision(const GlobalOpts& g, std::uint32_t p_max, unsigned m) {
    unsigned floor_bits = gl::precision_floor_bits(p_max, std::max(1u, m));
    if (g.precision_bits) {
        if (*g.precision_bits < floor_bits)
            throw gl::ConfigError("--precision-bits " + std::to_string(*g.precision_bits) +
                                  " below required floor " + std::to_string(floor_bits));
        return *g.precision_bits;
    }
    if (const char* env = std::getenv("GAUSSLAB_PRECISION_BITS")) {
        unsigned bits = static_cast<unsigned>(std::stoul(env));
        if (bits < floor_bits)
            throw gl::ConfigError("GAUSSLAB_PRECISION_BITS=" + std::string(env) +
                                  " below required floor " + std::to_string(floor_bits));
        return bits;
    }
    return floor_bits;
}

void emit(const GlobalOpts& g, const nlohmann::ordered_json& payload, const std::string& csv) {
    if (g.out.empty()) {
        if (g.format == "csv")
            std::cout << csv;
        else
            std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw gl::ConfigError("cannot open output file " + g.out);
    if (g.format == "csv")
        f << csv;
    else
        f << payload.dump(2) << "\n";
}

std::string results_csv(const gl::CheckReport& rep) {
    std::string csv = "p,residual,bound,pass\n";
    for (const auto& r : rep.results)
        csv += std::to_string(r.p) + "," + gl::real_to_string(r.residual, 25) + "," +
               gl::real_to_string(r.bound, 25) + "," + (r.pass ? "1" : "0") + "\n";
    return csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized quadratic Gauss sum moments: computation and identity checks"};
    app.require_subcommand(1);

    GlobalOpts g;
    unsigned precision_flag = 0;
    app.add_option("--precision-bits", precision_flag, "working precision override (bits)");
    app.add_option("--jobs", g.jobs, "worker threads (default: hardware parallelism)");
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "output format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache", g.cache, "scan cache file (append-only CSV)");

    std::uint32_t p = 7, pmin = 5, pmax = 199, jj = 2;
    long long n = 1;
    unsigned m = 2, r = 2;
    int n_class = 1;
    bool weighted = false;
    double eps = 1e-6;
    std::uint64_t terms = 1000000;
    std::string statement;

    auto* cmd_moments = app.add_subcommand("moments", "2m-th power mean of |G(n,chi;p)| over all characters");
    cmd_moments->add_option("--p", p, "odd prime")->required();
    cmd_moments->add_option("--n", n, "twist, coprime to p");
    cmd_moments->add_option("--m", m, "half-power (computes the 2m-th mean)");
    cmd_moments->add_flag("--weighted", weighted, "weight by |L(1,chi)| over non-principal chi");

    auto* cmd_kl = app.add_subcommand("kloosterman", "2m-th moment of sum_a chi(a+1/a)");
    cmd_kl->add_option("--p", p)->required();
    cmd_kl->add_option("--m", m);

    auto* cmd_sr = app.add_subcommand("sr", "S_r = sum_chi (sum_a chi(a)((a^2-1)/p))^r");
    cmd_sr->add_option("--p", p)->required();
    cmd_sr->add_option("--r", r);

    auto* cmd_nt = app.add_subcommand("nt", "the convolution sums N and T");
    cmd_nt->add_option("--p", p)->required();

    auto* cmd_lv = app.add_subcommand("lvalue", "L(1,chi_j), closed form and series");
    cmd_lv->add_option("--p", p)->required();
    cmd_lv->add_option("--j", jj, "even non-principal character index");
    cmd_lv->add_option("--terms", terms, "series length");

    auto* cmd_const = app.add_subcommand("constant", "Euler product constant C");
    cmd_const->add_option("--eps", eps, "target tail bound");

    auto* cmd_verify = app.add_subcommand("verify", "run one statement check over a prime range");
    cmd_verify->add_option("--statement", statement, "statement id")->required();
    cmd_verify->add_option("--pmin", pmin);
    cmd_verify->add_option("--pmax", pmax);
    cmd_verify->add_option("--m", m);
    cmd_verify->add_option("--r", r);

    auto* cmd_scan = app.add_subcommand("scan", "moment scan over a prime range (cached)");
    cmd_scan->add_option("--pmin", pmin);
    cmd_scan->add_option("--pmax", pmax);
    cmd_scan->add_option("--m", m);
    cmd_scan->add_option("--n-class", n_class, "+1 residue twist, -1 non-residue twist")
        ->check(CLI::IsMember({1, -1}));
    cmd_scan->add_flag("--weighted", weighted);

    // global flags are accepted after a subcommand name too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (precision_flag) g.precision_bits = precision_flag;

    try {
        if (cmd_moments->parsed()) {
            gl::set_precision_bits(resolve_precision(g, p, m));
            gl::PrimeContext ctx(p);
            gl::CharacterSystem sys(ctx);
            nlohmann::ordered_json out;
            std::string csv;
            if (weighted) {
                gl::WeightedMoment wm = gl::weighted_power_mean(ctx, sys, n, m);
                out = {{"p", p}, {"n", n}, {"m", m}, {"weighted", true},
                       {"value", gl::real_to_string(wm.value)},
                       {"unweighted", gl::real_to_string(wm.unweighted)}};
                csv = "p,n,m,weighted,value,unweighted\n" + std::to_string(p) + "," +
                      std::to_string(n) + "," + std::to_string(m) + ",1," +
                      gl::real_to_string(wm.value) + "," + gl::real_to_string(wm.unweighted) + "\n";
            } else {
                gl::MomentRecord rec = gl::power_mean(ctx, sys, n, m);
                out = {{"p", p}, {"n", n}, {"m", m}, {"weighted", false},
                       {"value", gl::real_to_string(rec.value)},
                       {"prediction", gl::real_to_string(rec.prediction.value())},
                       {"prediction_a", rec.prediction.a.str()},
                       {"prediction_b", rec.prediction.b.str()},
                       {"prediction_kind", rec.prediction.kind},
                       {"asymptotic", rec.prediction.asymptotic},
                       {"residual", gl::real_to_string(rec.residual)},
                       {"normalized_residual", gl::real_to_string(rec.normalized_residual)}};
                csv = "p,n,m,value,prediction,residual\n" + std::to_string(p) + "," +
                      std::to_string(n) + "," + std::to_string(m) + "," +
                      gl::real_to_string(rec.value) + "," +
                      gl::real_to_string(rec.prediction.value()) + "," +
                      gl::real_to_string(rec.residual) + "\n";
            }
            emit(g, out, csv);
        } else if (cmd_kl->parsed()) {
            gl::set_precision_bits(resolve_precision(g, p, m));
            gl::PrimeContext ctx(p);
            gl::CharacterSystem sys(ctx);
            gl::LegendreSpectrum spec = gl::legendre_spectrum(ctx, sys);
            gl::KloostermanMoment km = gl::kloosterman_moment(ctx, sys, spec, m);
            nlohmann::ordered_json out = {
                {"p", p}, {"m", m},
                {"value", gl::real_to_string(km.direct)},
                {"via_identity", gl::real_to_string(km.via_identity)},
                {"prediction", gl::real_to_string(km.prediction.value())},
                {"normalized_residual", gl::real_to_string(km.normalized_residual)}};
            emit(g, out, "p,m,value,via_identity\n" + std::to_string(p) + "," + std::to_string(m) +
                             "," + gl::real_to_string(km.direct) + "," +
                             gl::real_to_string(km.via_identity) + "\n");
        } else if (cmd_sr->parsed()) {
            gl::set_precision_bits(resolve_precision(g, p, (r + 1) / 2));
            gl::PrimeContext ctx(p);
            gl::CharacterSystem sys(ctx);
            gl::LegendreSpectrum spec = gl::legendre_spectrum(ctx, sys);
            gl::Complex sr = gl::s_r_sum(spec, r);
            gl::DeviationReport dev = gl::mt1_deviation(ctx, spec, r);
            nlohmann::ordered_json out = {{"p", p}, {"r", r},
                                          {"s_r", gl::real_to_string(sr.re)},
                                          {"imag", gl::real_to_string(sr.im)},
                                          {"main_term", gl::real_to_string(dev.main_term)},
                                          {"error_bound", gl::real_to_string(dev.error_bound)},
                                          {"within_bound", dev.pass}};
            emit(g, out, "p,r,s_r,main_term,error_bound,within_bound\n" + std::to_string(p) + "," +
                             std::to_string(r) + "," + gl::real_to_string(sr.re) + "," +
                             gl::real_to_string(dev.main_term) + "," +
                             gl::real_to_string(dev.error_bound) + "," +
                             (dev.pass ? "1" : "0") + "\n");
        } else if (cmd_nt->parsed()) {
            gl::PrimeContext ctx(p);
            long long N = gl::n_sum(ctx), T = gl::t_sum(ctx);
            nlohmann::ordered_json out = {{"p", p}, {"N", N}, {"T", T}};
            emit(g, out, "p,N,T\n" + std::to_string(p) + "," + std::to_string(N) + "," +
                             std::to_string(T) + "\n");
        } else if (cmd_lv->parsed()) {
            gl::set_precision_bits(resolve_precision(g, p, 1));
            gl::PrimeContext ctx(p);
            gl::CharacterSystem sys(ctx);
            gl::LValue closed = gl::l_one_even(ctx, sys, jj);
            gl::LValue series = gl::l_one_series(ctx, sys, jj, terms);
            nlohmann::ordered_json out = {
                {"p", p}, {"j", jj},
                {"closed_form", {{"re", gl::real_to_string(closed.value.re)},
                                 {"im", gl::real_to_string(closed.value.im)},
                                 {"abs", gl::real_to_string(abs(closed.value))}}},
                {"series", {{"re", gl::real_to_string(series.value.re)},
                            {"im", gl::real_to_string(series.value.im)},
                            {"abs", gl::real_to_string(abs(series.value))},
                            {"tail_bound", gl::real_to_string(series.abs_error)}}}};
            emit(g, out, "p,j,closed_abs,series_abs,tail_bound\n" + std::to_string(p) + "," +
                             std::to_string(jj) + "," + gl::real_to_string(abs(closed.value)) +
                             "," + gl::real_to_string(abs(series.value)) + "," +
                             gl::real_to_string(series.abs_error) + "\n");
        } else if (cmd_const->parsed()) {
            gl::set_precision_bits(g.precision_bits.value_or(192));
            gl::EulerProductResult c = gl::constant_c(eps);
            nlohmann::ordered_json out = {{"eps", eps},
                                          {"prime_cutoff", c.cutoff},
                                          {"value", gl::real_to_string(c.value)},
                                          {"tail_bound", gl::real_to_string(c.tail_bound)}};
            emit(g, out, "eps,prime_cutoff,value,tail_bound\n" + std::to_string(eps) + "," +
                             std::to_string(c.cutoff) + "," + gl::real_to_string(c.value) + "," +
                             gl::real_to_string(c.tail_bound) + "\n");
        } else if (cmd_verify->parsed()) {
            gl::set_precision_bits(resolve_precision(g, pmax, std::max(m, 5u)));
            gl::CheckRequest req{statement, pmin, pmax, cmd_verify->count("--m") ? m : 0,
                                 cmd_verify->count("--r") ? r : 0, g.jobs};
            gl::CheckReport rep = gl::run_statement_check(req);
            emit(g, gl::report_to_json(rep), results_csv(rep));
            std::cerr << (rep.pass ? "PASS " : "FAIL ") << rep.statement_id << " worst residual "
                      << gl::real_to_string(rep.worst_residual(), 6) << "\n";
            return rep.pass ? 0 : 1;
        } else if (cmd_scan->parsed()) {
            gl::set_precision_bits(resolve_precision(g, pmax, m));
            std::optional<gl::ScanCache> cache;
            if (!g.cache.empty()) cache.emplace(g.cache);
            auto rows = gl::scan_moments(pmin, pmax, m, n_class, weighted,
                                         cache ? &*cache : nullptr, g.jobs);
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            std::string csv = std::string(gl::scan_cache_header()) + "\n";
            for (const auto& row : rows) {
                arr.push_back({{"p", row.key.p}, {"n_class", row.key.n_class}, {"m", row.key.m},
                               {"weighted", row.key.weighted}, {"value", row.value},
                               {"prediction_a", row.prediction_a},
                               {"prediction_b", row.prediction_b}, {"residual", row.residual},
                               {"normalized_residual", row.normalized_residual},
                               {"precision_bits", row.key.precision_bits}});
                csv += std::to_string(row.key.p) + "," + std::to_string(row.key.n_class) + "," +
                       std::to_string(row.key.m) + "," + (row.key.weighted ? "1" : "0") + "," +
                       row.value + "," + row.prediction_a + "," + row.prediction_b + "," +
                       row.residual + "," + row.normalized_residual + "," +
                       std::to_string(row.key.precision_bits) + "\n";
            }
            emit(g, arr, csv);
        }
    } catch (const gl::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
