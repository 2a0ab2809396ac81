// Command-line front end: verification campaigns with CSV + JSON output.
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slab/bessel.hpp"
#include "slab/cutoffs.hpp"
#include "slab/dyadic.hpp"
#include "slab/errors.hpp"
#include "slab/exponents.hpp"
#include "slab/field.hpp"
#include "slab/knapp.hpp"
#include "slab/oscillatory.hpp"
#include "slab/parallel.hpp"
#include "slab/report.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Global {
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int threads = 0;  // 0: STRICHARTZ_LAB_THREADS, then hardware
    std::string out;  // output prefix; default = subcommand name
};

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void write_outputs(const Global& g, const std::string& name,
                   const std::string& csv, const json& summary) {
    const std::string prefix = g.out.empty() ? name : g.out;
    {
        std::ofstream f(prefix + ".csv", std::ios::binary);
        f << csv;
    }
    {
        std::ofstream f(prefix + ".json", std::ios::binary);
        f << summary.dump(2) << "\n";
    }
    std::cout << summary.dump(2) << "\n";
}

json global_json(const Global& g) {
    return {{"seed", g.seed},
            {"tol", g.tol},
            {"threads", slab::resolve_threads(g.threads)}};
}

int finish(const Global& g, const std::string& name, const std::string& csv,
           json summary, const std::vector<std::string>& failures) {
    summary["failures"] = failures;
    summary["pass"] = failures.empty();
    write_outputs(g, name, csv, summary);
    return failures.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- admissible

int cmd_admissible(const Global& g, int d, double a, const std::string& qs,
                   const std::string& ps, const std::string& ss) {
    using namespace slab;
    ExponentTuple e;
    e.d = d;
    e.a = a;
    e.q = parse_extrat(qs);
    e.p = parse_extrat(ps);
    e.s = parse_extrat(ss);
    e.validate();

    json summary;
    summary["command"] = "admissible";
    summary["config"] = {{"d", d}, {"a", a}, {"q", e.q.str()},
                         {"p", e.p.str()}, {"s", e.s.str()}};
    summary["config"].update(global_json(g));

    CsvWriter csv;
    csv.header({"condition", "verdict"});
    const std::pair<Condition, const char*> conds[] = {
        {Condition::WA, "WA"}, {Condition::SA, "SA"}, {Condition::RWA, "RWA"},
        {Condition::RSA, "RSA"}, {Condition::Thm11, "thm11"}};
    json verdicts;
    for (auto [c, name] : conds) {
        const char* v = verdict_name(classify(c, e));
        verdicts[name] = v;
        csv.row({name, v});
    }
    summary["verdicts"] = verdicts;
    if (!e.s.is_inf() && !e.q.is_inf()) {
        ExponentTuple k = e;
        summary["knapp_predicted_slope"] = knapp_predicted_slope(k).str();
    }
    return finish(g, "admissible", csv.str(), summary, {});
}

// --------------------------------------------------------------- bessel-check

int cmd_bessel_check(const Global& g, const std::string& lemma,
                     const std::vector<double>& nus, double rmax_mult,
                     int points, double eps, int K) {
    using namespace slab;
    CsvWriter csv;
    csv.header({"nu", "r", "value", "envelope", "ratio"});
    json per_nu = json::array();
    std::vector<std::string> failures;
    double sup_min = 1e300, sup_max = 0.0;

    for (double nu : nus) {
        EnvelopeReport rep;
        if (lemma == "2.2") {
            const double lo = std::max(10.0 * (1.0 + 1e-9), 10.0);
            const double hi = rmax_mult * nu;
            for (int i = 0; i < points; ++i) {
                const double r = lo * std::pow(hi / lo, double(i) / (points - 1));
                rep.add(nu, r, j_bessel({nu, r}, g.tol),
                        envelope_uniform_decay({nu, r}));
            }
        } else if (lemma == "2.3") {
            // scan the strongly-decaying region nu - r > r^{1/3+eps}
            const double lo = 10.0 * (1.0 + 1e-9);
            const double hi = 0.8 * nu;
            if (!(hi > lo)) throw std::domain_error("bessel-check 2.3: nu too small");
            for (int i = 0; i < points; ++i) {
                const double r = lo * std::pow(hi / lo, double(i) / (points - 1));
                auto c = decay_region_check(nu, r, eps, K);
                if (!c.applicable) continue;
                rep.add(nu, r, j_bessel({nu, r}, g.tol), c.bound);
            }
        } else if (lemma == "2.5") {
            const double lo = (nu + std::cbrt(nu)) * (1.0 + 1e-9);
            const double hi = rmax_mult * nu;
            for (int i = 0; i < points; ++i) {
                const double r = lo * std::pow(hi / lo, double(i) / (points - 1));
                auto am = asymptotic_main({nu, r});
                rep.add(nu, r, j_bessel({nu, r}, g.tol) - am.main,
                        am.remainder_envelope);
            }
        } else {
            throw std::domain_error("bessel-check: lemma must be 2.2, 2.3 or 2.5");
        }
        for (const auto& pt : rep.points)
            csv.row_nums({pt.nu, pt.r, pt.value, pt.envelope, pt.ratio});
        per_nu.push_back({{"nu", nu}, {"sup_ratio", rep.sup_ratio},
                          {"arg_r", rep.arg_r}});
        sup_min = std::min(sup_min, rep.sup_ratio);
        sup_max = std::max(sup_max, rep.sup_ratio);
        if (!std::isfinite(rep.sup_ratio))
            failures.push_back("sup ratio not finite at nu " + fmt_num(nu));
    }

    json summary;
    summary["command"] = "bessel-check";
    summary["config"] = {{"lemma", lemma}, {"rmax_mult", rmax_mult},
                         {"points", points}, {"eps", eps}, {"K", K},
                         {"nu", nus}};
    summary["config"].update(global_json(g));
    summary["per_nu"] = per_nu;
    summary["sup_ratio"] = sup_max;
    if (lemma == "2.2" && nus.size() > 1) {
        const double spread = sup_max / sup_min;
        summary["spread"] = spread;
        if (!(spread <= 2.0))
            failures.push_back("cross-nu spread " + fmt_num(spread) + " > 2");
    }
    if (lemma == "2.5") {
        summary["ceiling"] = kMainRatioCeiling;
        if (!(sup_max <= kMainRatioCeiling))
            failures.push_back("sup ratio " + fmt_num(sup_max) + " above ceiling " +
                               fmt_num(kMainRatioCeiling));
    }
    return finish(g, "bessel-check", csv.str(), summary, failures);
}

// ----------------------------------------------------------- stationary-phase

int cmd_stationary_phase(const Global& g, double lmin, double lmax, int points) {
    using namespace slab;
    if (points < 3) throw std::domain_error("stationary-phase: points >= 3");

    OscillatoryProblem quad;  // phi = x^2/2, smooth bump amplitude
    quad.phase = [](int k, double x) -> double {
        switch (k) {
            case 0: return 0.5 * x * x;
            case 1: return x;
            case 2: return 1.0;
            default: return 0.0;
        }
    };
    quad.amplitude = [](double x) { return bump(x); };
    OscillatoryProblem cubic = quad;  // phi = x^3/6: |phi'''| = 1
    cubic.phase = [](int k, double x) -> double {
        switch (k) {
            case 0: return x * x * x / 6.0;
            case 1: return 0.5 * x * x;
            case 2: return x;
            case 3: return 1.0;
            default: return 0.0;
        }
    };

    auto coeffs = stationary_phase_coefficients(quad, 1);
    CsvWriter csv;
    csv.header({"lambda", "remainder", "corrected", "vdc2", "vdc3"});
    std::vector<double> lams, rem, rem1, v2, v3;
    for (int i = 0; i < points; ++i) {
        const double lam = lmin * std::pow(lmax / lmin, double(i) / (points - 1));
        quad.lambda = lam;
        cubic.lambda = lam;
        const auto I = eval_I(quad, 1e-13);
        const auto lead = stationary_phase_leading(quad);
        const std::complex<double> pref =
            std::sqrt(2.0 * M_PI / lam) * std::polar(1.0, M_PI / 4.0);
        lams.push_back(lam);
        rem.push_back(std::abs(I - lead.leading));
        rem1.push_back(std::abs(I - lead.leading - pref * coeffs[0] / lam));
        v2.push_back(van_der_corput_check(quad, 2).lhs);
        v3.push_back(van_der_corput_check(cubic, 3).lhs);
        csv.row_nums({lam, rem.back(), rem1.back(), v2.back(), v3.back()});
    }

    const SlopeFit f0 = fit_loglog(lams, rem, 10.0);
    const SlopeFit f1 = fit_loglog(lams, rem1, 10.0);
    const SlopeFit f2 = fit_loglog(lams, v2, 10.0);
    const SlopeFit f3 = fit_loglog(lams, v3, 10.0);

    std::vector<std::string> failures;
    auto check = [&failures](const char* name, double got, double want, double tol) {
        if (!(std::abs(got - want) <= tol))
            failures.push_back(std::string(name) + " slope " + fmt_num(got) +
                               " outside " + fmt_num(want) + " +- " + fmt_num(tol));
    };
    check("remainder", f0.slope, -1.5, 0.1);
    check("corrected", f1.slope, -2.5, 0.15);
    check("vdc k=2", f2.slope, -0.5, 0.05);
    check("vdc k=3", f3.slope, -1.0 / 3.0, 0.05);

    json summary;
    summary["command"] = "stationary-phase";
    summary["config"] = {{"lambda_min", lmin}, {"lambda_max", lmax},
                         {"points", points}};
    summary["config"].update(global_json(g));
    summary["slopes"] = {{"remainder", f0.slope}, {"corrected", f1.slope},
                         {"vdc2", f2.slope}, {"vdc3", f3.slope}};
    return finish(g, "stationary-phase", csv.str(), summary, failures);
}

// -------------------------------------------------------------- dyadic scans

int cmd_dyadic_scan(const Global& g, double a, int d, double q, double p,
                    const std::vector<double>& nus, int jmin, int jmax,
                    const std::string& lambda_rule, double eps, int ensemble,
                    double max_slope, double min_slope, double max_spread) {
    using namespace slab;
    DyadicScanConfig cfg;
    cfg.a = a;
    cfg.d = d;
    cfg.q = q;
    cfg.p = p;
    cfg.nus = nus;
    cfg.jmin = jmin;
    cfg.jmax = jmax;
    cfg.lambda_rule = lambda_rule;
    cfg.eps = eps;
    cfg.ensemble = ensemble;
    cfg.seed = g.seed;
    cfg.threads = resolve_threads(g.threads);
    cfg.tol = g.tol;
    const DyadicScanResult res = dyadic_scan(cfg);

    CsvWriter csv;
    csv.header({"nu", "R", "opnorm", "weighted_norm"});
    for (const auto& r : res.rows)
        csv.row_nums({r.nu, r.R, r.opnorm, r.weighted});

    std::vector<std::string> failures;
    json fits = json::array();
    for (std::size_t i = 0; i < res.fits.size(); ++i) {
        fits.push_back({{"nu", cfg.nus[i]},
                        {"slope", res.fits[i].slope},
                        {"stderr", res.fits[i].stderr_slope},
                        {"constant", res.constants[i]}});
        if (!std::isnan(max_slope) && !(res.fits[i].slope <= max_slope))
            failures.push_back("nu " + fmt_num(cfg.nus[i]) + " slope " +
                               fmt_num(res.fits[i].slope) + " > " + fmt_num(max_slope));
        if (!std::isnan(min_slope) && !(res.fits[i].slope >= min_slope))
            failures.push_back("nu " + fmt_num(cfg.nus[i]) + " slope " +
                               fmt_num(res.fits[i].slope) + " < " + fmt_num(min_slope));
    }
    if (!std::isnan(max_spread) && !(res.spread <= max_spread))
        failures.push_back("constant spread " + fmt_num(res.spread) + " > " +
                           fmt_num(max_spread));

    json summary;
    summary["command"] = "dyadic-scan";
    summary["config"] = {{"a", a}, {"d", d}, {"q", q}, {"p", p}, {"nu", nus},
                         {"jmin", jmin}, {"jmax", jmax},
                         {"lambda_rule", lambda_rule}, {"eps", eps},
                         {"ensemble", ensemble},
                         {"t_points", 1024},
                         {"weight_exponent", res.weight_exponent}};
    summary["config"].update(global_json(g));
    summary["fits"] = fits;
    summary["spread"] = res.spread;
    return finish(g, "dyadic-scan", csv.str(), summary, failures);
}

int cmd_lemma34_scan(const Global& g, int nu, int jmin, int jmax, double eps,
                     int N, int ensemble) {
    using namespace slab;
    Lemma34Config cfg;
    cfg.nu = nu;
    cfg.jmin = jmin;
    cfg.jmax = jmax;
    cfg.eps = eps;
    cfg.N = N;
    cfg.ensemble = ensemble;
    cfg.seed = g.seed;
    cfg.threads = resolve_threads(g.threads);
    cfg.tol = g.tol;
    const Lemma34Result res = lemma34_scan(cfg);

    CsvWriter csv;
    csv.header({"R", "lambda", "opnorm", "all_zero"});
    for (const auto& r : res.rows)
        csv.row({fmt_num(r.R), fmt_num(r.lambda), fmt_num(r.opnorm),
                 r.all_zero ? "1" : "0"});

    json summary;
    summary["command"] = "lemma34-scan";
    summary["config"] = {{"nu", nu}, {"jmin", jmin}, {"jmax", jmax},
                         {"eps", eps}, {"N", N}, {"ensemble", ensemble}};
    summary["config"].update(global_json(g));
    summary["predicted_slope"] = res.predicted_slope;
    summary["fit_valid"] = res.fit_valid;
    if (res.fit_valid) {
        summary["slope"] = res.fit.slope;
        summary["stderr"] = res.fit.stderr_slope;
    }
    bool all_vanish = true;
    for (const auto& r : res.rows) all_vanish = all_vanish && r.all_zero;
    summary["all_zero"] = all_vanish;
    return finish(g, "lemma34-scan", csv.str(), summary, {});
}

// -------------------------------------------------------------------- knapp

int cmd_knapp(const Global& g, int d, double a, double q, double p, double s,
              double delta_min, double delta_max,
              const std::string& expect_verdict) {
    using namespace slab;
    KnappConfig cfg;
    cfg.d = d;
    cfg.a = a;
    cfg.q = q;
    cfg.p = p;
    cfg.s = s;
    cfg.threads = resolve_threads(g.threads);
    const int kmin = int(std::lround(-std::log2(delta_max)));
    const int kmax = int(std::lround(-std::log2(delta_min)));
    const KnappScanResult res = knapp_scan(cfg, kmin, kmax);

    CsvWriter csv;
    csv.header({"delta", "ratio", "predicted_slope", "fitted_slope", "stderr"});
    for (const auto& r : res.rows)
        csv.row_nums({r.delta, r.ratio, res.predicted, res.fit.slope,
                      res.fit.stderr_slope});

    std::vector<std::string> failures;
    if (!expect_verdict.empty() && expect_verdict != res.verdict)
        failures.push_back("verdict " + res.verdict + " != expected " + expect_verdict);

    json summary;
    summary["command"] = "knapp";
    summary["config"] = {{"d", d}, {"a", a}, {"q", q}, {"p", p}, {"s", s},
                         {"delta_min", delta_min}, {"delta_max", delta_max},
                         {"n_t", cfg.n_t}, {"n_rho", cfg.n_rho},
                         {"n_theta", cfg.n_theta}};
    summary["config"].update(global_json(g));
    summary["predicted_slope"] = res.predicted;
    summary["fitted_slope"] = res.fit.slope;
    summary["stderr"] = res.fit.stderr_slope;
    summary["f_l2_slope"] = res.f_fit.slope;
    summary["verdict"] = res.verdict;
    return finish(g, "knapp", csv.str(), summary, failures);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for dispersive mixed-norm estimates"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--seed", g.seed, "PRNG seed");
    app.add_option("--tol", g.tol, "quadrature tolerance");
    app.add_option("--threads", g.threads,
                   "worker threads (0: STRICHARTZ_LAB_THREADS or hardware)");
    app.add_option("--out", g.out, "output file prefix");

    // admissible
    auto* adm = app.add_subcommand("admissible", "classify an exponent tuple");
    int adm_d = 2;
    double adm_a = 2.0;
    std::string adm_q = "2", adm_p = "2", adm_s = "2";
    adm->add_option("--d", adm_d)->required();
    adm->add_option("--a", adm_a);
    adm->add_option("--q", adm_q)->required();
    adm->add_option("--p", adm_p)->required();
    adm->add_option("--s", adm_s);

    // bessel-check
    auto* bes = app.add_subcommand("bessel-check", "envelope scans");
    std::string bes_lemma = "2.2", bes_nus = "10.5,20,50,100";
    double bes_mult = 10.0, bes_eps = 0.1;
    int bes_points = 200, bes_K = 5;
    bes->add_option("--lemma", bes_lemma);
    bes->add_option("--nu", bes_nus);
    bes->add_option("--rmax-mult", bes_mult);
    bes->add_option("--points", bes_points);
    bes->add_option("--eps", bes_eps);
    bes->add_option("--K", bes_K);

    // stationary-phase
    auto* sph = app.add_subcommand("stationary-phase", "expansion slope checks");
    double sph_lmin = 100.0, sph_lmax = 10000.0;
    int sph_points = 5;
    sph->add_option("--lambda-min", sph_lmin);
    sph->add_option("--lambda-max", sph_lmax);
    sph->add_option("--points", sph_points);

    // dyadic-scan
    auto* dya = app.add_subcommand("dyadic-scan", "weighted operator-norm scan");
    double dya_a = 2.0, dya_q = 2.0, dya_p = 4.0, dya_eps = 0.05;
    double dya_max_slope = NAN, dya_min_slope = NAN, dya_max_spread = NAN;
    int dya_d = 3, dya_jmin = 5, dya_jmax = 10, dya_ens = 12;
    std::string dya_nus = "10,50,200", dya_rule = "R^{1/2+eps}";
    dya->add_option("--a", dya_a);
    dya->add_option("--d", dya_d);
    dya->add_option("--q", dya_q);
    dya->add_option("--p", dya_p);
    dya->add_option("--nu", dya_nus);
    dya->add_option("--jmin", dya_jmin);
    dya->add_option("--jmax", dya_jmax);
    dya->add_option("--lambda-rule", dya_rule);
    dya->add_option("--eps", dya_eps);
    dya->add_option("--ensemble", dya_ens);
    dya->add_option("--max-slope", dya_max_slope, "fail if any fitted slope exceeds this");
    dya->add_option("--min-slope", dya_min_slope, "fail if any fitted slope is below this");
    dya->add_option("--max-spread", dya_max_spread, "fail if the constant spread exceeds this");

    // lemma34-scan
    auto* l34 = app.add_subcommand("lemma34-scan", "gamma_2 piece decay scan");
    int l34_nu = 50, l34_jmin = 5, l34_jmax = 10, l34_N = 2, l34_ens = 12;
    double l34_eps = 0.1;
    l34->add_option("--nu", l34_nu);
    l34->add_option("--jmin", l34_jmin);
    l34->add_option("--jmax", l34_jmax);
    l34->add_option("--eps", l34_eps);
    l34->add_option("--N", l34_N);
    l34->add_option("--ensemble", l34_ens);

    // knapp
    auto* kna = app.add_subcommand("knapp", "cap-example slope scan");
    int kna_d = 2;
    double kna_a = 2.0, kna_q = 2.0, kna_p = 8.0, kna_s = 2.0;
    double kna_dmin = 0.015625, kna_dmax = 0.125;
    std::string kna_expect;
    kna->add_option("--d", kna_d);
    kna->add_option("--a", kna_a);
    kna->add_option("--q", kna_q);
    kna->add_option("--p", kna_p);
    kna->add_option("--s", kna_s);
    kna->add_option("--delta-min", kna_dmin);
    kna->add_option("--delta-max", kna_dmax);
    kna->add_option("--expect-verdict", kna_expect);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (adm->parsed())
            return cmd_admissible(g, adm_d, adm_a, adm_q, adm_p, adm_s);
        if (bes->parsed())
            return cmd_bessel_check(g, bes_lemma, parse_list(bes_nus), bes_mult,
                                    bes_points, bes_eps, bes_K);
        if (sph->parsed())
            return cmd_stationary_phase(g, sph_lmin, sph_lmax, sph_points);
        if (dya->parsed())
            return cmd_dyadic_scan(g, dya_a, dya_d, dya_q, dya_p,
                                   parse_list(dya_nus), dya_jmin, dya_jmax,
                                   dya_rule, dya_eps, dya_ens, dya_max_slope,
                                   dya_min_slope, dya_max_spread);
        if (l34->parsed())
            return cmd_lemma34_scan(g, l34_nu, l34_jmin, l34_jmax, l34_eps,
                                    l34_N, l34_ens);
        if (kna->parsed())
            return cmd_knapp(g, kna_d, kna_a, kna_q, kna_p, kna_s, kna_dmin,
                             kna_dmax, kna_expect);
    } catch (const slab::precision_error& e) {
        std::cerr << "precision budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
