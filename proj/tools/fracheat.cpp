// Command-line front end: model specification, kernel computation, zeta
// evaluation, expansion prediction/fitting, scaling demos, blow-up profiles,
// and the property-suite runner.  JSON for structured reports, CSV for sample
// grids; all floats with 17 significant digits.

#include <CLI11.hpp>

#include <fracheat/serialize.hpp>
#include <fracheat/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace fracheat;

// FRACHEAT_THREADS caps worker parallelism.  All module computations run on
// the orchestration thread, so every positive cap is honored as-is; the value
// is parsed and validated here so misconfiguration fails loudly.
int thread_cap() {
    const char* env = std::getenv("FRACHEAT_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw invalid_argument_error("FRACHEAT_THREADS must be a positive integer");
    return (int)v;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string cell;
    while (std::getline(is, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

struct model_opts {
    int n = 1;
    std::string radii = "";
    double shift = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "dimension (number of circle factors)")
            ->check(CLI::Range(1, 8));
        cmd->add_option("--radii", radii, "comma-separated radii p_j (default: all 1)");
        cmd->add_option("--shift", shift, "spectral shift xi >= 0")
            ->check(CLI::NonNegativeNumber);
    }
    spectral_model build() const {
        std::vector<double> p = radii.empty() ? std::vector<double>(n, 1.0)
                                              : parse_list(radii);
        return spectral_model::make(n, p, shift);
    }
};

struct grid_opts {
    std::string t_geom = "1e-2:1:1.25";
    std::vector<double> t_list;

    void attach(CLI::App* cmd) {
        cmd->add_option("--t-geom", t_geom, "geometric t grid min:max:ratio");
        cmd->add_option("--t", t_list, "explicit t values (overrides --t-geom)");
    }
    std::vector<double> build() const {
        if (!t_list.empty()) return t_list;
        std::istringstream is(t_geom);
        std::string a, b, c;
        if (!std::getline(is, a, ':') || !std::getline(is, b, ':') ||
            !std::getline(is, c, ':'))
            throw invalid_argument_error("--t-geom expects min:max:ratio");
        auto g = geometric_grid(std::stod(a), std::stod(b), std::stod(c));
        std::vector<double> out;
        for (auto& p : g.points) out.push_back(p.t);
        return out;
    }
};

struct out_opt {
    std::string path;
    void attach(CLI::App* cmd) {
        cmd->add_option("--out", path, "output file (default: stdout)");
    }
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw invalid_argument_error("cannot open output file: " + path);
        f << text;
    }
};

rational_power parse_r_checked(const std::string& text, bool open_interval = true) {
    rational_power r = parse_power(text);
    if (open_interval && !(r.value() > 0.0 && r.value() < 1.0))
        throw invalid_argument_error("usage: --r must lie in (0,1)");
    return r;
}

std::vector<double> point_or_origin(const std::string& s, int n) {
    if (s.empty()) return std::vector<double>(n, 0.0);
    auto v = parse_list(s);
    if ((int)v.size() != n)
        throw invalid_argument_error("point dimension does not match --n");
    return v;
}

int run(int argc, char** argv) {
    CLI::App app{"heat kernels, spectral zeta functions, and small-time "
                 "expansions for fractional powers of torus Laplacians"};
    app.require_subcommand(1);
    const int threads = thread_cap();
    (void)threads;

    // ---- eigensum ----
    auto* c_eig = app.add_subcommand("eigensum", "enumerate eigenvalues with "
                                     "multiplicities below a cutoff (CSV)");
    model_opts eig_m;
    eig_m.attach(c_eig);
    double eig_cutoff = 100.0, eig_budget = 1e8;
    out_opt eig_out;
    c_eig->add_option("--cutoff", eig_cutoff, "spectral cutoff")->required();
    c_eig->add_option("--budget", eig_budget, "lattice enumeration budget");
    eig_out.attach(c_eig);

    // ---- heat ----
    auto* c_heat = app.add_subcommand("heat", "sample a heat kernel over a t grid (CSV)");
    model_opts heat_m;
    heat_m.attach(c_heat);
    grid_opts heat_t;
    heat_t.attach(c_heat);
    std::string heat_r = "1/2", heat_method = "eigensum", heat_x, heat_y;
    bool heat_diag = false;
    double heat_tol = 1e-10, heat_tau = 0.0;
    int heat_nodes = 0;
    out_opt heat_out;
    c_heat->add_option("--r", heat_r, "power r in (0,1), fraction a/b or decimal");
    c_heat->add_option("--method", heat_method, "eigensum|poisson|inverse-mellin|subordination")
        ->check(CLI::IsMember({"eigensum", "poisson", "inverse-mellin", "subordination"}));
    c_heat->add_flag("--diag", heat_diag, "evaluate on the diagonal x = y = 0");
    c_heat->add_option("--x", heat_x, "first point, comma-separated coordinates");
    c_heat->add_option("--y", heat_y, "second point, comma-separated coordinates");
    c_heat->add_option("--tol", heat_tol, "target accuracy");
    c_heat->add_option("--tau", heat_tau, "contour abscissa (inverse-mellin only)");
    c_heat->add_option("--nodes", heat_nodes, "contour node count (inverse-mellin only)");
    heat_out.attach(c_heat);

    // ---- zeta ----
    auto* c_zeta = app.add_subcommand("zeta", "evaluate the spectral zeta function "
                                      "or the off-diagonal kernel q_s (JSON)");
    model_opts zeta_m;
    zeta_m.attach(c_zeta);
    std::string zeta_s, zeta_x, zeta_y;
    out_opt zeta_out;
    c_zeta->add_option("--s", zeta_s, "evaluation point re[,im]")->required();
    c_zeta->add_option("--x", zeta_x, "first point (off-diagonal q_s mode)");
    c_zeta->add_option("--y", zeta_y, "second point (off-diagonal q_s mode)");
    zeta_out.attach(c_zeta);

    // ---- predict ----
    auto* c_pred = app.add_subcommand("predict", "exponent template and predicted "
                                      "expansion coefficients (JSON)");
    model_opts pred_m;
    pred_m.attach(c_pred);
    std::string pred_r = "1/2";
    double pred_maxexp = 4.0;
    out_opt pred_out;
    c_pred->add_option("--r", pred_r, "power r in (0,1)");
    c_pred->add_option("--max-exp", pred_maxexp, "truncate template at this exponent");
    pred_out.attach(c_pred);

    // ---- fit ----
    auto* c_fit = app.add_subcommand("fit", "fit expansion coefficients to samples and "
                                     "compare against predictions (JSON)");
    model_opts fit_m;
    fit_m.attach(c_fit);
    grid_opts fit_t;
    fit_t.attach(c_fit);
    std::string fit_r = "1/2", fit_in, fit_method = "subordination";
    double fit_maxexp = 2.0, fit_reltol = 1e-3, fit_absfloor = 1e-9, fit_tol = 1e-11;
    out_opt fit_out;
    c_fit->add_option("--r", fit_r, "power r in (0,1)");
    c_fit->add_option("--max-exp", fit_maxexp, "truncate template at this exponent");
    c_fit->add_option("--in", fit_in, "read samples from CSV (t,value,error_bound) "
                      "instead of generating them");
    c_fit->add_option("--method", fit_method, "sample generator when --in is absent")
        ->check(CLI::IsMember({"eigensum", "inverse-mellin", "subordination"}));
    c_fit->add_option("--rel-tol", fit_reltol, "per-row relative tolerance");
    c_fit->add_option("--abs-floor", fit_absfloor, "per-row absolute floor");
    c_fit->add_option("--tol", fit_tol, "sample generation accuracy");
    fit_out.attach(c_fit);

    // ---- verify ----
    auto* c_ver = app.add_subcommand("verify", "run the module property suites");
    bool ver_quick = false, ver_fault = false;
    c_ver->add_flag("--quick", ver_quick, "trimmed grids, finishes in under a minute");
    c_ver->add_flag("--fault-inject", ver_fault,
                    "append a deliberately failing check (negative control)");

    // ---- nonlocality ----
    auto* c_non = app.add_subcommand("nonlocality", "radius-scaling demo: the integer "
                                     "coefficients of the diagonal expansion depend on "
                                     "the global geometry (JSON)");
    int non_n = 1;
    long long non_j = 1;
    std::string non_r = "1/2";
    double non_p = 2.0, non_tol = 1e-8;
    out_opt non_out;
    c_non->add_option("--n", non_n, "dimension")->check(CLI::Range(1, 8));
    c_non->add_option("--r", non_r, "power r in (0,1)");
    c_non->add_option("--j", non_j, "coefficient index (t^j term)")
        ->check(CLI::PositiveNumber);
    c_non->add_option("--p", non_p, "rescaled radius")->check(CLI::PositiveNumber);
    c_non->add_option("--tol", non_tol, "ratio agreement tolerance");
    non_out.attach(c_non);

    // ---- blowup ----
    auto* c_blow = app.add_subcommand("blowup", "half-power kernel on the parabolic "
                                      "blow-up: profile along a ray (CSV)");
    model_opts blow_m;
    blow_m.attach(c_blow);
    double blow_omega0 = 1.0;
    std::string blow_oprime, blow_base, blow_rho = "0.4:0.0125:0.5";
    out_opt blow_out;
    c_blow->add_option("--omega0", blow_omega0, "time component of the unit direction")
        ->check(CLI::Range(0.0, 1.0));
    c_blow->add_option("--omega-prime", blow_oprime,
                       "spatial direction components (default: aligned with axis 1, "
                       "scaled so the direction is unit length)");
    c_blow->add_option("--base", blow_base, "base point x' (default: origin)");
    c_blow->add_option("--rho-geom", blow_rho, "rho grid start:end:ratio (decreasing)");
    blow_out.attach(c_blow);

    CLI11_PARSE(app, argc, argv);

    if (c_eig->parsed()) {
        spectral_model m = eig_m.build();
        auto list = enumerate_eigenvalues(m, eig_cutoff, 1.0, 1.0, eig_budget);
        std::ostringstream os;
        os << "lambda,multiplicity\n";
        for (auto& [lam, mult] : list.entries)
            os << fmt17(lam) << ',' << mult << '\n';
        eig_out.write(os.str());
        return 0;
    }

    if (c_heat->parsed()) {
        spectral_model m = heat_m.build();
        rational_power r = parse_r_checked(heat_r);
        if (heat_method == "subordination" &&
            !(r.is_rational && r.alpha == 1 && r.beta == 2))
            throw invalid_argument_error("usage: --method subordination requires --r 1/2");
        std::vector<double> x = point_or_origin(heat_x, m.n);
        std::vector<double> y = heat_y.empty() && heat_diag
                                    ? x
                                    : point_or_origin(heat_y, m.n);
        if (heat_diag) y = x;
        std::vector<kernel_sample> samples;
        contour_params contour;
        if (heat_tau > 0.0) contour.tau = heat_tau;
        if (heat_nodes > 0) contour.node_count = heat_nodes;
        for (double t : heat_t.build()) {
            if (heat_method == "eigensum")
                samples.push_back(heat_kernel_direct(m, r, t, x, y, heat_tol));
            else if (heat_method == "poisson")
                samples.push_back(heat_kernel_poisson(m, t, x, y));
            else if (heat_method == "inverse-mellin")
                samples.push_back(heat_kernel_inverse_mellin(m, r, t, x, contour, heat_tol));
            else
                samples.push_back(subordinated_kernel(m, t, x, y, heat_tol));
        }
        heat_out.write(samples_to_csv(samples));
        return 0;
    }

    if (c_zeta->parsed()) {
        spectral_model m = zeta_m.build();
        auto sv = parse_list(zeta_s);
        cplx s{sv.at(0), sv.size() > 1 ? sv[1] : 0.0};
        json j;
        if (!zeta_x.empty() || !zeta_y.empty()) {
            auto x = point_or_origin(zeta_x, m.n);
            auto y = point_or_origin(zeta_y, m.n);
            auto q = q_kernel_offdiag(m, s, x, y);
            j["s"] = {jnum(s.real()), jnum(s.imag())};
            json jx = json::array(), jy = json::array();
            for (double v : x) jx.push_back(jnum(v));
            for (double v : y) jy.push_back(jnum(v));
            j["x"] = jx;
            j["y"] = jy;
            j["value"] = {jnum(q.value.real()), jnum(q.value.imag())};
        } else {
            j = zeta_to_json(epstein_zeta(m, s));
        }
        j["model"] = model_to_json(m);
        zeta_out.write(j.dump(2) + "\n");
        return 0;
    }

    if (c_pred->parsed()) {
        spectral_model m = pred_m.build();
        rational_power r = parse_r_checked(pred_r);
        auto tmpl = predict_exponents(m.n, r, pred_maxexp);
        auto rep = predict_coefficients(m, r, tmpl);
        json j = report_to_json(rep);
        j["model"] = model_to_json(m);
        pred_out.write(j.dump(2) + "\n");
        return 0;
    }

    if (c_fit->parsed()) {
        spectral_model m = fit_m.build();
        rational_power r = parse_r_checked(fit_r);
        auto tmpl = predict_exponents(m.n, r, fit_maxexp);
        auto rep = predict_coefficients(m, r, tmpl);
        sample_grid grid;
        if (!fit_in.empty()) {
            std::ifstream in(fit_in);
            if (!in) throw invalid_argument_error("cannot open " + fit_in);
            grid = samples_from_csv(in);
        } else {
            std::vector<double> x(m.n, 0.0);
            for (double t : fit_t.build()) {
                kernel_sample ks;
                if (fit_method == "eigensum")
                    ks = heat_kernel_direct(m, r, t, x, x, fit_tol);
                else if (fit_method == "inverse-mellin")
                    ks = heat_kernel_inverse_mellin(m, r, t, x, {}, fit_tol);
                else
                    ks = subordinated_kernel(m, t, x, x, fit_tol);
                grid.points.push_back({ks.t, ks.value, ks.error_bound});
            }
        }
        auto fr = fit_expansion(grid, tmpl);
        auto merged = compare(rep, fr, fit_reltol, fit_absfloor);
        json j = report_to_json(merged);
        j["model"] = model_to_json(m);
        j["condition_number"] = jnum(fr.condition_number);
        j["residual_norm"] = jnum(fr.residual_norm);
        fit_out.write(j.dump(2) + "\n");
        return merged.all_pass ? 0 : 1;
    }

    if (c_ver->parsed()) {
        auto results = run_property_suites(ver_quick);
        if (ver_fault) {
            check_result fake;
            fake.name = "fault_injection.negative_control";
            fake.pass = false;
            fake.detail = "deliberate failure requested via --fault-inject";
            results.push_back(fake);
        }
        bool all = true;
        for (const auto& r : results) {
            all &= r.pass;
            std::printf("[%s] %-45s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.seconds, r.detail.empty() ? "" : " ",
                        r.detail.c_str());
        }
        std::printf("%zu checks, %s\n", results.size(), all ? "all passed" : "FAILURES");
        return all ? 0 : 1;
    }

    if (c_non->parsed()) {
        rational_power r = parse_r_checked(non_r);
        double rj = r.value() * double(non_j);
        if (std::abs(rj - std::round(rj)) < 1e-12)
            throw invalid_argument_error("usage: r*j must not be an integer; the "
                                         "scaling comparison needs a regular point");
        cplx s{-rj, 0.0};
        spectral_model m1 = spectral_model::unit(non_n);
        spectral_model mp = spectral_model::make(
            non_n, std::vector<double>(non_n, non_p), 0.0);
        double q1 = q_kernel_diag(m1, s).value.real();
        double qp = q_kernel_diag(mp, s).value.real();
        double ratio = qp / q1;
        double expected = std::pow(non_p, -2.0 * rj - double(non_n));
        double zeta_abs = std::abs(epstein_zeta(m1, s).value);
        bool pass = zeta_abs > 0.0 &&
                    std::abs(ratio - expected) <= non_tol * std::abs(expected);
        json j{{"n", non_n},
               {"r", jnum(r.value())},
               {"j", non_j},
               {"p", jnum(non_p)},
               {"s", jnum(-rj)},
               {"q_unit", jnum(q1)},
               {"q_rescaled", jnum(qp)},
               {"ratio", jnum(ratio)},
               {"expected_ratio", jnum(expected)},
               {"zeta_abs", jnum(zeta_abs)},
               {"zeta_nonzero", zeta_abs > 0.0},
               {"pass", pass}};
        non_out.write(j.dump(2) + "\n");
        return pass ? 0 : 1;
    }

    if (c_blow->parsed()) {
        spectral_model m = blow_m.build();
        blowup_point pt;
        pt.omega0 = blow_omega0;
        pt.base = point_or_origin(blow_base, m.n);
        if (blow_oprime.empty()) {
            pt.omega_prime.assign(m.n, 0.0);
            pt.omega_prime[0] = std::sqrt(std::max(0.0, 1.0 - blow_omega0 * blow_omega0));
        } else {
            pt.omega_prime = parse_list(blow_oprime);
            if ((int)pt.omega_prime.size() != m.n)
                throw invalid_argument_error("--omega-prime dimension mismatch");
            double s2 = blow_omega0 * blow_omega0;
            for (double w : pt.omega_prime) s2 += w * w;
            double norm = std::sqrt(s2);
            pt.omega0 /= norm;
            for (double& w : pt.omega_prime) w /= norm;
        }
        std::istringstream is(blow_rho);
        std::string a, b, c;
        if (!std::getline(is, a, ':') || !std::getline(is, b, ':') ||
            !std::getline(is, c, ':'))
            throw invalid_argument_error("--rho-geom expects start:end:ratio");
        double rho = std::stod(a), rho_end = std::stod(b), ratio = std::stod(c);
        if (!(ratio > 0.0 && ratio < 1.0))
            throw invalid_argument_error("--rho-geom ratio must lie in (0,1)");
        std::ostringstream os;
        os << "rho,omega0,value,scaled\n";
        for (; rho >= rho_end * (1.0 - 1e-12); rho *= ratio) {
            pt.rho = rho;
            double v = blowup_pullback(m, pt);
            double scaled = pt.omega0 > 0.0
                                ? std::pow(rho, m.n) * v / pt.omega0
                                : 0.0;
            os << fmt17(rho) << ',' << fmt17(pt.omega0) << ',' << fmt17(v) << ','
               << fmt17(scaled) << '\n';
        }
        blow_out.write(os.str());
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
