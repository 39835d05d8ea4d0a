#include "ebg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebg/basis.hpp"
#include "ebg/errors.hpp"
#include "ebg/problems.hpp"
#include "ebg/stepper.hpp"
#include "ebg/tuner.hpp"

namespace fs = std::filesystem;

namespace ebg {

namespace {

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_time(double t) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "could not parse '" + piece +
                                                 "' as a number");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Raw flag values plus the option handles needed to ask what was given.
struct RawArgs {
    std::string problem;
    double nu = 0.01;
    double h = 0.0;
    int n = 0;
    double dt = 0.0, tmax = 0.0, p = 0.0;
    std::string scan_p, domain, snapshots;
    double exhaustive_step = 0.0;
    int inner = 3, quad = 8, oversample = 4;
    std::string out = ".";
    CLI::Option* opt_h = nullptr;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_p = nullptr;
    CLI::Option* opt_scan = nullptr;
    CLI::Option* opt_ex = nullptr;
    CLI::Option* opt_domain = nullptr;
    CLI::Option* opt_snapshots = nullptr;
};

void attach_options(CLI::App& app, RawArgs& r) {
    app.set_help_flag("--help", "print usage");
    app.add_option("--problem", r.problem, "test problem: shock or wave")
        ->required()
        ->check(CLI::IsMember({"shock", "wave"}));
    app.add_option("--nu", r.nu, "viscosity (default 0.01)")
        ->check(CLI::PositiveNumber);
    r.opt_h = app.add_option("--h", r.h, "knot spacing");
    r.opt_n = app.add_option("--n", r.n, "number of subintervals");
    r.opt_h->excludes(r.opt_n);
    r.opt_n->excludes(r.opt_h);
    app.add_option("--dt", r.dt, "time step")->required()->check(CLI::PositiveNumber);
    app.add_option("--tmax", r.tmax, "final time")->required();
    r.opt_p = app.add_option("--p", r.p, "tension parameter");
    r.opt_scan = app.add_option("--scan-p", r.scan_p, "tension scan interval min,max");
    r.opt_p->excludes(r.opt_scan);
    r.opt_scan->excludes(r.opt_p);
    r.opt_ex = app.add_option("--scan-exhaustive", r.exhaustive_step,
                              "scan linearly with this increment");
    r.opt_ex->needs(r.opt_scan);
    r.opt_domain = app.add_option("--domain", r.domain, "domain endpoints a,b");
    r.opt_snapshots =
        app.add_option("--snapshots", r.snapshots, "snapshot times t1,t2,...");
    app.add_option("--inner-iters", r.inner, "solve passes per step (default 3)")
        ->check(CLI::Range(1, 100));
    app.add_option("--quad-order", r.quad, "Gauss-Legendre order (default 8)")
        ->check(CLI::Range(1, 32));
    app.add_option("--plot-oversample", r.oversample,
                   "interior profile samples per element (default 4)")
        ->check(CLI::Range(0, 64));
    app.add_option("--out", r.out, "output directory (default .)");
}

double problem_t_start(const std::string& problem) {
    return problem == "shock" ? 1.0 : 0.0;
}

RunManifest resolve_manifest(const RawArgs& r) {
    RunManifest m;
    m.problem = r.problem;
    m.nu = r.nu;
    m.domain_a = 0.0;
    m.domain_b = 1.0;
    if (r.opt_domain->count() > 0) {
        if (m.problem != "shock")
            throw CLI::ValidationError(
                "--domain", "domain override is only supported for the shock problem");
        const std::vector<double> d = parse_list(r.domain, "--domain");
        if (d.size() != 2 || !(d[0] < d[1]))
            throw CLI::ValidationError("--domain", "expected a,b with a < b");
        m.domain_a = d[0];
        m.domain_b = d[1];
    }

    const double span = m.domain_b - m.domain_a;
    if (r.opt_h->count() == 0 && r.opt_n->count() == 0)
        throw CLI::RequiredError("one of --h or --n");
    if (r.opt_n->count() > 0) {
        if (r.n < 4)
            throw CLI::ValidationError("--n", "need at least 4 intervals");
        m.n_intervals = r.n;
    } else {
        if (!(r.h > 0.0)) throw CLI::ValidationError("--h", "must be positive");
        const double ratio = span / r.h;
        const long long n = std::llround(ratio);
        if (n < 4 || std::abs(ratio - n) > 1e-6 * ratio)
            throw CLI::ValidationError(
                "--h", "spacing must divide the domain into at least 4 intervals");
        m.n_intervals = static_cast<int>(n);
    }
    m.h = span / m.n_intervals;

    m.dt = r.dt;
    m.tmax = r.tmax;
    const double t0 = problem_t_start(m.problem);
    if (m.tmax < t0)
        throw CLI::ValidationError("--tmax",
                                   "precedes the problem start time t = " +
                                       fmt_time(t0));

    if (r.opt_p->count() == 0 && r.opt_scan->count() == 0)
        throw CLI::RequiredError("one of --p or --scan-p");
    if (r.opt_scan->count() > 0) {
        const std::vector<double> s = parse_list(r.scan_p, "--scan-p");
        if (s.size() != 2 || !(s[0] > 0.0) || !(s[0] <= s[1]))
            throw CLI::ValidationError("--scan-p", "expected min,max with 0 < min <= max");
        m.scan = true;
        m.scan_min = s[0];
        m.scan_max = s[1];
        if (r.opt_ex->count() > 0) {
            if (!(r.exhaustive_step > 0.0))
                throw CLI::ValidationError("--scan-exhaustive", "increment must be positive");
            m.exhaustive = true;
            m.exhaustive_step = r.exhaustive_step;
        }
    } else {
        if (!(r.p > 0.0)) throw CLI::ValidationError("--p", "must be positive");
        m.p = r.p;
    }

    if (r.opt_snapshots->count() > 0) {
        std::vector<double> t = parse_list(r.snapshots, "--snapshots");
        if (t.empty())
            throw CLI::ValidationError("--snapshots", "expected at least one time");
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        for (double ti : t)
            if (ti < t0 || ti > m.tmax)
                throw CLI::ValidationError("--snapshots",
                                           "time " + fmt_time(ti) +
                                               " outside [" + fmt_time(t0) + ", " +
                                               fmt_time(m.tmax) + "]");
        m.snapshots = std::move(t);
    } else {
        m.snapshots = {m.tmax};
    }

    m.inner_iters = r.inner;
    m.quad_order = r.quad;
    m.plot_oversample = r.oversample;
    m.out_dir = r.out;
    return m;
}

nlohmann::ordered_json manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["problem"] = m.problem;
    j["nu"] = m.nu;
    j["n_intervals"] = m.n_intervals;
    j["h"] = m.h;
    j["dt"] = m.dt;
    j["tmax"] = m.tmax;
    j["scan"] = m.scan;
    j["p"] = m.p;
    j["scan_min"] = m.scan_min;
    j["scan_max"] = m.scan_max;
    j["exhaustive"] = m.exhaustive;
    j["exhaustive_step"] = m.exhaustive_step;
    j["domain_a"] = m.domain_a;
    j["domain_b"] = m.domain_b;
    j["snapshots"] = m.snapshots;
    j["inner_iters"] = m.inner_iters;
    j["quad_order"] = m.quad_order;
    j["plot_oversample"] = m.plot_oversample;
    j["out_dir"] = m.out_dir;
    return j;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
}

void write_profile(const fs::path& dir, const Snapshot& snap,
                   const BasisParams& basis, const ProblemSpec& prob,
                   int oversample) {
    std::string csv = "x,u_numeric,u_exact,abs_error\n";
    const auto emit = [&](double x) {
        const double un = eval_solution(basis, snap.delta.values, x);
        const double ue = prob.has_exact
                              ? prob.exact(x, snap.time)
                              : std::numeric_limits<double>::quiet_NaN();
        csv += fmt17(x) + "," + fmt17(un) + "," + fmt17(ue) + "," +
               fmt17(std::abs(un - ue)) + "\n";
    };
    for (int m = 0; m < basis.n_intervals; ++m)
        for (int k = 0; k <= oversample; ++k)
            emit(basis.knot(m) + basis.h * k / (oversample + 1));
    emit(basis.b());
    write_text(dir / ("profile_" + fmt_time(snap.time) + ".csv"), csv);
}

}  // namespace

RunManifest parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exponential B-spline Galerkin solver for Burgers' equation"};
    RawArgs raw;
    attach_options(app, raw);
    std::vector<const char*> argv;
    argv.push_back("ebg");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return resolve_manifest(raw);
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(std::string("usage error: ") + e.what());
    }
}

std::string manifest_to_json(const RunManifest& m) {
    return manifest_json(m).dump(2);
}

RunManifest manifest_from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (j.contains("manifest")) j = j["manifest"];
    RunManifest m;
    m.problem = j.at("problem").get<std::string>();
    m.nu = j.at("nu").get<double>();
    m.n_intervals = j.at("n_intervals").get<int>();
    m.h = j.at("h").get<double>();
    m.dt = j.at("dt").get<double>();
    m.tmax = j.at("tmax").get<double>();
    m.scan = j.at("scan").get<bool>();
    m.p = j.at("p").get<double>();
    m.scan_min = j.at("scan_min").get<double>();
    m.scan_max = j.at("scan_max").get<double>();
    m.exhaustive = j.at("exhaustive").get<bool>();
    m.exhaustive_step = j.at("exhaustive_step").get<double>();
    m.domain_a = j.at("domain_a").get<double>();
    m.domain_b = j.at("domain_b").get<double>();
    m.snapshots = j.at("snapshots").get<std::vector<double>>();
    m.inner_iters = j.at("inner_iters").get<int>();
    m.quad_order = j.at("quad_order").get<int>();
    m.plot_oversample = j.at("plot_oversample").get<int>();
    m.out_dir = j.at("out_dir").get<std::string>();
    return m;
}

int execute(const RunManifest& m) {
    const ProblemSpec prob = (m.problem == "shock")
                                 ? shock_problem(m.nu, m.domain_a, m.domain_b)
                                 : travelling_problem(m.nu);

    SolverConfig cfg;
    cfg.n_intervals = m.n_intervals;
    cfg.dt = m.dt;
    cfg.t_end = m.tmax;
    cfg.nu = m.nu;
    cfg.inner_iterations = m.inner_iters;
    cfg.quadrature_order = m.quad_order;
    cfg.snapshot_times = m.snapshots;

    fs::create_directories(m.out_dir);
    const fs::path dir(m.out_dir);

    try {
        double resolved_p = m.p;
        ScanResult scan_result;
        bool have_scan = false;
        if (m.scan) {
            if (m.exhaustive) {
                scan_result = scan_exhaustive(prob, cfg, m.scan_min, m.scan_max,
                                              m.exhaustive_step, m.tmax);
            } else {
                ScanSpec ss;
                ss.p_min = m.scan_min;
                ss.p_max = m.scan_max;
                ss.target_time = m.tmax;
                scan_result = scan_p(prob, cfg, ss);
            }
            resolved_p = scan_result.best_p;
            have_scan = true;

            std::string csv = "p,linf\n";
            for (const auto& [pv, ev] : scan_result.trace)
                csv += fmt17(pv) + "," + fmt17(ev) + "\n";
            write_text(dir / "scan.csv", csv);
            std::printf("scan: best p = %.9g with L_inf = %.9e (%zu candidates)\n",
                        scan_result.best_p, scan_result.best_error,
                        scan_result.trace.size());
        }

        cfg.p = resolved_p;
        const std::vector<Snapshot> snaps = run(prob, cfg);
        const BasisParams basis =
            make_basis(resolved_p, m.h, m.n_intervals, prob.a);

        for (const Snapshot& snap : snaps)
            write_profile(dir, snap, basis, prob, m.plot_oversample);

        std::string errors_csv = "time,linf\n";
        for (const Snapshot& snap : snaps)
            if (snap.has_error)
                errors_csv += fmt17(snap.time) + "," + fmt17(snap.linf_error) + "\n";
        write_text(dir / "errors.csv", errors_csv);

        nlohmann::ordered_json rec;
        rec["manifest"] = manifest_json(m);
        nlohmann::ordered_json res;
        res["t_start"] = prob.t_start;
        res["beta1"] = prob.beta1;
        res["beta2"] = prob.beta2;
        res["p"] = resolved_p;
        res["h"] = m.h;
        res["n_intervals"] = m.n_intervals;
        res["steps"] = std::llround((m.tmax - prob.t_start) / m.dt);
        if (have_scan) {
            res["scan_best_p"] = scan_result.best_p;
            res["scan_best_error"] = scan_result.best_error;
            res["scan_evaluations"] = scan_result.trace.size();
        }
        rec["resolved"] = res;
        write_text(dir / "run.json", rec.dump(2) + "\n");

        std::printf("problem=%s N=%d h=%g dt=%g nu=%g p=%.9g\n", m.problem.c_str(),
                    m.n_intervals, m.h, m.dt, m.nu, resolved_p);
        std::printf("  time       L_inf x 10^3\n");
        for (const Snapshot& snap : snaps)
            if (snap.has_error)
                std::printf("  %-9g  %.5f\n", snap.time, snap.linf_error * 1e3);
        return 0;
    } catch (const blow_up_error& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 2;
    } catch (const singular_matrix_error& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 2;
    } catch (const no_viable_p_error& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 2;
    } catch (const tension_overflow_error& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 2;
    }
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"exponential B-spline Galerkin solver for Burgers' equation"};
    RawArgs raw;
    attach_options(app, raw);
    RunManifest manifest;
    try {
        app.parse(argc, argv);
        manifest = resolve_manifest(raw);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        return execute(manifest);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    }
}

}  // namespace ebg
