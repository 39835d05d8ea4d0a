#include "ebg/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ebg/errors.hpp"

namespace ebg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective for one candidate p: L-infinity error at target_time. Runs that
// blow up, hit a singular matrix or overflow the tension argument count as
// +infinity.
double evaluate_candidate(const ProblemSpec& prob, const SolverConfig& tmpl,
                          double p, double target_time) {
    SolverConfig cfg = tmpl;
    cfg.p = p;
    cfg.t_end = target_time;
    cfg.snapshot_times = {target_time};
    try {
        const std::vector<Snapshot> snaps = run(prob, cfg);
        return snaps.back().linf_error;
    } catch (const blow_up_error&) {
        return kInf;
    } catch (const singular_matrix_error&) {
        return kInf;
    } catch (const tension_overflow_error&) {
        return kInf;
    }
}

// Evaluates all candidates, distributing indices round-robin over a thread
// pool. Results are keyed by index, so the outcome does not depend on
// scheduling.
std::vector<double> evaluate_batch(const ProblemSpec& prob,
                                   const SolverConfig& tmpl,
                                   const std::vector<double>& ps,
                                   double target_time) {
    std::vector<double> errors(ps.size(), kInf);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(hw, ps.size()));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < ps.size(); ++i)
            errors[i] = evaluate_candidate(prob, tmpl, ps[i], target_time);
        return errors;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < ps.size(); i += n_threads)
                errors[i] = evaluate_candidate(prob, tmpl, ps[i], target_time);
        });
    for (auto& th : pool) th.join();
    return errors;
}

// Folds one evaluated grid into the result; strict improvement keeps the
// incumbent on ties, so flat objectives resolve to the first minimum seen.
void absorb(ScanResult& res, const std::vector<double>& ps,
            const std::vector<double>& errors) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        res.trace.emplace_back(ps[i], errors[i]);
        if (errors[i] < res.best_error) {
            res.best_error = errors[i];
            res.best_p = ps[i];
        }
    }
}

}  // namespace

ScanResult scan_p(const ProblemSpec& prob, const SolverConfig& tmpl,
                  const ScanSpec& spec) {
    if (!(spec.p_min > 0.0) || !(spec.p_max >= spec.p_min))
        throw std::invalid_argument("scan_p: need 0 < p_min <= p_max");
    if (spec.coarse_count < 3)
        throw std::invalid_argument("scan_p: coarse_count must be >= 3");
    if (!prob.has_exact)
        throw std::invalid_argument("scan_p: objective needs an exact solution");

    ScanResult res;
    res.best_p = spec.p_min;
    res.best_error = kInf;

    if (spec.p_min == spec.p_max) {
        const std::vector<double> ps{spec.p_min};
        absorb(res, ps, evaluate_batch(prob, tmpl, ps, spec.target_time));
        if (!std::isfinite(res.best_error)) throw no_viable_p_error();
        return res;
    }

    double lo = spec.p_min;
    double hi = spec.p_max;
    for (int round = 0; round <= spec.refine_rounds; ++round) {
        const double cell = (hi - lo) / (spec.coarse_count - 1);
        std::vector<double> ps(spec.coarse_count);
        for (int i = 0; i < spec.coarse_count; ++i) ps[i] = lo + i * cell;
        absorb(res, ps, evaluate_batch(prob, tmpl, ps, spec.target_time));
        if (std::isfinite(res.best_error)) {
            lo = std::max(spec.p_min, res.best_p - cell);
            hi = std::min(spec.p_max, res.best_p + cell);
        }
    }

    if (!std::isfinite(res.best_error)) throw no_viable_p_error();
    return res;
}

ScanResult scan_exhaustive(const ProblemSpec& prob, const SolverConfig& tmpl,
                           double p_min, double p_max, double step,
                           double target_time) {
    if (!(p_min > 0.0) || !(p_max >= p_min))
        throw std::invalid_argument("scan_exhaustive: need 0 < p_min <= p_max");
    if (!(step > 0.0))
        throw std::invalid_argument("scan_exhaustive: step must be > 0");
    if (!prob.has_exact)
        throw std::invalid_argument("scan_exhaustive: objective needs an exact solution");

    std::vector<double> ps;
    for (long long i = 0;; ++i) {
        const double p = p_min + i * step;
        if (p > p_max * (1.0 + 1e-12)) break;
        ps.push_back(std::min(p, p_max));
    }

    ScanResult res;
    res.best_p = p_min;
    res.best_error = kInf;
    absorb(res, ps, evaluate_batch(prob, tmpl, ps, target_time));
    if (!std::isfinite(res.best_error)) throw no_viable_p_error();
    return res;
}

}  // namespace ebg
