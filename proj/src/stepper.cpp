#include "ebg/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ebg/errors.hpp"
#include "ebg/quadrature.hpp"

namespace ebg {

AssembledSystem assemble_global(const BasisParams& basis,
                                const ElementMatrices& elem, int n_intervals) {
    if (n_intervals < 4)
        throw std::invalid_argument("assemble_global: need at least 4 intervals");
    const int dim = n_intervals + 3;
    AssembledSystem sys{basis, elem, BandedMatrix(dim), BandedMatrix(dim),
                        n_intervals};
    // element m touches splines m-1..m+2, i.e. global rows/cols m..m+3
    for (int m = 0; m < n_intervals; ++m)
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) {
                sys.A.add(m + j, m + i, elem.Ae[j][i]);
                sys.C.add(m + j, m + i, elem.Ce[j][i]);
            }
    return sys;
}

BandedMatrix assemble_convection(const ElementMatrices& elem,
                                 const CoefficientVector& delta) {
    const int dim = static_cast<int>(delta.values.size());
    const int n = dim - 3;
    if (n < 4)
        throw std::invalid_argument("assemble_convection: need at least 4 intervals");
    BandedMatrix b(dim);
    for (int m = 0; m < n; ++m) {
        const std::array<double, 4> local{delta.values[m], delta.values[m + 1],
                                          delta.values[m + 2],
                                          delta.values[m + 3]};
        const Mat4 bm = contract_convection(elem.Be, local);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) b.add(m + j, m + i, bm[j][i]);
    }
    return b;
}

CoefficientVector build_initial_delta(const BasisParams& basis,
                                      const std::function<double(double)>& f,
                                      double fp_a, double fp_b) {
    const int n = basis.n_intervals;
    const double alpha1 = basis.alpha1;
    const double alpha2 = basis.alpha2;

    TridiagonalMatrix tm;
    tm.dim = n + 1;
    tm.lower.assign(n + 1, alpha1);
    tm.diag.assign(n + 1, 1.0);
    tm.upper.assign(n + 1, alpha1);
    std::vector<double> rhs(n + 1);
    for (int i = 0; i <= n; ++i) rhs[i] = f(basis.knot(i));

    // End rows after substituting the slope relations into the knot rows.
    tm.upper[0] = 2.0 * alpha1;
    rhs[0] -= alpha1 * fp_a / alpha2;
    tm.lower[n] = 2.0 * alpha1;
    rhs[n] += alpha1 * fp_b / alpha2;

    const std::vector<double> y = thomas_solve(tm, rhs);

    CoefficientVector delta;
    delta.values.assign(n + 3, 0.0);
    for (int i = 0; i <= n; ++i) delta.values[i + 1] = y[i];
    delta.values[0] = y[1] + fp_a / alpha2;
    delta.values[n + 2] = y[n - 1] - fp_b / alpha2;
    return delta;
}

CoefficientVector predict(const CoefficientVector& delta_n,
                          const CoefficientVector& delta_nm1) {
    if (delta_n.values.size() != delta_nm1.values.size())
        throw std::invalid_argument("predict: length mismatch");
    CoefficientVector out = delta_n;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = 1.5 * delta_n.values[i] - 0.5 * delta_nm1.values[i];
    return out;
}

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

CoefficientVector step(const AssembledSystem& sys,
                       const CoefficientVector& delta_n,
                       const CoefficientVector* delta_nm1,
                       const SolverConfig& cfg, double beta1, double beta2,
                       std::size_t step_index) {
    const int n = sys.n_intervals;
    const int dim = n + 3;
    if (static_cast<int>(delta_n.values.size()) != dim)
        throw std::invalid_argument("step: delta length mismatch");
    const double half_dt = 0.5 * cfg.dt;
    const double nu = cfg.nu;
    const double alpha1 = sys.basis.alpha1;

    // Right side [A - dt/2 (B(delta_n) - nu C)] delta_n over the full rows;
    // fixed for the whole step.
    const BandedMatrix bn = assemble_convection(sys.elem, delta_n);
    BandedMatrix rm(dim);
    for (int i = 0; i < dim; ++i) {
        const int lo = std::max(0, i - BandedMatrix::kSub);
        const int hi = std::min(dim - 1, i + BandedMatrix::kSuper);
        for (int j = lo; j <= hi; ++j)
            rm.set(i, j,
                   sys.A.get(i, j) - half_dt * (bn.get(i, j) - nu * sys.C.get(i, j)));
    }
    const std::vector<double> rhs_full = rm.multiply(delta_n.values);

    CoefficientVector dstar = delta_nm1 ? predict(delta_n, *delta_nm1) : delta_n;
    CoefficientVector result = delta_n;

    for (int pass = 0; pass < cfg.inner_iterations; ++pass) {
        const BandedMatrix bs = assemble_convection(sys.elem, dstar);

        // Reduced system over delta_0..delta_N: reduced row r is full row r+1
        // with the end columns folded through the Dirichlet relations.
        BandedMatrix red(n + 1);
        std::vector<double> rr(n + 1);
        for (int r = 0; r <= n; ++r) {
            const int fr = r + 1;
            rr[r] = rhs_full[fr];
            const int lo = std::max(0, fr - BandedMatrix::kSub);
            const int hi = std::min(dim - 1, fr + BandedMatrix::kSuper);
            for (int fc = lo; fc <= hi; ++fc) {
                const double v =
                    sys.A.get(fr, fc) + half_dt * (bs.get(fr, fc) - nu * sys.C.get(fr, fc));
                if (fc == 0) {
                    // delta_{-1} = beta1/alpha1 - delta_0/alpha1 - delta_1
                    red.add(r, 0, -v / alpha1);
                    red.add(r, 1, -v);
                    rr[r] -= v * beta1 / alpha1;
                } else if (fc == dim - 1) {
                    // delta_{N+1} = beta2/alpha1 - delta_N/alpha1 - delta_{N-1}
                    red.add(r, n, -v / alpha1);
                    red.add(r, n - 1, -v);
                    rr[r] -= v * beta2 / alpha1;
                } else {
                    red.add(r, fc - 1, v);
                }
            }
        }

        const std::vector<double> y = banded_solve(red, rr);

        for (int i = 0; i <= n; ++i) result.values[i + 1] = y[i];
        result.values[0] = beta1 / alpha1 - y[0] / alpha1 - y[1];
        result.values[dim - 1] = beta2 / alpha1 - y[n] / alpha1 - y[n - 1];

        const double m = max_abs(result.values);
        if (!std::isfinite(m) || m > 1e12) throw blow_up_error(step_index, m);

        dstar = result;
    }

    result.time = delta_n.time + cfg.dt;
    return result;
}

std::vector<double> knot_values(const BasisParams& basis,
                                const CoefficientVector& delta) {
    const int n = basis.n_intervals;
    if (static_cast<int>(delta.values.size()) != n + 3)
        throw std::invalid_argument("knot_values: delta length mismatch");
    std::vector<double> u(n + 1);
    for (int j = 0; j <= n; ++j)
        u[j] = basis.alpha1 * delta.values[j] + delta.values[j + 1] +
               basis.alpha1 * delta.values[j + 2];
    return u;
}

namespace {

Snapshot make_snapshot(const ProblemSpec& prob, const BasisParams& basis,
                       const CoefficientVector& delta, double time) {
    Snapshot snap;
    snap.time = time;
    snap.knot_values = knot_values(basis, delta);
    if (prob.has_exact) {
        snap.exact_values.resize(snap.knot_values.size());
        for (int j = 0; j < static_cast<int>(snap.exact_values.size()); ++j)
            snap.exact_values[j] = prob.exact(basis.knot(j), time);
        snap.linf_error = linf_error(snap.knot_values, snap.exact_values);
        snap.has_error = true;
    }
    snap.delta = delta;
    snap.delta.time = time;
    return snap;
}

}  // namespace

std::vector<Snapshot> run(const ProblemSpec& prob, const SolverConfig& cfg) {
    if (cfg.n_intervals < 4)
        throw std::invalid_argument("run: need at least 4 intervals");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("run: dt must be > 0");
    if (!(cfg.nu > 0.0)) throw std::invalid_argument("run: nu must be > 0");
    if (cfg.inner_iterations < 1)
        throw std::invalid_argument("run: inner_iterations must be >= 1");
    if (std::abs(cfg.nu - prob.nu) > 1e-12 * std::max(cfg.nu, prob.nu))
        throw std::invalid_argument("run: config and problem viscosity disagree");

    const double span = cfg.t_end - prob.t_start;
    if (span < -1e-12)
        throw std::invalid_argument("run: t_end precedes the problem start time");
    const long long steps = std::llround(span / cfg.dt);
    if (steps < 0 || std::abs(prob.t_start + steps * cfg.dt - cfg.t_end) > 1e-9)
        throw std::invalid_argument(
            "run: t_end - t_start is not a whole number of steps");

    // Map every requested snapshot onto the step grid; off-grid is an error.
    std::vector<double> wanted = cfg.snapshot_times;
    if (wanted.empty()) wanted.push_back(cfg.t_end);
    std::vector<std::pair<long long, double>> marks;
    for (double t : wanted) {
        const long long k = std::llround((t - prob.t_start) / cfg.dt);
        if (k < 0 || k > steps || std::abs(prob.t_start + k * cfg.dt - t) > 1e-9)
            throw std::invalid_argument("run: snapshot time " + std::to_string(t) +
                                        " is not on the step grid");
        marks.emplace_back(k, t);
    }
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end(),
                            [](const auto& a, const auto& b) {
                                return a.first == b.first;
                            }),
                marks.end());

    const double h = (prob.b - prob.a) / cfg.n_intervals;
    const BasisParams basis = make_basis(cfg.p, h, cfg.n_intervals, prob.a);
    const ElementMatrices elem =
        compute_element_matrices(basis, gauss_legendre(cfg.quadrature_order));
    const AssembledSystem sys = assemble_global(basis, elem, cfg.n_intervals);

    CoefficientVector dn = build_initial_delta(basis, prob.initial, prob.fp_a,
                                               prob.fp_b);
    dn.time = prob.t_start;

    std::vector<Snapshot> out;
    std::size_t next_mark = 0;
    if (next_mark < marks.size() && marks[next_mark].first == 0) {
        out.push_back(make_snapshot(prob, basis, dn, marks[next_mark].second));
        ++next_mark;
    }

    CoefficientVector dnm1;
    for (long long s = 1; s <= steps; ++s) {
        CoefficientVector dnew = step(sys, dn, s == 1 ? nullptr : &dnm1, cfg,
                                      prob.beta1, prob.beta2,
                                      static_cast<std::size_t>(s));
        dnew.time = prob.t_start + s * cfg.dt;
        dnm1 = std::move(dn);
        dn = std::move(dnew);
        if (next_mark < marks.size() && marks[next_mark].first == s) {
            out.push_back(make_snapshot(prob, basis, dn, marks[next_mark].second));
            ++next_mark;
        }
    }
    return out;
}

}  // namespace ebg
