#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ebg/basis.hpp"
#include "ebg/elements.hpp"
#include "ebg/linalg.hpp"
#include "ebg/problems.hpp"

namespace ebg {

// Spline coefficients delta_i for i = -1..N+1; entry k holds delta_{k-1}.
struct CoefficientVector {
    std::vector<double> values;
    double time = 0.0;
};

struct SolverConfig {
    int n_intervals = 0;
    double dt = 0.0;
    double t_end = 0.0;
    double p = 0.0;
    double nu = 0.0;
    int inner_iterations = 3;
    int quadrature_order = 8;
    std::vector<double> snapshot_times;  // defaults to {t_end} when empty
};

struct Snapshot {
    double time = 0.0;
    std::vector<double> knot_values;   // U(x_j) for j = 0..N
    std::vector<double> exact_values;  // empty when the problem has no exact
    double linf_error = 0.0;
    bool has_error = false;
    CoefficientVector delta;           // full spline state, for plotting
};

// Global mass and diffusion matrices (dim N+3, bandwidth 3) plus everything
// needed to rebuild the convection matrix each step. A and C never change
// over a run.
struct AssembledSystem {
    BasisParams basis;
    ElementMatrices elem;
    BandedMatrix A;
    BandedMatrix C;
    int n_intervals;
};

AssembledSystem assemble_global(const BasisParams& basis,
                                const ElementMatrices& elem, int n_intervals);

// Septa-diagonal B(delta): per element, the convection tensor contracted with
// the local coefficient 4-vector, assembled like A and C. Linear in delta.
BandedMatrix assemble_convection(const ElementMatrices& elem,
                                 const CoefficientVector& delta);

// Fits the initial data: N+1 knot-interpolation rows closed by the two
// end-slope relations delta_{-1} = delta_1 + fp_a/alpha2 and
// delta_{N+1} = delta_{N-1} - fp_b/alpha2, solved with thomas_solve.
// The result reproduces f at every knot.
CoefficientVector build_initial_delta(const BasisParams& basis,
                                      const std::function<double(double)>& f,
                                      double fp_a, double fp_b);

// Extrapolated predictor delta* = delta_n + (delta_n - delta_nm1)/2.
CoefficientVector predict(const CoefficientVector& delta_n,
                          const CoefficientVector& delta_nm1);

// One Crank-Nicolson step:
//   [A + dt/2 (B(delta*) - nu C)] delta_new = [A - dt/2 (B(delta_n) - nu C)] delta_n
// Repeats inner_iterations solve passes, refreshing B(delta*) from the latest
// iterate. Each pass eliminates delta_{-1} and delta_{N+1} through the
// Dirichlet relations (alpha1 delta_{-1} + delta_0 + alpha1 delta_1 = beta1
// and its right-end twin), drops the first and last equations, solves the
// reduced (N+1) septa-diagonal system, and reconstructs the end coefficients.
// Pass delta_nm1 = nullptr on the first step (delta* starts at delta_n).
// Throws blow_up_error when the iterate stops being finite.
CoefficientVector step(const AssembledSystem& system,
                       const CoefficientVector& delta_n,
                       const CoefficientVector* delta_nm1,
                       const SolverConfig& config, double beta1, double beta2,
                       std::size_t step_index = 0);

// U(x_j) = alpha1 delta_{j-1} + delta_j + alpha1 delta_{j+1} for j = 0..N.
std::vector<double> knot_values(const BasisParams& basis,
                                const CoefficientVector& delta);

// Full solve: build basis/elements/system and the initial fit, then advance
// to t_end recording a Snapshot at every requested time. Snapshot times and
// t_end must sit on the step grid within 1e-9. Viscosities in the problem
// and the config must agree.
std::vector<Snapshot> run(const ProblemSpec& problem, const SolverConfig& config);

}  // namespace ebg
