#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ebg {

// One Burgers' test problem: u_t + u u_x = nu u_xx on [a, b] with Dirichlet
// values beta1, beta2 and initial data at t_start. The derivative ends feed
// only the initial spline fit, never the time loop.
struct ProblemSpec {
    std::string name;  // "shock" or "wave"
    double a, b;
    double nu;
    double beta1, beta2;
    double t_start;
    std::function<double(double)> initial;
    double fp_a, fp_b;  // f'(a), f'(b) of the initial data
    std::function<double(double, double)> exact;  // null when unknown
    bool has_exact = false;
};

// Propagating shock: u = (x/t) / (1 + sqrt(t/t0) exp(x^2/(4 nu t))) with
// t0 = exp(1/(8 nu)). The growth factor is evaluated as
// exp(x^2/(4 nu t) + ln(t)/2 - 1/(16 nu)) so small nu cannot overflow t0.
double shock_exact(double x, double t, double nu);

// Shock problem on [0, 1] (or an explicit domain): t_start = 1, u = 0 at both
// ends, zero end slopes in the initial fit.
ProblemSpec shock_problem(double nu);
ProblemSpec shock_problem(double nu, double a, double b);

// Travelling wavefront: u = (alpha + mu + (mu - alpha) e^eta)/(1 + e^eta),
// eta = alpha (x - mu t - gamma)/nu, evaluated through e^{-eta} when eta > 0
// so large arguments cannot overflow.
double travelling_exact(double x, double t, double alpha, double mu,
                        double gamma, double nu);

// d/dx of the wavefront; bounded and overflow-safe for all eta.
double travelling_exact_dx(double x, double t, double alpha, double mu,
                           double gamma, double nu);

// Wave problem on [0, 1] with alpha = 0.4, mu = 0.6, gamma = 0.125:
// t_start = 0, beta1 = 1, beta2 = 0.2, end slopes from the analytic
// derivative. Default viscosity 0.01.
ProblemSpec travelling_problem();
ProblemSpec travelling_problem(double nu);

// max_j |numeric_j - exact_j|; throws std::invalid_argument on length mismatch.
double linf_error(const std::vector<double>& numeric,
                  const std::vector<double>& exact);

}  // namespace ebg
