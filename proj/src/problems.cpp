#include "ebg/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ebg {

namespace {

constexpr double kWaveAlpha = 0.4;
constexpr double kWaveMu = 0.6;
constexpr double kWaveGamma = 0.125;

// 1/(1 + e^g), branch-selected so the exponential argument is never positive.
double inv_one_plus_exp(double g) {
    if (g > 0.0) {
        const double e = std::exp(-g);
        return e / (e + 1.0);
    }
    return 1.0 / (1.0 + std::exp(g));
}

}  // namespace

double shock_exact(double x, double t, double nu) {
    const double g = x * x / (4.0 * nu * t) + 0.5 * std::log(t) - 1.0 / (16.0 * nu);
    return (x / t) * inv_one_plus_exp(g);
}

ProblemSpec shock_problem(double nu) { return shock_problem(nu, 0.0, 1.0); }

ProblemSpec shock_problem(double nu, double a, double b) {
    if (!(nu > 0.0)) throw std::invalid_argument("shock_problem: nu must be > 0");
    if (!(a < b)) throw std::invalid_argument("shock_problem: need a < b");
    ProblemSpec spec;
    spec.name = "shock";
    spec.a = a;
    spec.b = b;
    spec.nu = nu;
    spec.beta1 = 0.0;
    spec.beta2 = 0.0;
    spec.t_start = 1.0;
    spec.initial = [nu](double x) { return shock_exact(x, 1.0, nu); };
    spec.fp_a = 0.0;
    spec.fp_b = 0.0;
    spec.exact = [nu](double x, double t) { return shock_exact(x, t, nu); };
    spec.has_exact = true;
    return spec;
}

double travelling_exact(double x, double t, double alpha, double mu,
                        double gamma, double nu) {
    const double eta = alpha * (x - mu * t - gamma) / nu;
    if (eta > 0.0) {
        const double e = std::exp(-eta);
        return ((alpha + mu) * e + (mu - alpha)) / (e + 1.0);
    }
    const double e = std::exp(eta);
    return ((alpha + mu) + (mu - alpha) * e) / (1.0 + e);
}

double travelling_exact_dx(double x, double t, double alpha, double mu,
                           double gamma, double nu) {
    const double eta = alpha * (x - mu * t - gamma) / nu;
    // u_x = -(2 alpha^2 / nu) * e^{-|eta|} / (1 + e^{-|eta|})^2
    const double e = std::exp(-std::abs(eta));
    const double onep = 1.0 + e;
    return -(2.0 * alpha * alpha / nu) * e / (onep * onep);
}

ProblemSpec travelling_problem() { return travelling_problem(0.01); }

ProblemSpec travelling_problem(double nu) {
    if (!(nu > 0.0))
        throw std::invalid_argument("travelling_problem: nu must be > 0");
    ProblemSpec spec;
    spec.name = "wave";
    spec.a = 0.0;
    spec.b = 1.0;
    spec.nu = nu;
    spec.beta1 = 1.0;
    spec.beta2 = 0.2;
    spec.t_start = 0.0;
    spec.initial = [nu](double x) {
        return travelling_exact(x, 0.0, kWaveAlpha, kWaveMu, kWaveGamma, nu);
    };
    spec.fp_a = travelling_exact_dx(0.0, 0.0, kWaveAlpha, kWaveMu, kWaveGamma, nu);
    spec.fp_b = travelling_exact_dx(1.0, 0.0, kWaveAlpha, kWaveMu, kWaveGamma, nu);
    spec.exact = [nu](double x, double t) {
        return travelling_exact(x, t, kWaveAlpha, kWaveMu, kWaveGamma, nu);
    };
    spec.has_exact = true;
    return spec;
}

double linf_error(const std::vector<double>& numeric,
                  const std::vector<double>& exact) {
    if (numeric.size() != exact.size())
        throw std::invalid_argument("linf_error: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i)
        m = std::max(m, std::abs(numeric[i] - exact[i]));
    return m;
}

}  // namespace ebg
