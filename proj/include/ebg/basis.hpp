#pragma once

#include <vector>

namespace ebg {

// Exponential B-spline basis on a uniform grid of N subintervals of [a, a+N*h].
// Splines are indexed i = -1..N+1; spline i is supported on [x_{i-2}, x_{i+2}]
// and is normalized to phi_i(x_i) = 1. Each piece lies in the span
// {1, x, e^{px}, e^{-px}}; the whole spline is C^2. As p -> 0 the basis tends
// to the classical cubic B-spline scaled to unit center value.
struct BasisParams {
    double p;          // tension, > 0
    double h;          // knot spacing, > 0
    int n_intervals;   // N >= 4
    double a;          // left endpoint

    double s, c;       // sinh(p*h), cosh(p*h)

    // Piece coefficients of the classical closed form. Used for reporting and
    // cross-checks; evaluation goes through cancellation-free kernels instead.
    double a1, b1, b2, c1, d1;

    // Knot values: phi(x_{i +- 1}) = alpha1, phi'(x_{i +- 1}) = -+ alpha2 with
    // alpha2 < 0, phi''(x_i) = -2*alpha3, phi''(x_{i +- 1}) = alpha3.
    double alpha1, alpha2, alpha3;

    // Precomputed stable quantities shared by all evaluators.
    double theta;         // p*h
    double two_d;         // 2*(theta*cosh(theta) - sinh(theta)), > 0
    double sinhm_theta;   // sinh(theta) - theta
    double coshm1_theta;  // cosh(theta) - 1

    double b() const { return a + n_intervals * h; }
    double knot(int i) const { return a + i * h; }
};

// Validates arguments and computes every derived field.
// Throws std::invalid_argument for p <= 0, h <= 0 or N < 4 and
// tension_overflow_error when p*h exceeds the sinh/cosh range.
BasisParams make_basis(double p, double h, int n_intervals, double a);

// Spline i and its first two derivatives at an arbitrary point. Exactly zero
// at and outside the support boundary |x - x_i| >= 2h.
double eval_phi(const BasisParams& basis, int i, double x);
double eval_phi_d1(const BasisParams& basis, int i, double x);
double eval_phi_d2(const BasisParams& basis, int i, double x);

// The four splines overlapping one element, as functions of the local
// coordinate xi = x - x_m in [0, h]: j = 0..3 maps to splines m-1..m+2.
double shape_value(const BasisParams& basis, int j, double xi);
double shape_d1(const BasisParams& basis, int j, double xi);
double shape_d2(const BasisParams& basis, int j, double xi);

// Evaluates U(x) = sum_i delta_i phi_i(x) for a coefficient vector of length
// N+3 (entry k holds delta_{k-1}). The element containing x is
// m = floor((x-a)/h) clamped to [0, N-1] so x = b falls in the last element.
// Throws std::domain_error for x outside [a, b].
double eval_solution(const BasisParams& basis, const std::vector<double>& delta,
                     double x);

namespace kernels {

// sinh(z) - z evaluated without subtractive cancellation (series for small z).
double sinhm(double z);

// cosh(z) - 1 as 2*sinh^2(z/2); exact to full precision for all z.
double coshm1(double z);

// t*cosh(t) - sinh(t); positive for t > 0, leading term t^3/3.
double xcosh_minus_sinh(double t);

}  // namespace kernels

}  // namespace ebg
