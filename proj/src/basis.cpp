#include "ebg/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ebg/errors.hpp"

namespace ebg {

namespace kernels {

double sinhm(double z) {
    if (std::abs(z) < 0.5) {
        // sum z^(2k+1)/(2k+1)! from k=1; converges to full precision in a
        // handful of terms for |z| < 0.5
        const double z2 = z * z;
        double term = z * z2 / 6.0;
        double sum = term;
        for (int k = 2; k <= 12; ++k) {
            term *= z2 / ((2.0 * k) * (2.0 * k + 1.0));
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return std::sinh(z) - z;
}

double coshm1(double z) {
    const double sh = std::sinh(0.5 * z);
    return 2.0 * sh * sh;
}

double xcosh_minus_sinh(double t) {
    if (std::abs(t) < 0.5) {
        // sum 2k*t^(2k+1)/(2k+1)! from k=1; term ratio t^2/(2k(2k+3))
        const double t2 = t * t;
        double term = t * t2 / 3.0;
        double sum = term;
        for (int k = 1; k <= 12; ++k) {
            term *= t2 / ((2.0 * k) * (2.0 * k + 3.0));
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return t * std::cosh(t) - std::sinh(t);
}

}  // namespace kernels

BasisParams make_basis(double p, double h, int n_intervals, double a) {
    if (!(p > 0.0)) throw std::invalid_argument("basis: tension p must be > 0");
    if (!(h > 0.0)) throw std::invalid_argument("basis: spacing h must be > 0");
    if (n_intervals < 4)
        throw std::invalid_argument("basis: need at least 4 intervals");

    const double theta = p * h;
    // cosh overflows just above 710; stay clear of the edge
    if (!(theta < 700.0)) throw tension_overflow_error(theta);

    BasisParams b;
    b.p = p;
    b.h = h;
    b.n_intervals = n_intervals;
    b.a = a;
    b.theta = theta;
    b.s = std::sinh(theta);
    b.c = std::cosh(theta);
    b.sinhm_theta = kernels::sinhm(theta);
    b.coshm1_theta = kernels::coshm1(theta);
    b.two_d = 2.0 * kernels::xcosh_minus_sinh(theta);

    const double d = 0.5 * b.two_d;  // theta*cosh(theta) - sinh(theta)
    b.a1 = theta * b.c / d;
    b.b1 = -p * (2.0 * b.c + 1.0) / b.two_d;
    b.b2 = p / b.two_d;
    b.c1 = (2.0 * std::exp(-theta) + 1.0) / (2.0 * b.two_d);
    b.d1 = -(2.0 * std::exp(theta) + 1.0) / (2.0 * b.two_d);

    b.alpha1 = b.sinhm_theta / b.two_d;
    b.alpha2 = -p * b.coshm1_theta / b.two_d;
    b.alpha3 = p * p * b.s / b.two_d;
    return b;
}

namespace {

// Tail piece as a function of z = p * (distance to the far support knot),
// z in [0, theta]. Value and curvature are orientation-independent; the
// slope magnitude gets its sign from the caller.
double outer_value(const BasisParams& b, double z) {
    return kernels::sinhm(z) / b.two_d;
}

double outer_d1_mag(const BasisParams& b, double z) {
    return b.p * kernels::coshm1(z) / b.two_d;
}

double outer_d2(const BasisParams& b, double z) {
    return b.p * b.p * std::sinh(z) / b.two_d;
}

// Center piece as a function of w = p * |x - x_i|, w in [0, theta].
// inner_value(0) = 1 and inner_value(theta) = alpha1 exactly by construction.
double inner_value(const BasisParams& b, double w) {
    return (2.0 * b.coshm1_theta * (b.theta - w) +
            2.0 * kernels::sinhm(w - b.theta) + kernels::sinhm(w)) /
           b.two_d;
}

// Slope of the right half [x_i, x_{i+1}]; the left half is its mirror.
// Zero at w = 0, alpha2 at w = theta.
double inner_d1(const BasisParams& b, double w) {
    const double cross =
        -4.0 * std::sinh(0.5 * w) * std::sinh(0.5 * (2.0 * b.theta - w));
    return b.p * (cross + kernels::coshm1(w)) / b.two_d;
}

double inner_d2(const BasisParams& b, double w) {
    return b.p * b.p * (2.0 * std::sinh(w - b.theta) + std::sinh(w)) / b.two_d;
}

}  // namespace

double eval_phi(const BasisParams& b, int i, double x) {
    const double xm2 = b.knot(i - 2), xm1 = b.knot(i - 1), xc = b.knot(i);
    const double xp1 = b.knot(i + 1), xp2 = b.knot(i + 2);
    if (x <= xm2 || x >= xp2) return 0.0;
    if (x <= xm1) return outer_value(b, b.p * (x - xm2));
    if (x <= xc) return inner_value(b, b.p * (xc - x));
    if (x < xp1) return inner_value(b, b.p * (x - xc));
    return outer_value(b, b.p * (xp2 - x));
}

double eval_phi_d1(const BasisParams& b, int i, double x) {
    const double xm2 = b.knot(i - 2), xm1 = b.knot(i - 1), xc = b.knot(i);
    const double xp1 = b.knot(i + 1), xp2 = b.knot(i + 2);
    if (x <= xm2 || x >= xp2) return 0.0;
    if (x <= xm1) return outer_d1_mag(b, b.p * (x - xm2));
    if (x <= xc) return -inner_d1(b, b.p * (xc - x));
    if (x < xp1) return inner_d1(b, b.p * (x - xc));
    return -outer_d1_mag(b, b.p * (xp2 - x));
}

double eval_phi_d2(const BasisParams& b, int i, double x) {
    const double xm2 = b.knot(i - 2), xm1 = b.knot(i - 1), xc = b.knot(i);
    const double xp1 = b.knot(i + 1), xp2 = b.knot(i + 2);
    if (x <= xm2 || x >= xp2) return 0.0;
    if (x <= xm1) return outer_d2(b, b.p * (x - xm2));
    if (x <= xc) return inner_d2(b, b.p * (xc - x));
    if (x < xp1) return inner_d2(b, b.p * (x - xc));
    return outer_d2(b, b.p * (xp2 - x));
}

double shape_value(const BasisParams& b, int j, double xi) {
    const double w = b.p * xi;
    switch (j) {
        case 0: return outer_value(b, b.theta - w);
        case 1: return inner_value(b, w);
        case 2: return inner_value(b, b.theta - w);
        case 3: return outer_value(b, w);
        default: throw std::invalid_argument("shape index must be 0..3");
    }
}

double shape_d1(const BasisParams& b, int j, double xi) {
    const double w = b.p * xi;
    switch (j) {
        case 0: return -outer_d1_mag(b, b.theta - w);
        case 1: return inner_d1(b, w);
        case 2: return -inner_d1(b, b.theta - w);
        case 3: return outer_d1_mag(b, w);
        default: throw std::invalid_argument("shape index must be 0..3");
    }
}

double shape_d2(const BasisParams& b, int j, double xi) {
    const double w = b.p * xi;
    switch (j) {
        case 0: return outer_d2(b, b.theta - w);
        case 1: return inner_d2(b, w);
        case 2: return inner_d2(b, b.theta - w);
        case 3: return outer_d2(b, w);
        default: throw std::invalid_argument("shape index must be 0..3");
    }
}

double eval_solution(const BasisParams& b, const std::vector<double>& delta,
                     double x) {
    const int n = b.n_intervals;
    if (static_cast<int>(delta.size()) != n + 3)
        throw std::invalid_argument("eval_solution: delta must have N+3 entries");
    if (x < b.a || x > b.b())
        throw std::domain_error("eval_solution: x = " + std::to_string(x) +
                                " outside [" + std::to_string(b.a) + ", " +
                                std::to_string(b.b()) + "]");

    int m = static_cast<int>(std::floor((x - b.a) / b.h));
    m = std::clamp(m, 0, n - 1);
    const double xi = x - b.knot(m);

    double u = 0.0;
    for (int j = 0; j < 4; ++j) u += delta[m + j] * shape_value(b, j, xi);
    return u;
}

}  // namespace ebg
