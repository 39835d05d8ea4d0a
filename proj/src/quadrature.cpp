#include "ebg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ebg {

namespace {

// Legendre P_n and P_n' at x via the three-term recurrence.
void legendre(int n, double x, double& pn, double& dpn) {
    double p0 = 1.0, p1 = x;
    if (n == 0) {
        pn = p0;
        dpn = 0.0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1 || order > 32)
        throw std::invalid_argument("gauss_legendre: order must be in [1, 32]");

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    // Solve for the roots in the negative half and mirror them; an odd order
    // keeps the exact 0 at the center. This makes the symmetry bit-exact.
    const int half = order / 2;
    for (int i = 0; i < half; ++i) {
        double x = -std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pn = 0.0, dpn = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre(order, x, pn, dpn);
            const double dx = pn / dpn;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre(order, x, pn, dpn);
        const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
        rule.nodes[i] = x;
        rule.weights[i] = w;
        rule.nodes[order - 1 - i] = -x;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) {
        double pn = 0.0, dpn = 0.0;
        legendre(order, 0.0, pn, dpn);
        rule.nodes[half] = 0.0;
        rule.weights[half] = 2.0 / (dpn * dpn);
    }
    return rule;
}

}  // namespace ebg
