#pragma once

#include <vector>

namespace ebg {

// Gauss-Legendre rule on [-1, 1]: nodes symmetric about 0, weights positive,
// sum of weights 2, exact for polynomials of degree <= 2*order - 1.
struct QuadratureRule {
    int order;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Computes the rule by Newton iteration on the Legendre polynomial (tolerance
// 1e-15). Throws std::invalid_argument unless 1 <= order <= 32.
QuadratureRule gauss_legendre(int order);

}  // namespace ebg
