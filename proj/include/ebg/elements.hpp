#pragma once

#include <array>

#include "ebg/basis.hpp"
#include "ebg/quadrature.hpp"

namespace ebg {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Tensor4 = std::array<std::array<std::array<double, 4>, 4>, 4>;

// Per-element Galerkin blocks over one grid cell [x_m, x_m + h], local shape
// indices j = 0..3 mapping to splines m-1..m+2. The grid is uniform, so one
// set of blocks serves every element and every time step.
//   Ae[j][i]    = integral phi_j phi_i
//   Ce[j][i]    = integral phi_j phi_i''   (no integration by parts)
//   Be[j][k][i] = integral phi_j phi_k phi_i'
struct ElementMatrices {
    Mat4 Ae;
    Mat4 Ce;
    Tensor4 Be;
};

Mat4 element_mass(const BasisParams& basis, const QuadratureRule& rule);
Mat4 element_diffusion(const BasisParams& basis, const QuadratureRule& rule);
Tensor4 element_convection_tensor(const BasisParams& basis,
                                  const QuadratureRule& rule);

ElementMatrices compute_element_matrices(const BasisParams& basis,
                                         const QuadratureRule& rule);

// Contracts the convection tensor with the local coefficient 4-vector:
// result[j][i] = sum_k delta_e[k] * Be[j][k][i].
Mat4 contract_convection(const Tensor4& Be, const std::array<double, 4>& delta_e);

}  // namespace ebg
