#include "ebg/elements.hpp"

namespace ebg {

namespace {

struct ShapeTable {
    // values[q][j], d1[q][j], d2[q][j] at the mapped quadrature points
    std::vector<std::array<double, 4>> values, d1, d2;
    std::vector<double> jw;  // jacobian-scaled weights h/2 * w_q
};

ShapeTable tabulate(const BasisParams& basis, const QuadratureRule& rule) {
    ShapeTable t;
    const int nq = rule.order;
    t.values.resize(nq);
    t.d1.resize(nq);
    t.d2.resize(nq);
    t.jw.resize(nq);
    const double half_h = 0.5 * basis.h;
    for (int q = 0; q < nq; ++q) {
        const double xi = half_h * (1.0 + rule.nodes[q]);
        for (int j = 0; j < 4; ++j) {
            t.values[q][j] = shape_value(basis, j, xi);
            t.d1[q][j] = shape_d1(basis, j, xi);
            t.d2[q][j] = shape_d2(basis, j, xi);
        }
        t.jw[q] = half_h * rule.weights[q];
    }
    return t;
}

}  // namespace

Mat4 element_mass(const BasisParams& basis, const QuadratureRule& rule) {
    const ShapeTable t = tabulate(basis, rule);
    Mat4 m{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            double sum = 0.0;
            for (std::size_t q = 0; q < t.jw.size(); ++q)
                sum += t.jw[q] * (t.values[q][j] * t.values[q][i]);
            m[j][i] = sum;
        }
    return m;
}

Mat4 element_diffusion(const BasisParams& basis, const QuadratureRule& rule) {
    const ShapeTable t = tabulate(basis, rule);
    Mat4 m{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            double sum = 0.0;
            for (std::size_t q = 0; q < t.jw.size(); ++q)
                sum += t.jw[q] * (t.values[q][j] * t.d2[q][i]);
            m[j][i] = sum;
        }
    return m;
}

Tensor4 element_convection_tensor(const BasisParams& basis,
                                  const QuadratureRule& rule) {
    const ShapeTable t = tabulate(basis, rule);
    Tensor4 b{};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i) {
                double sum = 0.0;
                // values[q][j]*values[q][k] commutes bitwise, so the (j,k)
                // symmetry of the result is exact
                for (std::size_t q = 0; q < t.jw.size(); ++q)
                    sum += t.jw[q] * (t.values[q][j] * t.values[q][k] * t.d1[q][i]);
                b[j][k][i] = sum;
            }
    return b;
}

ElementMatrices compute_element_matrices(const BasisParams& basis,
                                         const QuadratureRule& rule) {
    ElementMatrices e;
    e.Ae = element_mass(basis, rule);
    e.Ce = element_diffusion(basis, rule);
    e.Be = element_convection_tensor(basis, rule);
    return e;
}

Mat4 contract_convection(const Tensor4& Be, const std::array<double, 4>& delta_e) {
    Mat4 m{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            double sum = 0.0;
            for (int k = 0; k < 4; ++k) sum += delta_e[k] * Be[j][k][i];
            m[j][i] = sum;
        }
    return m;
}

}  // namespace ebg
