#include "ebg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ebg/errors.hpp"

namespace ebg {

std::vector<double> thomas_solve(const TridiagonalMatrix& m,
                                 const std::vector<double>& rhs) {
    const int n = m.dim;
    if (n < 1) throw std::invalid_argument("thomas_solve: dim must be >= 1");
    if (static_cast<int>(m.lower.size()) != n ||
        static_cast<int>(m.diag.size()) != n ||
        static_cast<int>(m.upper.size()) != n ||
        static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("thomas_solve: inconsistent lengths");

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        scale = std::max({scale, std::abs(m.lower[i]), std::abs(m.diag[i]),
                          std::abs(m.upper[i])});
    const double tol = 1e-14 * scale;

    std::vector<double> cp(n, 0.0), dp(n, 0.0);
    double piv = m.diag[0];
    if (!(std::abs(piv) > tol)) throw singular_matrix_error(0, piv);
    cp[0] = m.upper[0] / piv;
    dp[0] = rhs[0] / piv;
    for (int i = 1; i < n; ++i) {
        piv = m.diag[i] - m.lower[i] * cp[i - 1];
        if (!(std::abs(piv) > tol))
            throw singular_matrix_error(static_cast<std::size_t>(i), piv);
        cp[i] = m.upper[i] / piv;
        dp[i] = (rhs[i] - m.lower[i] * dp[i - 1]) / piv;
    }

    std::vector<double> x(n);
    x[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
}

namespace {
constexpr int kLdab = BandedMatrix::kSub + BandedMatrix::kSuper + 1 +
                      BandedMatrix::kSub;  // band plus pivoting fill-in
}

BandedMatrix::BandedMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("BandedMatrix: dim must be >= 1");
    store_.assign(static_cast<std::size_t>(dim) * kLdab, 0.0);
}

bool BandedMatrix::in_store(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) return false;
    const int off = i - j;
    return off <= kSub && off >= -(kSuper + kSub);
}

double& BandedMatrix::at(int i, int j) {
    return store_[static_cast<std::size_t>(j) * kLdab + (kSub + kSuper + i - j)];
}

double BandedMatrix::at(int i, int j) const {
    return store_[static_cast<std::size_t>(j) * kLdab + (kSub + kSuper + i - j)];
}

double BandedMatrix::get(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("BandedMatrix::get: index out of range");
    if (std::abs(i - j) > kSub) return 0.0;
    return at(i, j);
}

void BandedMatrix::set(int i, int j, double value) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || std::abs(i - j) > kSub)
        throw std::out_of_range("BandedMatrix::set: entry outside the band");
    at(i, j) = value;
}

void BandedMatrix::add(int i, int j, double value) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || std::abs(i - j) > kSub)
        throw std::out_of_range("BandedMatrix::add: entry outside the band");
    at(i, j) += value;
}

std::vector<double> BandedMatrix::multiply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("BandedMatrix::multiply: length mismatch");
    std::vector<double> y(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
        const int lo = std::max(0, i - kSub);
        const int hi = std::min(dim_ - 1, i + kSuper);
        double sum = 0.0;
        for (int j = lo; j <= hi; ++j) sum += at(i, j) * x[j];
        y[i] = sum;
    }
    return y;
}

std::vector<double> banded_solve(const BandedMatrix& m,
                                 const std::vector<double>& rhs) {
    const int n = m.dim();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("banded_solve: length mismatch");

    BandedMatrix a = m;  // factorization happens on a scratch copy
    std::vector<double> b = rhs;

    double scale = 0.0;
    for (double v : a.store_) scale = std::max(scale, std::abs(v));
    const double tol = 1e-14 * scale;

    constexpr int kSub = BandedMatrix::kSub;
    constexpr int kWide = BandedMatrix::kSuper + BandedMatrix::kSub;

    for (int k = 0; k < n; ++k) {
        const int ilast = std::min(k + kSub, n - 1);
        int piv = k;
        double pmax = std::abs(a.at(k, k));
        for (int i = k + 1; i <= ilast; ++i) {
            const double v = std::abs(a.at(i, k));
            if (v > pmax) {
                pmax = v;
                piv = i;
            }
        }
        if (!(pmax > tol))
            throw singular_matrix_error(static_cast<std::size_t>(k), a.at(piv, k));

        const int jlast = std::min(k + kWide, n - 1);
        if (piv != k) {
            for (int j = k; j <= jlast; ++j) std::swap(a.at(k, j), a.at(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i <= ilast; ++i) {
            const double mult = a.at(i, k) / a.at(k, k);
            if (mult == 0.0) continue;
            for (int j = k + 1; j <= jlast; ++j) a.at(i, j) -= mult * a.at(k, j);
            b[i] -= mult * b[k];
        }
    }

    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        const int jlast = std::min(i + kWide, n - 1);
        double sum = b[i];
        for (int j = i + 1; j <= jlast; ++j) sum -= a.at(i, j) * x[j];
        x[i] = sum / a.at(i, i);
    }
    return x;
}

}  // namespace ebg
