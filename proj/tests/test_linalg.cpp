#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ebg/errors.hpp"
#include "ebg/linalg.hpp"
#include "support/oracles.hpp"

using ebg::BandedMatrix;
using ebg::banded_solve;
using ebg::thomas_solve;
using ebg::TridiagonalMatrix;

namespace {

double residual_inf(const BandedMatrix& m, const std::vector<double>& x,
                    const std::vector<double>& rhs) {
    const auto ax = m.multiply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i)
        r = std::max(r, std::abs(ax[i] - rhs[i]));
    return r;
}

double max_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("thomas_solve on the identity returns the rhs") {
    TridiagonalMatrix m{4, {0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 0, 0}};
    const std::vector<double> rhs{3.5, -1.25, 0.0, 7.0};
    const auto x = thomas_solve(m, rhs);
    for (int i = 0; i < 4; ++i) CHECK(x[i] == rhs[i]);
}

TEST_CASE("thomas_solve recovers a known solution") {
    // rhs built from x = (1, 2, 3) by hand
    TridiagonalMatrix m{3, {0, 1, 2}, {4, 5, 6}, {1, 1, 0}};
    const std::vector<double> rhs{4.0 * 1 + 1.0 * 2, 1.0 * 1 + 5.0 * 2 + 1.0 * 3,
                                  2.0 * 2 + 6.0 * 3};
    const auto x = thomas_solve(m, rhs);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("thomas_solve matches the dense oracle at dim 50") {
    const int n = 50;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TridiagonalMatrix m{n, std::vector<double>(n), std::vector<double>(n),
                        std::vector<double>(n)};
    std::vector<double> rhs(n);
    auto dense = oracle::dense_zeros(n);
    for (int i = 0; i < n; ++i) {
        m.lower[i] = (i > 0) ? u(rng) : 0.0;
        m.upper[i] = (i < n - 1) ? u(rng) : 0.0;
        m.diag[i] = 4.0 + u(rng);  // diagonally dominant, no pivoting needed
        rhs[i] = u(rng);
        if (i > 0) dense[i][i - 1] = m.lower[i];
        if (i < n - 1) dense[i][i + 1] = m.upper[i];
        dense[i][i] = m.diag[i];
    }
    const auto x = thomas_solve(m, rhs);
    const auto want = oracle::dense_solve(dense, rhs);
    for (int i = 0; i < n; ++i) CHECK(std::abs(x[i] - want[i]) < 1e-10);
}

TEST_CASE("thomas_solve reports the singular pivot") {
    // elimination zeroes the second pivot: 1 - 1*1/1 = 0
    TridiagonalMatrix m{3, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}};
    try {
        thomas_solve(m, {1.0, 1.0, 1.0});
        FAIL("expected singular_matrix_error");
    } catch (const ebg::singular_matrix_error& e) {
        CHECK(e.pivot_index() == 1);
    }
    TridiagonalMatrix z{2, {0, 0}, {0, 1}, {0, 0}};
    CHECK_THROWS_AS(thomas_solve(z, {1.0, 1.0}), ebg::singular_matrix_error);
}

TEST_CASE("thomas_solve validates shapes") {
    TridiagonalMatrix m{3, {0, 1}, {4, 5, 6}, {1, 1, 0}};
    CHECK_THROWS_AS(thomas_solve(m, {1, 2, 3}), std::invalid_argument);
    TridiagonalMatrix ok{3, {0, 1, 2}, {4, 5, 6}, {1, 1, 0}};
    CHECK_THROWS_AS(thomas_solve(ok, {1, 2}), std::invalid_argument);
}

TEST_CASE("BandedMatrix storage semantics") {
    BandedMatrix m(9);
    CHECK(m.dim() == 9);
    m.set(2, 5, 1.5);  // super-diagonal 3, the band edge
    CHECK(m.get(2, 5) == 1.5);
    m.add(2, 5, 0.25);
    CHECK(m.get(2, 5) == 1.75);
    m.set(5, 2, -2.0);
    CHECK(m.get(5, 2) == -2.0);

    // outside the band: reads are zero, writes reject
    CHECK(m.get(0, 4) == 0.0);
    CHECK(m.get(8, 0) == 0.0);
    CHECK_THROWS_AS(m.set(0, 4, 1.0), std::out_of_range);
    CHECK_THROWS_AS(m.add(4, 0, 1.0), std::out_of_range);
    CHECK_THROWS_AS(m.get(0, 9), std::out_of_range);
    CHECK_THROWS_AS(m.get(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(BandedMatrix(0), std::invalid_argument);
}

TEST_CASE("banded multiply matches a dense product") {
    const int n = 12;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BandedMatrix m(n);
    auto dense = oracle::dense_zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 3); j <= std::min(n - 1, i + 3); ++j) {
            const double v = u(rng);
            m.set(i, j, v);
            dense[i][j] = v;
        }
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    const auto got = m.multiply(x);
    for (int i = 0; i < n; ++i) {
        double want = 0.0;
        for (int j = 0; j < n; ++j) want += dense[i][j] * x[j];
        CHECK(std::abs(got[i] - want) < 1e-14);
    }
    CHECK_THROWS_AS(m.multiply(std::vector<double>(n - 1)),
                    std::invalid_argument);
}

TEST_CASE("banded_solve agrees with thomas_solve on a tridiagonal system") {
    const int n = 50;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TridiagonalMatrix t{n, std::vector<double>(n), std::vector<double>(n),
                        std::vector<double>(n)};
    BandedMatrix b(n);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
        t.lower[i] = (i > 0) ? u(rng) : 0.0;
        t.upper[i] = (i < n - 1) ? u(rng) : 0.0;
        t.diag[i] = 4.0 + u(rng);
        rhs[i] = u(rng);
        if (i > 0) b.set(i, i - 1, t.lower[i]);
        if (i < n - 1) b.set(i, i + 1, t.upper[i]);
        b.set(i, i, t.diag[i]);
    }
    const auto xt = thomas_solve(t, rhs);
    const auto xb = banded_solve(b, rhs);
    for (int i = 0; i < n; ++i) CHECK(std::abs(xt[i] - xb[i]) < 1e-12);
}

TEST_CASE("banded_solve matches the dense oracle at dim 60") {
    const int n = 60;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BandedMatrix m(n);
    auto dense = oracle::dense_zeros(n);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - 3); j <= std::min(n - 1, i + 3); ++j) {
            const double v = u(rng);
            m.set(i, j, v);
            dense[i][j] = v;
        }
        rhs[i] = u(rng);
    }
    const auto got = banded_solve(m, rhs);
    const auto want = oracle::dense_solve(dense, rhs);
    for (int i = 0; i < n; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
}

TEST_CASE("pivoting handles a tiny leading pivot") {
    BandedMatrix m(5);
    m.set(0, 0, 1e-18);
    m.set(0, 1, 1.0);
    m.set(1, 0, 1.0);
    m.set(1, 1, 1.0);
    for (int i = 2; i < 5; ++i) m.set(i, i, 1.0);
    auto dense = oracle::dense_zeros(5);
    dense[0][0] = 1e-18;
    dense[0][1] = 1.0;
    dense[1][0] = 1.0;
    dense[1][1] = 1.0;
    for (int i = 2; i < 5; ++i) dense[i][i] = 1.0;
    const std::vector<double> rhs{1.0, 2.0, 3.0, 4.0, 5.0};
    const auto got = banded_solve(m, rhs);
    const auto want = oracle::dense_solve(dense, rhs);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("banded_solve flags singular matrices") {
    BandedMatrix z(6);
    CHECK_THROWS_AS(banded_solve(z, std::vector<double>(6, 1.0)),
                    ebg::singular_matrix_error);

    // regular leading block, rank-deficient tail: columns 4 and 5 are equal
    BandedMatrix m(6);
    for (int i = 0; i < 4; ++i) m.set(i, i, 1.0);
    m.set(4, 4, 1.0);
    m.set(4, 5, 1.0);
    m.set(5, 4, 1.0);
    m.set(5, 5, 1.0);
    try {
        banded_solve(m, std::vector<double>(6, 1.0));
        FAIL("expected singular_matrix_error");
    } catch (const ebg::singular_matrix_error& e) {
        CHECK(e.pivot_index() == 5);
    }
    CHECK_THROWS_AS(banded_solve(m, std::vector<double>(5, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("randomized residuals stay at machine level") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> dims(4, 40);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = dims(rng);
        BandedMatrix m(n);
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i) {
            double row_sum = 0.0;
            for (int j = std::max(0, i - 3); j <= std::min(n - 1, i + 3); ++j) {
                if (j == i) continue;
                const double v = u(rng);
                m.set(i, j, v);
                row_sum += std::abs(v);
            }
            // keep conditioning bounded so the residual bound is meaningful
            m.set(i, i, row_sum + 0.5 + std::abs(u(rng)));
            rhs[i] = u(rng);
        }
        const auto x = banded_solve(m, rhs);
        CAPTURE(trial);
        CHECK(residual_inf(m, x, rhs) <= 1e-10 * std::max(1.0, max_norm(rhs)));
    }
}
