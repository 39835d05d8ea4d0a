#pragma once

#include <vector>

namespace ebg {

// Tridiagonal system for the initial-condition fit. lower[0] and
// upper[dim-1] are ignored.
struct TridiagonalMatrix {
    int dim;
    std::vector<double> lower, diag, upper;
};

// Forward-sweep / back-substitution solve. Throws singular_matrix_error when
// a pivot falls below 1e-14 times the matrix scale.
std::vector<double> thomas_solve(const TridiagonalMatrix& m,
                                 const std::vector<double>& rhs);

// Fixed-bandwidth matrix with 3 sub- and 3 super-diagonals, plus 3 extra
// super-diagonals of workspace so partial pivoting can fill in. Entries
// outside the band are identically zero.
class BandedMatrix {
public:
    static constexpr int kSub = 3;
    static constexpr int kSuper = 3;

    explicit BandedMatrix(int dim);

    int dim() const { return dim_; }

    // Band accessors; out-of-band (i, j) reads as 0, writes are rejected.
    double get(int i, int j) const;
    void set(int i, int j, double value);
    void add(int i, int j, double value);

    std::vector<double> multiply(const std::vector<double>& x) const;

private:
    friend std::vector<double> banded_solve(const BandedMatrix& m,
                                            const std::vector<double>& rhs);

    // Column-major band storage: entry (i, j) lives at row offset
    // kSub + kSuper + i - j of column j. Offsets [0, kSub) hold pivoting
    // fill-in for columns up to j + kSuper + kSub.
    bool in_store(int i, int j) const;
    double& at(int i, int j);
    double at(int i, int j) const;

    int dim_;
    std::vector<double> store_;
};

// Banded LU with partial pivoting confined to the band. Throws
// singular_matrix_error carrying the pivot index when elimination hits a
// pivot below 1e-14 times the matrix scale.
std::vector<double> banded_solve(const BandedMatrix& m,
                                 const std::vector<double>& rhs);

}  // namespace ebg
