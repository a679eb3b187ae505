#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgmean {

/// Dense real matrix, row-major. Used for orthogonal factors, isometries
/// and intermediate products; the symmetric wrapper below is the type the
/// rest of the library works with.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transposed() const;
    double max_abs() const;

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(double s, const Matrix& a);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Dense real symmetric matrix. Symmetry is an invariant enforced by
/// construction: every factory symmetrizes its input via (X + X^T)/2, and
/// entries are immutable afterwards, so values stay exactly symmetric and
/// are safe to share across threads.
class SymMatrix {
public:
    explicit SymMatrix(int dim);
    /// Symmetrizes, so slightly lopsided literals are accepted.
    SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static SymMatrix identity(int dim);
    static SymMatrix diagonal(std::span<const double> values);
    /// (m + m^T)/2 of a square matrix.
    static SymMatrix symmetrized(const Matrix& m);

    int dim() const noexcept { return mat_.rows(); }
    double operator()(int i, int j) const { return mat_(i, j); }
    const Matrix& mat() const noexcept { return mat_; }

    double max_abs() const { return mat_.max_abs(); }
    double trace() const;

    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator*(double s, const SymMatrix& a);

private:
    Matrix mat_;
};

/// sym(w * x * w) for symmetric w, x. The congruence W X W of a symmetric X
/// is symmetric in exact arithmetic; the explicit re-symmetrization removes
/// rounding drift.
SymMatrix sandwich(const SymMatrix& w, const SymMatrix& x);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// Short stable fingerprint of the entries, for error messages and
/// instance digests ("dim=3;fnv=a1b2...").
std::string matrix_digest(const SymMatrix& a);

void require_same_dim(const SymMatrix& a, const SymMatrix& b);

} // namespace sgmean
