#include "sgmean/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace sgmean {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("Matrix: dimensions must be positive");
    data_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw std::invalid_argument("Matrix: empty initializer");
    cols_ = static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

static void require_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix: shape mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_shape(a, b);
    Matrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] = a.data()[i] + b.data()[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_shape(a, b);
    Matrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] = a.data()[i] - b.data()[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] = s * a.data()[i];
    return r;
}

SymMatrix::SymMatrix(int dim) : mat_(dim, dim) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : mat_(rows) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("SymMatrix: initializer must be square");
    mat_ = 0.5 * (mat_ + mat_.transposed());
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix s(dim);
    s.mat_ = Matrix::identity(dim);
    return s;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
    SymMatrix s(static_cast<int>(values.size()));
    for (int i = 0; i < s.dim(); ++i) s.mat_(i, i) = values[i];
    return s;
}

SymMatrix SymMatrix::symmetrized(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("SymMatrix: cannot symmetrize non-square matrix");
    SymMatrix s(m.rows());
    s.mat_ = 0.5 * (m + m.transposed());
    return s;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += mat_(i, i);
    return t;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix::symmetrized(a.mat() + b.mat());
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix::symmetrized(a.mat() - b.mat());
}

SymMatrix operator*(double s, const SymMatrix& a) {
    return SymMatrix::symmetrized(s * a.mat());
}

SymMatrix sandwich(const SymMatrix& w, const SymMatrix& x) {
    require_same_dim(w, x);
    return SymMatrix::symmetrized(w.mat() * x.mat() * w.mat());
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b);
    return (a - b).max_abs();
}

std::string matrix_digest(const SymMatrix& a) {
    // FNV-1a over the entry bytes; enough to identify an instance in a log.
    uint64_t h = 1469598103934665603ull;
    for (double v : a.mat().data()) {
        uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        __builtin_memcpy(&bits, &v, sizeof(bits));
        for (int k = 0; k < 8; ++k) {
            h ^= (bits >> (8 * k)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return "dim=" + std::to_string(a.dim()) + ";fnv=" + buf;
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
}

} // namespace sgmean
