#pragma once

#include "sgmean/matrix.hpp"

#include <vector>

namespace sgmean {

/// Settings for the cyclic Jacobi eigensolver.
struct JacobiOptions {
    /// Hard cap on full sweeps; exceeding it raises NumericError.
    int max_sweeps = 100;
    /// Off-diagonal entries at or below rel_threshold * (1 + max|A|) count as
    /// annihilated. Zero means "sweep until rotations stop changing anything".
    double rel_threshold = 1e-14;
};

struct EigenDecomp {
    std::vector<double> values; // ascending
    Matrix vectors;             // orthogonal, columns are eigenvectors

    /// vectors * diag(values) * vectors^T
    SymMatrix reassemble() const;
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps with
/// threshold pivoting. Deterministic: identical input (and options) gives an
/// identical result. Eigenvalues come out ascending; each eigenvector column
/// is signed so its largest-magnitude entry is positive.
EigenDecomp eigh(const SymMatrix& a);
EigenDecomp eigh(const SymMatrix& a, const JacobiOptions& opts);

/// The options eigh() uses when none are passed explicitly (thread-local).
JacobiOptions& active_jacobi_options();

/// Temporarily tighten the Jacobi threshold on this thread; used to re-check
/// borderline inequality margins at full convergence before reporting them.
class ScopedJacobiOptions {
public:
    explicit ScopedJacobiOptions(const JacobiOptions& opts)
        : saved_(active_jacobi_options()) {
        active_jacobi_options() = opts;
    }
    ~ScopedJacobiOptions() { active_jacobi_options() = saved_; }
    ScopedJacobiOptions(const ScopedJacobiOptions&) = delete;
    ScopedJacobiOptions& operator=(const ScopedJacobiOptions&) = delete;

private:
    JacobiOptions saved_;
};

double min_eigenvalue(const SymMatrix& a);
double max_eigenvalue(const SymMatrix& a);

} // namespace sgmean
