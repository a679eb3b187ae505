#pragma once

#include "sgmean/eigen.hpp"
#include "sgmean/matrix.hpp"

#include <functional>

namespace sgmean {

/// Closed interval [lo, hi] a spectrum is asserted to lie in; 0 < lo <= hi.
struct SpectrumBounds {
    double lo;
    double hi;

    SpectrumBounds(double lo_, double hi_);
    double ratio() const { return hi / lo; }
};

/// Spectral calculus: vectors * diag(fn(values)) * vectors^T, re-symmetrized.
SymMatrix apply_fn(const SymMatrix& a, const std::function<double(double)>& fn);

/// A^p. Non-negative integer p works for any symmetric A; fractional or
/// negative p requires a positive definite A (DomainError carries lambda_min)
/// and is evaluated as exp(p * log(lambda)) per eigenvalue.
SymMatrix matrix_power(const SymMatrix& a, double p);

SymMatrix matrix_sqrt(const SymMatrix& a);
SymMatrix matrix_inverse(const SymMatrix& a);

enum class CongruenceMode {
    Half,    // C^{1/2} X C^{1/2}
    InvHalf, // C^{-1/2} X C^{-1/2}
};

/// Congruence by C^{±1/2}; C must be positive definite. Preserves positive
/// definiteness of X.
SymMatrix congruence(const SymMatrix& c, const SymMatrix& x, CongruenceMode mode);

/// lambda_min(rhs - lhs). Nonnegative (up to tolerance) means lhs <= rhs in
/// the positive semidefinite order.
double loewner_margin(const SymMatrix& lhs, const SymMatrix& rhs);

/// True iff bounds.lo - tol <= lambda_min(a) and lambda_max(a) <= bounds.hi + tol.
bool spectrum_within(const SymMatrix& a, const SpectrumBounds& bounds, double tol = 1e-10);

} // namespace sgmean
