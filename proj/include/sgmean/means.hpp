#pragma once

#include "sgmean/matrix.hpp"

namespace sgmean {

/// Interpolation weight t in [0, 1]; values outside are rejected.
class Weight {
public:
    explicit Weight(double t);
    double value() const noexcept { return t_; }

private:
    double t_;
};

/// (1-t) A + t B.
SymMatrix arithmetic_mean(const SymMatrix& a, const SymMatrix& b, Weight t);

/// ((1-t) A^{-1} + t B^{-1})^{-1}; inputs must be positive definite.
SymMatrix harmonic_mean(const SymMatrix& a, const SymMatrix& b, Weight t);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}; inputs must be positive definite.
/// Commuting inputs reduce to A^{1-t} B^t.
SymMatrix geometric_mean(const SymMatrix& a, const SymMatrix& b, Weight t);

/// (A^{-1} # B)^t A (A^{-1} # B)^t, with # the midpoint geometric mean.
/// Equivalently the unique positive definite X with (A^{-1} # B)^t = A^{-1} # X;
/// see spectral_residual for the executable form of that characterization.
SymMatrix spectral_geometric_mean(const SymMatrix& a, const SymMatrix& b, Weight t);

/// max-norm of (A^{-1} # B)^t - A^{-1} # (A natural_t B). Small values certify
/// the closed form above against its defining equation.
double spectral_residual(const SymMatrix& a, const SymMatrix& b, Weight t);

} // namespace sgmean
