#include "sgmean/means.hpp"

#include "sgmean/matrix_function.hpp"

#include <stdexcept>
#include <string>

namespace sgmean {

Weight::Weight(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("Weight: t must lie in [0, 1], got " + std::to_string(t));
}

SymMatrix arithmetic_mean(const SymMatrix& a, const SymMatrix& b, Weight t) {
    require_same_dim(a, b);
    return (1.0 - t.value()) * a + t.value() * b;
}

SymMatrix harmonic_mean(const SymMatrix& a, const SymMatrix& b, Weight t) {
    require_same_dim(a, b);
    return matrix_inverse(arithmetic_mean(matrix_inverse(a), matrix_inverse(b), t));
}

SymMatrix geometric_mean(const SymMatrix& a, const SymMatrix& b, Weight t) {
    require_same_dim(a, b);
    const SymMatrix inner = congruence(a, b, CongruenceMode::InvHalf);
    return congruence(a, matrix_power(inner, t.value()), CongruenceMode::Half);
}

// The common factor (A^{-1} # B)^t of the spectral geometric mean.
static SymMatrix spectral_factor(const SymMatrix& a, const SymMatrix& b, double t) {
    const SymMatrix mid = geometric_mean(matrix_inverse(a), b, Weight(0.5));
    return matrix_power(mid, t);
}

SymMatrix spectral_geometric_mean(const SymMatrix& a, const SymMatrix& b, Weight t) {
    require_same_dim(a, b);
    return sandwich(spectral_factor(a, b, t.value()), a);
}

double spectral_residual(const SymMatrix& a, const SymMatrix& b, Weight t) {
    const SymMatrix lhs = spectral_factor(a, b, t.value());
    const SymMatrix rhs =
        geometric_mean(matrix_inverse(a), spectral_geometric_mean(a, b, t), Weight(0.5));
    return max_abs_diff(lhs, rhs);
}

} // namespace sgmean
