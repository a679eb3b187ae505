#pragma once

#include "sgmean/matrix.hpp"
#include "sgmean/matrix_function.hpp"
#include "sgmean/rng.hpp"

#include <cstdint>
#include <utility>

namespace sgmean {

enum class SpectrumMode {
    /// Eigenvalues uniform in [lo, hi] with the smallest forced to lo and the
    /// largest to hi, so the declared bounds are attained exactly (dim >= 2).
    PinnedEndpoints,
    /// Eigenvalues uniform in [lo, hi] with no pinning.
    Interior,
};

struct GenConfig {
    uint64_t seed = 0;
    int dim = 2;
    SpectrumBounds bounds{1.0, 1.0};
    SpectrumMode mode = SpectrumMode::PinnedEndpoints;
};

/// Positive definite matrix with controlled spectrum: draw eigenvalues per
/// the mode, conjugate by a random orthogonal factor. Identical config gives
/// a bit-identical matrix. PinnedEndpoints with dim = 1 and lo < hi is
/// impossible and rejected.
SymMatrix random_pd(const GenConfig& cfg);
SymMatrix random_pd(Rng& rng, int dim, const SpectrumBounds& bounds, SpectrumMode mode);

/// Bounds for a pair with separated spectra:
///   outer_lo <= A <= inner_lo < inner_hi <= B <= outer_hi.
struct SeparatedBounds {
    double outer_lo;
    double inner_lo;
    double inner_hi;
    double outer_hi;

    SeparatedBounds(double olo, double ilo, double ihi, double ohi);
};

/// (A, B) with A pinned in [outer_lo, inner_lo] and B pinned in
/// [inner_hi, outer_hi] (interior draw when dim = 1).
std::pair<SymMatrix, SymMatrix> random_separated_pair(Rng& rng, int dim,
                                                      const SeparatedBounds& bounds);

/// n x k matrix with orthonormal columns: Gaussian entries orthonormalized by
/// modified Gram-Schmidt, each column signed so its first nonzero entry is
/// positive (keeps the output stable across platforms).
Matrix random_isometry(Rng& rng, int n, int k);

/// Square case of random_isometry.
Matrix random_orthogonal(Rng& rng, int n);

} // namespace sgmean
