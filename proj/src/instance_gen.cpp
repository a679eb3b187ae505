#include "sgmean/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sgmean {

Matrix random_isometry(Rng& rng, int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("random_isometry: need 1 <= k <= n");
    Matrix v(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) v(i, j) = rng.normal();

    // Modified Gram-Schmidt, two passes of the projection per column.
    for (int j = 0; j < k; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < j; ++prev) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += v(i, prev) * v(i, j);
                for (int i = 0; i < n; ++i) v(i, j) -= dot * v(i, prev);
            }
        }
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) norm2 += v(i, j) * v(i, j);
        if (norm2 == 0.0)
            throw std::invalid_argument("random_isometry: degenerate draw"); // unreachable
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) v(i, j) *= inv;
        // Sign convention: first nonzero entry positive.
        for (int i = 0; i < n; ++i) {
            if (v(i, j) != 0.0) {
                if (v(i, j) < 0.0)
                    for (int ii = 0; ii < n; ++ii) v(ii, j) = -v(ii, j);
                break;
            }
        }
    }
    return v;
}

Matrix random_orthogonal(Rng& rng, int n) { return random_isometry(rng, n, n); }

SymMatrix random_pd(Rng& rng, int dim, const SpectrumBounds& bounds, SpectrumMode mode) {
    if (dim < 1) throw std::invalid_argument("random_pd: dim must be positive");
    if (mode == SpectrumMode::PinnedEndpoints && dim == 1 && bounds.lo < bounds.hi)
        throw std::invalid_argument(
            "random_pd: cannot pin both endpoints of a 1x1 spectrum with lo < hi");

    std::vector<double> values(static_cast<size_t>(dim));
    for (double& v : values) v = rng.uniform(bounds.lo, bounds.hi);
    if (mode == SpectrumMode::PinnedEndpoints) {
        values.front() = bounds.lo;
        values.back() = bounds.hi;
    }

    const Matrix q = random_orthogonal(rng, dim);
    Matrix scaled = q;
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) scaled(i, j) *= values[static_cast<size_t>(j)];
    return SymMatrix::symmetrized(scaled * q.transposed());
}

SymMatrix random_pd(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return random_pd(rng, cfg.dim, cfg.bounds, cfg.mode);
}

SeparatedBounds::SeparatedBounds(double olo, double ilo, double ihi, double ohi)
    : outer_lo(olo), inner_lo(ilo), inner_hi(ihi), outer_hi(ohi) {
    if (!(0.0 < olo && olo <= ilo && ilo < ihi && ihi <= ohi))
        throw std::invalid_argument(
            "SeparatedBounds: need 0 < outer_lo <= inner_lo < inner_hi <= outer_hi");
}

std::pair<SymMatrix, SymMatrix> random_separated_pair(Rng& rng, int dim,
                                                      const SeparatedBounds& bounds) {
    const SpectrumMode mode =
        (dim == 1) ? SpectrumMode::Interior : SpectrumMode::PinnedEndpoints;
    SymMatrix a = random_pd(rng, dim, SpectrumBounds(bounds.outer_lo, bounds.inner_lo), mode);
    SymMatrix b = random_pd(rng, dim, SpectrumBounds(bounds.inner_hi, bounds.outer_hi), mode);
    return {std::move(a), std::move(b)};
}

} // namespace sgmean
