#pragma once

#include "sgmean/matrix.hpp"
#include "sgmean/rng.hpp"

#include <variant>
#include <vector>

namespace sgmean {

// Concrete unital positive linear maps. Each kind is linear, sends positive
// semidefinite to positive semidefinite, and fixes the identity; compression
// and the normalized trace change the space dimension.

struct IdentityMap {};

/// A -> V^T A V for an n x k isometry V (V^T V = I_k); k = 1 gives the
/// inner-product functional A -> [<Ax, x>].
struct Compression {
    Matrix isometry;
};

/// Zero out entries across a partition of the index set (block-diagonal cut).
struct Pinching {
    std::vector<std::vector<int>> blocks;
};

/// A -> sum_i w_i Q_i^T A Q_i for orthogonal Q_i and convex weights w_i.
struct OrthogonalMixture {
    std::vector<Matrix> rotations;
    std::vector<double> weights;
};

/// A -> [tr(A)/n], a 1x1 output.
struct NormalizedTrace {};

using MapSpec =
    std::variant<IdentityMap, Compression, Pinching, OrthogonalMixture, NormalizedTrace>;

int map_output_dim(const MapSpec& phi, int input_dim);

SymMatrix apply_map(const MapSpec& phi, const SymMatrix& a);

/// True iff the spec is well formed for the given input dimension and the map
/// it denotes is numerically unital: isometry/orthogonality Gram defects and
/// |phi(I) - I| at most 1e-12, weights nonnegative summing to 1, blocks a
/// partition of the index set.
bool validate_map(const MapSpec& phi, int dim);

/// Draw one of the five kinds uniformly, with random parameters valid for
/// the given dimension.
MapSpec random_map(Rng& rng, int dim);

} // namespace sgmean
