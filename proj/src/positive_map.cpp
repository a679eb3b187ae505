#include "sgmean/positive_map.hpp"

#include "sgmean/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sgmean {

namespace {

constexpr double kMapTol = 1e-12;

SymMatrix compress(const Matrix& v, const SymMatrix& a) {
    return SymMatrix::symmetrized(v.transposed() * a.mat() * v);
}

double gram_defect(const Matrix& v) {
    const Matrix g = v.transposed() * v;
    double worst = 0.0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

} // namespace

int map_output_dim(const MapSpec& phi, int input_dim) {
    if (std::holds_alternative<Compression>(phi))
        return std::get<Compression>(phi).isometry.cols();
    if (std::holds_alternative<NormalizedTrace>(phi)) return 1;
    return input_dim;
}

SymMatrix apply_map(const MapSpec& phi, const SymMatrix& a) {
    const int n = a.dim();
    if (std::holds_alternative<IdentityMap>(phi)) return a;

    if (const auto* c = std::get_if<Compression>(&phi)) {
        if (c->isometry.rows() != n)
            throw std::invalid_argument("apply_map: compression dimension mismatch");
        return compress(c->isometry, a);
    }

    if (const auto* p = std::get_if<Pinching>(&phi)) {
        if (!validate_map(phi, n))
            throw std::invalid_argument("apply_map: pinching blocks do not partition indices");
        Matrix m(n, n);
        for (const auto& block : p->blocks)
            for (int i : block)
                for (int j : block) m(i, j) = a(i, j);
        return SymMatrix::symmetrized(m);
    }

    if (const auto* mix = std::get_if<OrthogonalMixture>(&phi)) {
        if (mix->rotations.size() != mix->weights.size() || mix->rotations.empty())
            throw std::invalid_argument("apply_map: malformed mixture");
        Matrix acc(n, n);
        for (size_t i = 0; i < mix->rotations.size(); ++i) {
            const Matrix& q = mix->rotations[i];
            if (q.rows() != n || q.cols() != n)
                throw std::invalid_argument("apply_map: mixture dimension mismatch");
            acc = acc + mix->weights[i] * (q.transposed() * a.mat() * q);
        }
        return SymMatrix::symmetrized(acc);
    }

    // NormalizedTrace
    const std::vector<double> tr{a.trace() / n};
    return SymMatrix::diagonal(tr);
}

bool validate_map(const MapSpec& phi, int dim) {
    if (std::holds_alternative<IdentityMap>(phi) || std::holds_alternative<NormalizedTrace>(phi))
        return dim >= 1;

    if (const auto* c = std::get_if<Compression>(&phi)) {
        if (c->isometry.rows() != dim || c->isometry.cols() < 1 ||
            c->isometry.cols() > dim)
            return false;
        return gram_defect(c->isometry) <= kMapTol;
    }

    if (const auto* p = std::get_if<Pinching>(&phi)) {
        std::vector<int> seen(static_cast<size_t>(dim), 0);
        for (const auto& block : p->blocks)
            for (int i : block) {
                if (i < 0 || i >= dim) return false;
                seen[static_cast<size_t>(i)] += 1;
            }
        return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    }

    const auto& mix = std::get<OrthogonalMixture>(phi);
    if (mix.rotations.size() != mix.weights.size() || mix.rotations.empty()) return false;
    double total = 0.0;
    for (double w : mix.weights) {
        if (w < 0.0) return false;
        total += w;
    }
    if (std::abs(total - 1.0) > kMapTol) return false;
    for (const Matrix& q : mix.rotations) {
        if (q.rows() != dim || q.cols() != dim) return false;
        if (gram_defect(q) > kMapTol) return false;
    }
    return true;
}

MapSpec random_map(Rng& rng, int dim) {
    switch (rng.below(5)) {
    case 0: return IdentityMap{};
    case 1: {
        const int k = 1 + rng.below(dim);
        return Compression{random_isometry(rng, dim, k)};
    }
    case 2: {
        // Shuffle indices, cut into 1..3 blocks.
        std::vector<int> idx(static_cast<size_t>(dim));
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = dim - 1; i > 0; --i) std::swap(idx[i], idx[rng.below(i + 1)]);
        const int nblocks = 1 + rng.below(std::min(dim, 3));
        Pinching p;
        p.blocks.assign(static_cast<size_t>(nblocks), {});
        for (int i = 0; i < dim; ++i)
            p.blocks[static_cast<size_t>(i % nblocks)].push_back(idx[static_cast<size_t>(i)]);
        return p;
    }
    case 3: {
        const int parts = 2 + rng.below(2);
        OrthogonalMixture mix;
        double total = 0.0;
        for (int i = 0; i < parts; ++i) {
            mix.rotations.push_back(random_orthogonal(rng, dim));
            const double w = rng.uniform(0.1, 1.0);
            mix.weights.push_back(w);
            total += w;
        }
        for (double& w : mix.weights) w /= total;
        // Nudge the weights so they sum to 1 exactly.
        double sum_rest = 0.0;
        for (size_t i = 0; i + 1 < mix.weights.size(); ++i) sum_rest += mix.weights[i];
        mix.weights.back() = 1.0 - sum_rest;
        return mix;
    }
    default: return NormalizedTrace{};
    }
}

} // namespace sgmean
