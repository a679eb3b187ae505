#include "sgmean/eigen.hpp"

#include "sgmean/matrix.hpp"
#include "sgmean/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace sgmean;

namespace {

SymMatrix random_symmetric(Rng& rng, int dim, double scale) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = scale * rng.normal();
    return SymMatrix::symmetrized(m);
}

double orthogonality_defect(const Matrix& v) {
    const Matrix g = v.transposed() * v;
    double worst = 0.0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

} // namespace

TEST_CASE("diagonal input") {
    const std::vector<double> d{3.0, 1.0};
    const EigenDecomp ed = eigh(SymMatrix::diagonal(d));
    CHECK(ed.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ed.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    // Vectors form a permutation of the identity.
    CHECK(std::abs(ed.vectors(1, 0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(ed.vectors(0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("identity input") {
    for (int dim : {1, 4, 7}) {
        const EigenDecomp ed = eigh(SymMatrix::identity(dim));
        for (double v : ed.values) CHECK(v == 1.0);
    }
}

TEST_CASE("2x2 closed form") {
    const SymMatrix a{{2.0, 1.0}, {1.0, 2.0}};
    const EigenDecomp ed = eigh(a);
    CHECK(ed.values[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ed.values[1] == doctest::Approx(3.0).epsilon(1e-13));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(ed.vectors(0, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(ed.vectors(1, 0) == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
    CHECK(ed.vectors(0, 1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(ed.vectors(1, 1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
}

TEST_CASE("reconstruction and orthogonality over seeded ensemble") {
    Rng rng(20240601);
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 1 + rng.below(8);
        const double scale = std::exp(rng.uniform(-2.0, 4.0));
        const SymMatrix a = random_symmetric(rng, dim, scale);
        const EigenDecomp ed = eigh(a);

        REQUIRE(static_cast<int>(ed.values.size()) == dim);
        for (size_t i = 1; i < ed.values.size(); ++i) CHECK(ed.values[i - 1] <= ed.values[i]);

        CHECK(orthogonality_defect(ed.vectors) <= 1e-12);

        double max_lambda = 0.0;
        for (double v : ed.values) max_lambda = std::max(max_lambda, std::abs(v));
        CHECK(max_abs_diff(ed.reassemble(), a) <= 1e-10 * (1.0 + max_lambda));
    }
}

TEST_CASE("deterministic for identical input") {
    Rng rng(7);
    const SymMatrix a = random_symmetric(rng, 6, 3.0);
    const EigenDecomp e1 = eigh(a);
    const EigenDecomp e2 = eigh(a);
    for (size_t i = 0; i < e1.values.size(); ++i) CHECK(e1.values[i] == e2.values[i]);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(e1.vectors(i, j) == e2.vectors(i, j));
}

TEST_CASE("tightened options still converge") {
    Rng rng(99);
    const SymMatrix a = random_symmetric(rng, 8, 1.0);
    const EigenDecomp loose = eigh(a);
    const EigenDecomp tight = eigh(a, JacobiOptions{200, 0.0});
    for (int i = 0; i < 8; ++i)
        CHECK(loose.values[static_cast<size_t>(i)] ==
              doctest::Approx(tight.values[static_cast<size_t>(i)]).epsilon(1e-12));
}
