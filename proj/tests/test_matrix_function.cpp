#include "sgmean/matrix_function.hpp"

#include "sgmean/errors.hpp"
#include "sgmean/instance_gen.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace sgmean;

namespace {

double rel_diff(const SymMatrix& a, const SymMatrix& b) {
    return max_abs_diff(a, b) / (1.0 + std::max(a.max_abs(), b.max_abs()));
}

} // namespace

TEST_CASE("powers of diagonal and identity") {
    const std::vector<double> d{4.0, 9.0};
    const SymMatrix half = matrix_power(SymMatrix::diagonal(d), 0.5);
    CHECK(half(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(half(1, 1) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(half(0, 1)) <= 1e-14);

    for (double t : {-1.0, 0.3, 2.0}) {
        const SymMatrix p = matrix_power(SymMatrix::identity(3), t);
        CHECK(rel_diff(p, SymMatrix::identity(3)) <= 1e-14);
    }
}

TEST_CASE("2x2 closed-form square root") {
    const SymMatrix a{{2.0, 1.0}, {1.0, 2.0}};
    const SymMatrix r = matrix_sqrt(a);
    const double s3 = std::sqrt(3.0);
    CHECK(r(0, 0) == doctest::Approx(0.5 * (s3 + 1.0)).epsilon(1e-13));
    CHECK(r(0, 1) == doctest::Approx(0.5 * (s3 - 1.0)).epsilon(1e-13));
    CHECK(r(1, 1) == doctest::Approx(0.5 * (s3 + 1.0)).epsilon(1e-13));
    CHECK(rel_diff(matrix_power(a, 0.5), r) <= 1e-14);
}

TEST_CASE("power(1) is the identity map on matrices") {
    Rng rng(11);
    const SymMatrix a = random_pd(rng, 5, SpectrumBounds(0.5, 6.0), SpectrumMode::PinnedEndpoints);
    CHECK(max_abs_diff(matrix_power(a, 1.0), a) <= 1e-12 * (1.0 + a.max_abs()));
}

TEST_CASE("domain errors carry the offending eigenvalue") {
    const SymMatrix indefinite{{1.0, 0.0}, {0.0, -2.0}};
    CHECK_THROWS_AS(matrix_sqrt(indefinite), DomainError);
    CHECK_THROWS_AS(matrix_inverse(indefinite), DomainError);
    CHECK_THROWS_AS(matrix_power(indefinite, 0.5), DomainError);
    CHECK_THROWS_AS(matrix_power(indefinite, -2.0), DomainError);
    try {
        matrix_power(indefinite, 0.5);
    } catch (const DomainError& e) {
        CHECK(e.lambda_min() == doctest::Approx(-2.0).epsilon(1e-13));
    }
    // Non-negative integer powers work on indefinite input.
    const SymMatrix sq = matrix_power(indefinite, 2.0);
    CHECK(sq(1, 1) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("function calculus: exponent addition") {
    Rng rng(12);
    const std::vector<double> exps{-1.0, -0.5, 0.3, 0.5, 1.0};
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + rng.below(6);
        const SymMatrix a =
            random_pd(rng, dim, SpectrumBounds(0.4, 5.0), SpectrumMode::PinnedEndpoints);
        for (double s : exps)
            for (double t : exps) {
                const SymMatrix sum = matrix_power(a, s + t);
                const SymMatrix prod = SymMatrix::symmetrized(
                    matrix_power(a, s).mat() * matrix_power(a, t).mat());
                CHECK(rel_diff(sum, prod) <= 1e-9);
            }
    }
}

TEST_CASE("congruence examples") {
    const SymMatrix x{{3.0, 1.0}, {1.0, 2.0}};
    CHECK(rel_diff(congruence(SymMatrix::identity(2), x, CongruenceMode::Half), x) <= 1e-13);

    const std::vector<double> four{4.0, 4.0};
    const SymMatrix c4 = SymMatrix::diagonal(four);
    CHECK(rel_diff(congruence(c4, SymMatrix::identity(2), CongruenceMode::Half), c4) <= 1e-13);

    const std::vector<double> d41{4.0, 1.0};
    const SymMatrix ones{{1.0, 1.0}, {1.0, 1.0}};
    const SymMatrix got = congruence(SymMatrix::diagonal(d41), ones, CongruenceMode::Half);
    const SymMatrix want{{4.0, 2.0}, {2.0, 1.0}};
    CHECK(rel_diff(got, want) <= 1e-13);

    CHECK_THROWS_AS(congruence(SymMatrix{{-1.0, 0.0}, {0.0, 1.0}}, x, CongruenceMode::Half),
                    DomainError);
}

TEST_CASE("congruence round trip") {
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 2 + rng.below(7);
        const SymMatrix c =
            random_pd(rng, dim, SpectrumBounds(0.3, 8.0), SpectrumMode::PinnedEndpoints);
        const SymMatrix x =
            random_pd(rng, dim, SpectrumBounds(0.5, 3.0), SpectrumMode::PinnedEndpoints);
        const SymMatrix back =
            congruence(c, congruence(c, x, CongruenceMode::InvHalf), CongruenceMode::Half);
        CHECK(rel_diff(back, x) <= 1e-9);
    }
}

TEST_CASE("loewner margin") {
    const SymMatrix a{{2.0, 1.0}, {1.0, 2.0}};
    CHECK(std::abs(loewner_margin(a, a)) <= 1e-12);
    CHECK(loewner_margin(SymMatrix::identity(3), 2.0 * SymMatrix::identity(3)) ==
          doctest::Approx(1.0).epsilon(1e-13));

    const std::vector<double> d13{1.0, 3.0};
    const std::vector<double> d22{2.0, 2.0};
    CHECK(loewner_margin(SymMatrix::diagonal(d13), SymMatrix::diagonal(d22)) ==
          doctest::Approx(-1.0).epsilon(1e-13));

    CHECK_THROWS_AS(loewner_margin(a, SymMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("loewner margin sign flip under swap") {
    Rng rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 2 + rng.below(5);
        const SymMatrix l =
            random_pd(rng, dim, SpectrumBounds(0.5, 4.0), SpectrumMode::Interior);
        const SymMatrix r =
            random_pd(rng, dim, SpectrumBounds(0.5, 4.0), SpectrumMode::Interior);
        // margin(l, r) = -lambda_max(l - r)
        const double lhs = loewner_margin(l, r);
        const double lambda_max = max_eigenvalue(l - r);
        CHECK(lhs == doctest::Approx(-lambda_max).epsilon(1e-10));
    }
}

TEST_CASE("spectrum_within") {
    const std::vector<double> d12{1.0, 2.0};
    CHECK(spectrum_within(SymMatrix::diagonal(d12), SpectrumBounds(1.0, 2.0)));
    const std::vector<double> dhalf{0.5, 2.0};
    CHECK_FALSE(spectrum_within(SymMatrix::diagonal(dhalf), SpectrumBounds(1.0, 2.0)));

    Rng rng(15);
    const SymMatrix a =
        random_pd(rng, 4, SpectrumBounds(1.0, 3.0), SpectrumMode::PinnedEndpoints);
    CHECK(spectrum_within(a, SpectrumBounds(1.0, 3.0)));

    CHECK_THROWS_AS(SpectrumBounds(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SpectrumBounds(2.0, 1.0), std::invalid_argument);
}
