#pragma once

#include "sgmean/means.hpp"

#include <optional>
#include <vector>

namespace sgmean {

// Scalar constants attached to the matrix-mean inequalities. All t-th powers
// of positive quantities are evaluated as exp(t * log(.)) so negative and
// large exponents behave uniformly. K and its relatives have removable
// singularities at x = 1, t = 0 and t = 1; inputs within 1e-7 of those points
// return the analytic limit 1 instead of evaluating a 0/0 expression.

/// Generalized Kantorovich constant
///   K(x,t) = (x^t - x)/((t-1)(x-1)) * ((t-1)/t * (x^t - 1)/(x^t - x))^t
/// for x > 0 and any real t. Satisfies K(1/x,t) = K(x,t) and
/// K(x,1-t) = K(x,t); equals 1 at the singular points by continuity.
double kantorovich(double x, double t);

/// Two-parameter form over a spectrum interval 0 < m, M:
///   K(m,M,t) = (m M^t - M m^t)/((t-1)(M-m)) * ((t-1)/t * (M^t - m^t)/(m M^t - M m^t))^t.
/// Scale-invariant, so it agrees with kantorovich(M/m, t).
double kantorovich(double m, double M, double t);

/// Mean-based companion bound
///   L(x,t) = ((x^t + x)/(x + 1)) * ((x^t + 1)/(x^t + x))^t,
/// below K for t in [0,1] and above K outside; total on x > 0.
double kantorovich_lower(double x, double t);

/// dK/dx in factored form; rejects the singular inputs x = 1, t in {0,1}.
double kantorovich_dx(double x, double t);

/// Discriminant deciding which Ando-Hiai constant (kappa1 or kappa2) is
/// smaller at ratio x = M/m:
///   delta(x,t) = ((x+1)^2/(4x))^{t+1} - ((x^{t+1}+1)^2/(4 x^{t+1})) K^2(x,t).
/// Valid for x > 1, 0 <= t <= 1; sign(kappa1 - kappa2) = sign(delta).
double kappa_order_gap(double x, double t);

namespace detail {
/// Same formula without the x > 1 domain check; used by the CSV tabulator
/// which must stay finite on whole grids.
double kappa_order_gap_raw(double x, double t);
} // namespace detail

enum class ScalarMeanKind { Arithmetic, Geometric, Harmonic };

/// Weighted scalar mean of m and M: (1-lam) m + lam M, m^{1-lam} M^{lam},
/// or ((1-lam)/m + lam/M)^{-1}.
double scalar_mean(double m, double M, double lam, ScalarMeanKind kind);

/// Constants of the power-order comparison (A natural_t B)^r vs A^r natural_t B^r.
double kappa1(double m, double M, double r, double t);
double kappa2(double m, double M, double r, double t);

/// Every scalar constant the inequality suite needs for one (m, M, t[, r]),
/// computed once so each check pulls from the same source.
struct ConstantsBundle {
    double m = 1.0;
    double M = 1.0;
    double t = 0.0;
    double lambda = 0.0; // min{t, 1-t}

    double k = 1.0;            // K(m, M, t)
    double k_ratio = 1.0;      // K(m/M, M/m, t)
    double k_sqrt_ratio = 1.0; // K(sqrt(m/M), sqrt(M/m), t)

    double xi = 1.0; // 2 sqrt(M^{1+t} m^{1+t}) / (M^{1+t} + m^{1+t})
    double c1 = 1.0; // (M + m)^2 / (4 M m)
    double c2 = 1.0; // same expression as xi
    double k2 = 1.0; // (M^{1+t} + m^{1+t})^2 / (4 M^{1+t} m^{1+t}) == 1/xi^2

    double beta = 1.0;  // c1^t * k2 / c2^2
    double eta = 1.0;   // c1^{1+t} / k_sqrt_ratio^2
    double gamma = 1.0; // k2 / k_ratio; eta <= gamma on [0,1]

    std::optional<double> r;
    std::optional<double> kappa1;
    std::optional<double> kappa2;
};

ConstantsBundle make_bundle(double m, double M, Weight t, std::optional<double> r = {});

// Fixed evaluation grids for the property checks, so results are
// reproducible run to run:
//   x: 60 log-spaced points in [0.05, 20], minus any within 1e-7 of 1;
//   t: 41 uniform points per regime ([0,1], [1,2], [-1,0]).
std::vector<double> log_x_grid();
std::vector<double> unit_t_grid();
std::vector<double> upper_t_grid();
std::vector<double> lower_t_grid();

} // namespace sgmean
