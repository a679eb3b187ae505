#include "sgmean/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgmean {

namespace {

constexpr double kSingularBand = 1e-7;

// exp(t * log(b)) for b > 0; exact 1 for t == 0 and b == 1.
double pow_pos(double b, double t) { return std::exp(t * std::log(b)); }

bool near(double a, double b) { return std::abs(a - b) <= kSingularBand; }

void require_positive(double x, const char* name) {
    if (!(x > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

} // namespace

double kantorovich(double x, double t) {
    require_positive(x, "kantorovich: x");
    if (near(x, 1.0) || near(t, 0.0) || near(t, 1.0)) return 1.0;
    const double xt = pow_pos(x, t);
    const double pre = (xt - x) / ((t - 1.0) * (x - 1.0));
    const double base = (t - 1.0) / t * (xt - 1.0) / (xt - x);
    return pre * pow_pos(base, t);
}

double kantorovich(double m, double M, double t) {
    require_positive(m, "kantorovich: m");
    require_positive(M, "kantorovich: M");
    const double ratio = std::max(M / m, m / M);
    if (near(ratio, 1.0) || near(t, 0.0) || near(t, 1.0)) return 1.0;
    const double Mt = pow_pos(M, t);
    const double mt = pow_pos(m, t);
    const double pre = (m * Mt - M * mt) / ((t - 1.0) * (M - m));
    const double base = (t - 1.0) / t * (Mt - mt) / (m * Mt - M * mt);
    return pre * pow_pos(base, t);
}

double kantorovich_lower(double x, double t) {
    require_positive(x, "kantorovich_lower: x");
    const double xt = pow_pos(x, t);
    return (xt + x) / (x + 1.0) * pow_pos((xt + 1.0) / (xt + x), t);
}

double kantorovich_dx(double x, double t) {
    require_positive(x, "kantorovich_dx: x");
    if (near(x, 1.0) || near(t, 0.0) || near(t, 1.0))
        throw std::invalid_argument("kantorovich_dx: singular at x = 1 and t in {0, 1}");
    const double xt = pow_pos(x, t);
    const double f = 1.0 - xt + x * t - t;
    const double g = t * pow_pos(x, t - 1.0) - 1.0 + (1.0 - t) * xt;
    const double base = (t - 1.0) / t * (xt - 1.0) / (xt - x);
    return f * g / ((1.0 - t) * (1.0 - xt) * (x - 1.0) * (x - 1.0)) * pow_pos(base, t);
}

namespace detail {

double kappa_order_gap_raw(double x, double t) {
    const double k = kantorovich(x, t);
    const double xt1 = pow_pos(x, t + 1.0);
    return pow_pos((x + 1.0) * (x + 1.0) / (4.0 * x), t + 1.0) -
           (xt1 + 1.0) * (xt1 + 1.0) / (4.0 * xt1) * k * k;
}

} // namespace detail

double kappa_order_gap(double x, double t) {
    if (!(x > 1.0)) throw std::invalid_argument("kappa_order_gap: requires x > 1");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("kappa_order_gap: requires t in [0, 1]");
    return detail::kappa_order_gap_raw(x, t);
}

double scalar_mean(double m, double M, double lam, ScalarMeanKind kind) {
    require_positive(m, "scalar_mean: m");
    require_positive(M, "scalar_mean: M");
    if (!(lam >= 0.0 && lam <= 1.0))
        throw std::invalid_argument("scalar_mean: weight must lie in [0, 1]");
    switch (kind) {
    case ScalarMeanKind::Arithmetic: return (1.0 - lam) * m + lam * M;
    case ScalarMeanKind::Geometric: return pow_pos(m, 1.0 - lam) * pow_pos(M, lam);
    case ScalarMeanKind::Harmonic: return 1.0 / ((1.0 - lam) / m + lam / M);
    }
    throw std::invalid_argument("scalar_mean: unknown kind");
}

namespace {

struct KappaParts {
    double first; // factor shared by kappa1 and kappa2
    double c1;
    double k2;
    double k_sqrt_ratio;
};

KappaParts kappa_parts(double m, double M, double r, double t) {
    if (!(m > 0.0 && m <= M)) throw std::invalid_argument("kappa: need 0 < m <= M");
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("kappa: need r in [0, 1]");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("kappa: need t in [0, 1]");
    const double lam = std::min(t, 1.0 - t);
    const double mr = pow_pos(m, r);
    const double Mr = pow_pos(M, r);
    const double mean_ratio = scalar_mean(mr, Mr, lam, ScalarMeanKind::Arithmetic) /
                              scalar_mean(mr, Mr, lam, ScalarMeanKind::Geometric);
    const double k2_r = (Mr + mr) * (Mr + mr) / (4.0 * Mr * mr);
    const double k_sqrt_r = kantorovich(std::sqrt(mr / Mr), std::sqrt(Mr / mr), t);
    const double first =
        mean_ratio * pow_pos(k2_r, 1.0 + t) / (kantorovich(m, M, t) * k_sqrt_r * k_sqrt_r);

    const double m1t = pow_pos(m, 1.0 + t);
    const double M1t = pow_pos(M, 1.0 + t);
    KappaParts p;
    p.first = first;
    p.c1 = (M + m) * (M + m) / (4.0 * M * m);
    p.k2 = (M1t + m1t) * (M1t + m1t) / (4.0 * M1t * m1t);
    p.k_sqrt_ratio = kantorovich(std::sqrt(m / M), std::sqrt(M / m), t);
    return p;
}

} // namespace

double kappa1(double m, double M, double r, double t) {
    const KappaParts p = kappa_parts(m, M, r, t);
    return p.first * pow_pos(p.c1, r * (1.0 + t)) / pow_pos(p.k_sqrt_ratio, 2.0 * r);
}

double kappa2(double m, double M, double r, double t) {
    const KappaParts p = kappa_parts(m, M, r, t);
    return p.first * pow_pos(p.k2, r);
}

ConstantsBundle make_bundle(double m, double M, Weight tw, std::optional<double> r) {
    if (!(m > 0.0 && m <= M)) throw std::invalid_argument("make_bundle: need 0 < m <= M");
    const double t = tw.value();

    ConstantsBundle b;
    b.m = m;
    b.M = M;
    b.t = t;
    b.lambda = std::min(t, 1.0 - t);

    b.k = kantorovich(m, M, t);
    b.k_ratio = kantorovich(m / M, M / m, t);
    b.k_sqrt_ratio = kantorovich(std::sqrt(m / M), std::sqrt(M / m), t);

    const double m1t = pow_pos(m, 1.0 + t);
    const double M1t = pow_pos(M, 1.0 + t);
    b.xi = 2.0 * std::sqrt(M1t * m1t) / (M1t + m1t);
    b.c1 = (M + m) * (M + m) / (4.0 * M * m);
    b.c2 = b.xi;
    b.k2 = (M1t + m1t) * (M1t + m1t) / (4.0 * M1t * m1t);

    b.beta = pow_pos(b.c1, t) * b.k2 / (b.c2 * b.c2);
    b.eta = pow_pos(b.c1, 1.0 + t) / (b.k_sqrt_ratio * b.k_sqrt_ratio);
    b.gamma = b.k2 / b.k_ratio;

    if (r) {
        b.r = r;
        b.kappa1 = kappa1(m, M, *r, t);
        b.kappa2 = kappa2(m, M, *r, t);
    }
    return b;
}

std::vector<double> log_x_grid() {
    constexpr int n = 60;
    const double lo = std::log(0.05);
    const double hi = std::log(20.0);
    std::vector<double> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = std::exp(lo + (hi - lo) * i / (n - 1));
        if (std::abs(x - 1.0) <= kSingularBand) continue;
        xs.push_back(x);
    }
    return xs;
}

static std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> ts;
    ts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ts.push_back(lo + (hi - lo) * i / (n - 1));
    return ts;
}

std::vector<double> unit_t_grid() { return uniform_grid(0.0, 1.0, 41); }
std::vector<double> upper_t_grid() { return uniform_grid(1.0, 2.0, 41); }
std::vector<double> lower_t_grid() { return uniform_grid(-1.0, 0.0, 41); }

} // namespace sgmean
