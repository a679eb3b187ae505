#pragma once

// Independent brute-force reference for 2x2 symmetric computations: the
// closed-form quadratic eigendecomposition plus plain array arithmetic.
// Shares no code with the library on purpose, so it can arbitrate the
// library's eigensolver-based paths.

#include <array>
#include <cmath>

namespace oracle2 {

using Mat = std::array<std::array<double, 2>, 2>;

inline Mat make(double a00, double a01, double a11) { return {{{a00, a01}, {a01, a11}}}; }

inline Mat mul(const Mat& x, const Mat& y) {
    Mat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
}

inline Mat sym(const Mat& x) {
    const double off = 0.5 * (x[0][1] + x[1][0]);
    return make(x[0][0], off, x[1][1]);
}

inline Mat scale(double s, const Mat& x) {
    return {{{s * x[0][0], s * x[0][1]}, {s * x[1][0], s * x[1][1]}}};
}

inline Mat add(const Mat& x, const Mat& y) {
    return {{{x[0][0] + y[0][0], x[0][1] + y[0][1]}, {x[1][0] + y[1][0], x[1][1] + y[1][1]}}};
}

struct Eig {
    double lo, hi;
    std::array<double, 2> vlo, vhi;
};

inline Eig eig(const Mat& m) {
    const double a = m[0][0];
    const double b = 0.5 * (m[0][1] + m[1][0]);
    const double c = m[1][1];
    Eig e;
    const double mid = 0.5 * (a + c);
    const double disc = std::hypot(0.5 * (a - c), b);
    e.lo = mid - disc;
    e.hi = mid + disc;
    if (b == 0.0) {
        if (a <= c) {
            e.vlo = {1.0, 0.0};
            e.vhi = {0.0, 1.0};
        } else {
            e.vlo = {0.0, 1.0};
            e.vhi = {1.0, 0.0};
        }
        return e;
    }
    const auto unit = [&](double lambda) -> std::array<double, 2> {
        // (a - lambda) v0 + b v1 = 0  =>  direction (b, lambda - a)
        const double n = std::hypot(b, lambda - a);
        return {b / n, (lambda - a) / n};
    };
    e.vlo = unit(e.lo);
    e.vhi = unit(e.hi);
    return e;
}

template <class F> inline Mat apply(const Mat& m, F fn) {
    const Eig e = eig(m);
    const double flo = fn(e.lo);
    const double fhi = fn(e.hi);
    Mat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = flo * e.vlo[i] * e.vlo[j] + fhi * e.vhi[i] * e.vhi[j];
    return sym(r);
}

inline Mat powm(const Mat& m, double p) {
    return apply(m, [p](double l) { return std::pow(l, p); });
}

/// Inverse by the adjugate formula, a route with no eigendecomposition at all.
inline Mat inv(const Mat& m) {
    const double b = 0.5 * (m[0][1] + m[1][0]);
    const double det = m[0][0] * m[1][1] - b * b;
    return make(m[1][1] / det, -b / det, m[0][0] / det);
}

inline Mat geometric(const Mat& a, const Mat& b, double t) {
    const Mat ah = powm(a, 0.5);
    const Mat aih = powm(a, -0.5);
    const Mat inner = sym(mul(mul(aih, b), aih));
    return sym(mul(mul(ah, powm(inner, t)), ah));
}

inline Mat harmonic(const Mat& a, const Mat& b, double t) {
    return inv(sym(add(scale(1.0 - t, inv(a)), scale(t, inv(b)))));
}

inline Mat spectral(const Mat& a, const Mat& b, double t) {
    const Mat g = geometric(inv(a), b, 0.5);
    const Mat s = powm(g, t);
    return sym(mul(mul(s, a), s));
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(x[i][j] - y[i][j]));
    return worst;
}

} // namespace oracle2
