#include "sgmean/eigen.hpp"

#include "sgmean/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sgmean {

SymMatrix EigenDecomp::reassemble() const {
    const int n = vectors.rows();
    Matrix scaled = vectors; // columns scaled by eigenvalues
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled(i, j) *= values[static_cast<size_t>(j)];
    return SymMatrix::symmetrized(scaled * vectors.transposed());
}

JacobiOptions& active_jacobi_options() {
    thread_local JacobiOptions opts{};
    return opts;
}

EigenDecomp eigh(const SymMatrix& input) { return eigh(input, active_jacobi_options()); }

EigenDecomp eigh(const SymMatrix& input, const JacobiOptions& opts) {
    const int n = input.dim();
    Matrix a = input.mat();
    Matrix v = Matrix::identity(n);

    const double scale = 1.0 + input.max_abs();
    const double threshold = opts.rel_threshold * scale;

    if (n > 1) {
        double prev_off2 = std::numeric_limits<double>::infinity();
        int sweep = 0;
        for (;; ++sweep) {
            double off_max = 0.0;
            double off2 = 0.0;
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) {
                    const double apq = std::abs(a(p, q));
                    off_max = std::max(off_max, apq);
                    off2 += apq * apq;
                }
            if (off_max <= threshold) break;
            // Rounding floor: rotations no longer reduce the off-diagonal mass.
            if (off2 >= prev_off2) break;
            prev_off2 = off2;
            if (sweep >= opts.max_sweeps)
                throw NumericError("eigh: no convergence after " +
                                   std::to_string(opts.max_sweeps) + " sweeps (" +
                                   matrix_digest(input) + ")");

            const double pivot_floor = 0.01 * threshold;
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    if (std::abs(apq) <= pivot_floor || apq == 0.0) continue;
                    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                    double t;
                    if (std::abs(tau) > 1e154) {
                        t = 0.5 / tau;
                    } else {
                        t = ((tau >= 0.0) ? 1.0 : -1.0) /
                            (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;

                    const double app = a(p, p);
                    const double aqq = a(q, q);
                    a(p, p) = app - t * apq;
                    a(q, q) = aqq + t * apq;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    for (int i = 0; i < n; ++i) {
                        if (i == p || i == q) continue;
                        const double aip = a(i, p);
                        const double aiq = a(i, q);
                        a(i, p) = c * aip - s * aiq;
                        a(p, i) = a(i, p);
                        a(i, q) = s * aip + c * aiq;
                        a(q, i) = a(i, q);
                    }
                    for (int i = 0; i < n; ++i) {
                        const double vip = v(i, p);
                        const double viq = v(i, q);
                        v(i, p) = c * vip - s * viq;
                        v(i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }

    // Sort ascending; stable so equal eigenvalues keep their sweep order.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i) < a(j, j); });

    EigenDecomp out;
    out.values.resize(static_cast<size_t>(n));
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<size_t>(j)];
        out.values[static_cast<size_t>(j)] = a(src, src);
        // Sign convention: largest-magnitude entry positive (first on ties).
        int lead = 0;
        double lead_abs = -1.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(v(i, src));
            if (m > lead_abs) {
                lead_abs = m;
                lead = i;
            }
        }
        const double sign = (v(lead, src) < 0.0) ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
    }
    return out;
}

double min_eigenvalue(const SymMatrix& a) { return eigh(a).values.front(); }

double max_eigenvalue(const SymMatrix& a) { return eigh(a).values.back(); }

} // namespace sgmean
