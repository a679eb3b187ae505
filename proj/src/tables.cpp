#include "sgmean/tables.hpp"

#include "sgmean/constants.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace sgmean {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

constexpr double kBand = 1e-7;

std::vector<double> log_spaced(double lo, double hi, int steps, const char* what) {
    if (!(lo > 0.0) || !(lo <= hi) || steps < 1)
        throw std::invalid_argument(std::string(what) + ": need 0 < min <= max and steps >= 1");
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(steps));
    if (steps == 1) {
        xs.push_back(lo);
        return xs;
    }
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < steps; ++i) xs.push_back(std::exp(llo + (lhi - llo) * i / (steps - 1)));
    return xs;
}

std::vector<double> lin_spaced(double lo, double hi, int steps, const char* what) {
    if (!(lo <= hi) || steps < 1)
        throw std::invalid_argument(std::string(what) + ": need min <= max and steps >= 1");
    std::vector<double> ts;
    ts.reserve(static_cast<size_t>(steps));
    if (steps == 1) {
        ts.push_back(lo);
        return ts;
    }
    for (int i = 0; i < steps; ++i) ts.push_back(lo + (hi - lo) * i / (steps - 1));
    return ts;
}

bool singular(double x, double t) {
    return std::abs(x - 1.0) <= kBand || std::abs(t) <= kBand || std::abs(t - 1.0) <= kBand;
}

} // namespace

void write_constants_csv(std::ostream& os, const ConstantsGrid& grid) {
    const auto xs = log_spaced(grid.x_min, grid.x_max, grid.x_steps, "constants grid x");
    const auto ts = lin_spaced(grid.t_min, grid.t_max, grid.t_steps, "constants grid t");

    os << "x,t,K,L,K_minus_L,delta,dKdx\n";
    for (double x : xs) {
        for (double t : ts) {
            const double k = kantorovich(x, t);
            const double l = kantorovich_lower(x, t);
            const double d = detail::kappa_order_gap_raw(x, t);
            // dK/dx tends to 0 at the removable singularities (extremum at
            // x = 1; K constant in x at t = 0, 1).
            const double dk = singular(x, t) ? 0.0 : kantorovich_dx(x, t);
            os << format_double(x) << ',' << format_double(t) << ',' << format_double(k)
               << ',' << format_double(l) << ',' << format_double(k - l) << ','
               << format_double(d) << ',' << format_double(dk) << '\n';
        }
    }
}

void write_kappa_csv(std::ostream& os, const KappaGrid& grid) {
    if (!(grid.m > 0.0)) throw std::invalid_argument("kappa grid: m must be positive");
    const auto xs = log_spaced(grid.x_min, grid.x_max, grid.x_steps, "kappa grid x");
    const auto ts = lin_spaced(grid.t_min, grid.t_max, grid.t_steps, "kappa grid t");
    const auto rs = lin_spaced(grid.r_min, grid.r_max, grid.r_steps, "kappa grid r");
    for (double x : xs)
        if (!(x >= 1.0))
            throw std::invalid_argument("kappa grid: ratios x = M/m must be >= 1");

    os << "m,M,r,t,kappa1,kappa2,sign\n";
    for (double x : xs) {
        const double M = grid.m * x;
        for (double r : rs) {
            for (double t : ts) {
                const double k1 = kappa1(grid.m, M, r, t);
                const double k2 = kappa2(grid.m, M, r, t);
                const double dead_band = 1e-12 * (1.0 + std::max(std::abs(k1), std::abs(k2)));
                const int sign = (k1 - k2 > dead_band) ? 1 : (k2 - k1 > dead_band) ? -1 : 0;
                os << format_double(grid.m) << ',' << format_double(M) << ','
                   << format_double(r) << ',' << format_double(t) << ','
                   << format_double(k1) << ',' << format_double(k2) << ',' << sign << '\n';
            }
        }
    }
}

bool ReproRow::ok() const { return std::abs(computed - reference) <= tolerance; }

std::vector<ReproRow> repro_rows() {
    const double min_k_gap = 2.0 * std::pow(10.0, 0.25) / (std::sqrt(10.0) + 1.0) -
                             kantorovich_lower(10.0, 0.1);
    return {
        {"kappa_order_gap(10, 0.1)", kappa_order_gap(10.0, 0.1), 0.10068, 1e-4},
        {"kappa_order_gap(10, 0.9)", kappa_order_gap(10.0, 0.9), -10.011, 1e-2},
        {"min_t K(10,t) - L(10,0.1)", min_k_gap, -0.0171811, 1e-6},
    };
}

bool print_repro_table(std::ostream& os) {
    bool all_ok = true;
    os << std::left << std::setw(28) << "quantity" << std::right << std::setw(16)
       << "computed" << std::setw(12) << "reference" << std::setw(12) << "|diff|"
       << std::setw(10) << "tol" << "  status\n";
    os << std::string(84, '-') << "\n";
    for (const ReproRow& row : repro_rows()) {
        const double diff = std::abs(row.computed - row.reference);
        all_ok = all_ok && row.ok();
        os << std::left << std::setw(28) << row.name << std::right << std::setw(16)
           << std::setprecision(8) << std::fixed << row.computed << std::setw(12)
           << std::setprecision(5) << row.reference << std::setw(12) << std::scientific
           << std::setprecision(2) << diff << std::setw(10) << row.tolerance
           << std::defaultfloat << (row.ok() ? "  ok" : "  MISMATCH") << "\n";
    }
    return all_ok;
}

} // namespace sgmean
