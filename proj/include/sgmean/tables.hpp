#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgmean {

/// Shortest decimal form that round-trips to the same double (via
/// std::to_chars). This is the float format of every CSV cell.
std::string format_double(double v);

/// Grid for the constants table: x log-spaced, t uniform. Rows come out in
/// lexicographic (x, then t) order with columns
///   x,t,K,L,K_minus_L,delta,dKdx
/// Singular inputs (x near 1, t near 0 or 1) produce the analytic limits
/// (K = 1, dK/dx = 0), never NaN. delta is the kappa-ordering discriminant,
/// tabulated by its formula on the whole grid even though its meaningful
/// domain is x > 1.
struct ConstantsGrid {
    double x_min = 0.05;
    double x_max = 20.0;
    int x_steps = 60;
    double t_min = 0.0;
    double t_max = 1.0;
    int t_steps = 41;
};

void write_constants_csv(std::ostream& os, const ConstantsGrid& grid);

/// Grid for the kappa1/kappa2 comparison, parameterized by the spectrum
/// ratio x = M/m (log-spaced), t and r uniform. Columns
///   m,M,r,t,kappa1,kappa2,sign
/// where sign is -1/0/+1 of kappa1 - kappa2 with a 1e-12 relative dead band.
/// The default grid spans t = 0.1 .. 0.9 at ratio 10, where both signs occur.
struct KappaGrid {
    double x_min = 10.0;
    double x_max = 10.0;
    int x_steps = 1;
    double t_min = 0.1;
    double t_max = 0.9;
    int t_steps = 9;
    double r_min = 0.5;
    double r_max = 0.5;
    int r_steps = 1;
    double m = 1.0;
};

void write_kappa_csv(std::ostream& os, const KappaGrid& grid);

/// One spot-check row: a recomputed constant against its reference value.
struct ReproRow {
    std::string name;
    double computed;
    double reference;
    double tolerance;

    bool ok() const;
};

std::vector<ReproRow> repro_rows();

/// Print the spot-check table; true iff every row is within tolerance.
bool print_repro_table(std::ostream& os);

} // namespace sgmean
