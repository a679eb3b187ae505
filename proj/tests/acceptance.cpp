// Acceptance suite: each criterion prints one PASS/FAIL line; the exit code
// is the number of failed criteria. Runs the full default verification
// configuration, so expect a few seconds end to end.

#include "sgmean/checks.hpp"
#include "sgmean/constants.hpp"
#include "sgmean/instance_gen.hpp"
#include "sgmean/matrix_function.hpp"
#include "sgmean/means.hpp"
#include "sgmean/report.hpp"
#include "sgmean/tables.hpp"

#include "oracle2x2.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace sgmean;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

// 1. Golden numerics within their printed tolerances.
void criterion_golden() {
    const double d1 = kappa_order_gap(10.0, 0.1);
    const double d2 = kappa_order_gap(10.0, 0.9);
    const double gap = 2.0 * std::pow(10.0, 0.25) / (std::sqrt(10.0) + 1.0) -
                       kantorovich_lower(10.0, 0.1);
    const bool ok = std::abs(d1 - 0.10068) <= 1e-4 && std::abs(d2 - (-10.011)) <= 1e-2 &&
                    std::abs(gap - (-0.0171811)) <= 1e-6;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "gap(10,0.1)=%.6f gap(10,0.9)=%.4f minK-L=%.8f",
                  d1, d2, gap);
    report(1, "golden reference numerics", ok, detail);
}

// 2. Closed forms of K and L within 1e-12 relative on the 60-point grid.
void criterion_closed_forms() {
    double worst = 0.0;
    const auto rel = [&](double a, double b) {
        return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
    };
    for (double x : log_x_grid()) {
        const double sx = std::sqrt(x);
        worst = std::max(worst, rel(kantorovich(x, 0.5), 2.0 * std::pow(x, 0.25) / (sx + 1.0)));
        const double classical = (x + 1.0) * (x + 1.0) / (4.0 * x);
        worst = std::max(worst, rel(kantorovich(x, 2.0), classical));
        worst = std::max(worst, rel(kantorovich(x, -1.0), classical));
        worst = std::max(worst,
                         rel(kantorovich_lower(x, 0.5), std::pow(x, 0.25) * (sx + 1.0) / (x + 1.0)));
        const double l2 = (x * x + 1.0) * (x * x + 1.0) / (x * (x + 1.0) * (x + 1.0));
        worst = std::max(worst, rel(kantorovich_lower(x, 2.0), l2));
        worst = std::max(worst, rel(kantorovich_lower(x, -1.0), l2));
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst rel err %.3e", worst);
    report(2, "closed-form identities on the x-grid", worst <= 1e-12, detail);
}

// 3. Scalar inequality grids with zero violations beyond -1e-12.
void criterion_scalar_grids() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    long points = 0;
    std::string offender;
    for (CheckId id : {CheckId::FractionSplit, CheckId::LVsK, CheckId::KSquareOrder,
                       CheckId::KMonotone, CheckId::EtaLeGamma, CheckId::HolderStep}) {
        for (const CheckResult& r : run_scalar_check(id, 1e-12)) {
            ++points;
            if (!r.pass) {
                ok = false;
                if (offender.empty())
                    offender = std::string(check_name(id)) + " at " + r.instance;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char detail[160];
    std::snprintf(detail, sizeof(detail), "%ld grid points in %.2fs%s%s", points, secs,
                  offender.empty() ? "" : "; first violation: ", offender.c_str());
    report(3, "scalar inequality grids (both regimes)", ok && secs < 1.0, detail);
}

// 4. Operator suite: default configuration, zero enforced failures.
void criterion_operator_suite() {
    const auto start = std::chrono::steady_clock::now();
    SuiteConfig cfg; // 200 trials, dims {2,3,5,8}, t/r grids, tol 1e-8
    cfg.seed = 42;
    const SuiteReport rep = run_suite(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool all_have_trials = true;
    for (const CheckSummary& c : rep.checks) all_have_trials &= c.trials > 0;

    const bool ok = rep.enforced_failures == 0 && all_have_trials && secs < 60.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "enforced failures %ld, advisory violations %ld, %.2fs",
                  rep.enforced_failures, rep.advisory_violations, secs);
    report(4, "operator inequality suite (200 trials/check)", ok, detail);
}

// 5. Fixed-point characterization of the spectral mean on 1000 pairs.
void criterion_fixed_point() {
    Rng rng(0xACCE9);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + rng.below(7);
        const double lo = rng.uniform(0.2, 2.0);
        const double hi = lo * rng.uniform(1.2, 15.0);
        const SymMatrix a =
            random_pd(rng, dim, SpectrumBounds(lo, hi), SpectrumMode::PinnedEndpoints);
        const SymMatrix b =
            random_pd(rng, dim, SpectrumBounds(lo, hi), SpectrumMode::PinnedEndpoints);
        const double t = rng.uniform(0.0, 1.0);
        const double resid = spectral_residual(a, b, Weight(t)) / (1.0 + b.max_abs());
        worst = std::max(worst, resid);
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst scaled residual %.3e", worst);
    report(5, "spectral mean fixed-point residual on 1000 pairs", worst <= 1e-9, detail);
}

// 6. Oracle equivalence: scalar collapse, commuting collapse, and ten fixed
// non-commuting 2x2 pairs against the closed-form oracle.
void criterion_oracle() {
    bool ok = true;
    Rng rng(0x0AC1E);
    // dim-1 and commuting pairs: both means equal a^{1-t} b^t.
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const double a = rng.uniform(0.2, 5.0);
        const double b = rng.uniform(0.2, 5.0);
        const double t = rng.uniform(0.0, 1.0);
        const double want = std::pow(a, 1.0 - t) * std::pow(b, t);
        const std::vector<double> av{a}, bv{b};
        const double g1 =
            geometric_mean(SymMatrix::diagonal(av), SymMatrix::diagonal(bv), Weight(t))(0, 0);
        const double s1 = spectral_geometric_mean(SymMatrix::diagonal(av),
                                                  SymMatrix::diagonal(bv), Weight(t))(0, 0);
        ok &= std::abs(g1 - want) <= 1e-12 * (1.0 + want);
        ok &= std::abs(s1 - want) <= 1e-12 * (1.0 + want);

        const std::vector<double> a2{a, 2.0 * a}, b2{b, 0.5 * b};
        const SymMatrix da = SymMatrix::diagonal(a2);
        const SymMatrix db = SymMatrix::diagonal(b2);
        const SymMatrix g2 = geometric_mean(da, db, Weight(t));
        const SymMatrix s2 = spectral_geometric_mean(da, db, Weight(t));
        for (int i = 0; i < 2; ++i) {
            const double w = std::pow(da(i, i), 1.0 - t) * std::pow(db(i, i), t);
            ok &= std::abs(g2(i, i) - w) <= 1e-12 * (1.0 + w);
            ok &= std::abs(s2(i, i) - w) <= 1e-12 * (1.0 + w);
        }
    }

    // Ten fixed non-commuting pairs vs the independent 2x2 oracle.
    const double ts[10] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.35};
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const double base = 1.0 + 0.25 * k;
        const oracle2::Mat oa = oracle2::make(base + 1.0, 0.3 + 0.05 * k, base);
        const oracle2::Mat ob = oracle2::make(2.0 + 0.1 * k, -0.2, 0.5 + 0.15 * k);
        const SymMatrix a{{oa[0][0], oa[0][1]}, {oa[1][0], oa[1][1]}};
        const SymMatrix b{{ob[0][0], ob[0][1]}, {ob[1][0], ob[1][1]}};

        const oracle2::Mat og = oracle2::geometric(oa, ob, ts[k]);
        const oracle2::Mat os = oracle2::spectral(oa, ob, ts[k]);
        const SymMatrix g = geometric_mean(a, b, Weight(ts[k]));
        const SymMatrix s = spectral_geometric_mean(a, b, Weight(ts[k]));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                worst = std::max(worst, std::abs(g(i, j) - og[i][j]));
                worst = std::max(worst, std::abs(s(i, j) - os[i][j]));
            }
    }
    ok &= worst <= 1e-10;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst 2x2 oracle deviation %.3e", worst);
    report(6, "oracle equivalence (scalar, commuting, 2x2 closed form)", ok, detail);
}

// 7. Derivative vs central differences, with the stated sign pattern.
void criterion_derivative() {
    bool ok = true;
    double worst = 0.0;
    for (double x : log_x_grid()) {
        for (double t : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.5, 2.0, -1.0}) {
            const double h = 1e-5 * x;
            const double fd = (kantorovich(x + h, t) - kantorovich(x - h, t)) / (2.0 * h);
            const double dx = kantorovich_dx(x, t);
            worst = std::max(worst, std::abs(dx - fd) / std::max(std::abs(fd), 1e-12));
            const bool unit = t > 0.0 && t < 1.0;
            const double expected_sign = (x > 1.0 ? -1.0 : 1.0) * (unit ? 1.0 : -1.0);
            ok &= dx * expected_sign > 0.0;
        }
    }
    ok &= worst <= 1e-6;
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst rel dev from central diff %.3e", worst);
    report(7, "dK/dx against finite differences and sign pattern", ok, detail);
}

// 8. The kappa comparison table contains both strict signs.
void criterion_kappa_signs() {
    std::ostringstream out;
    write_kappa_csv(out, KappaGrid{});
    const std::string csv = out.str();
    bool plus = false, minus = false;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.size() >= 2 && line.compare(line.size() - 2, 2, ",1") == 0) plus = true;
        if (line.size() >= 3 && line.compare(line.size() - 3, 3, ",-1") == 0) minus = true;
    }
    report(8, "kappa1 vs kappa2 comparison shows both signs", plus && minus);
}

// 9. Byte-identical reports for identical seeds.
void criterion_determinism() {
    SuiteConfig cfg;
    cfg.seed = 42;
    const std::string a = report_to_json(run_suite(cfg));
    const std::string b = report_to_json(run_suite(cfg));
    report(9, "verify --seed 42 twice gives byte-identical JSON", a == b);
}

} // namespace

int main() {
    criterion_golden();
    criterion_closed_forms();
    criterion_scalar_grids();
    criterion_operator_suite();
    criterion_fixed_point();
    criterion_oracle();
    criterion_derivative();
    criterion_kappa_signs();
    criterion_determinism();
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures;
}
