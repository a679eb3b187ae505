#include "sgmean/checks.hpp"

#include "sgmean/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace sgmean {

namespace {

constexpr int kMaxStoredDiscrepancies = 20; // per check and mode

void validate(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    if (cfg.falsification_trials < 0)
        throw std::invalid_argument("suite: falsification_trials must be >= 0");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("suite: tol must be positive");
    if (cfg.dims.empty()) throw std::invalid_argument("suite: dims must be nonempty");
    for (int d : cfg.dims)
        if (d < 1) throw std::invalid_argument("suite: dims must be positive");
    if (cfg.t_values.empty() || cfg.r_values.empty())
        throw std::invalid_argument("suite: t and r value sets must be nonempty");
    for (double t : cfg.t_values)
        if (!(t >= 0.0 && t <= 1.0))
            throw std::invalid_argument("suite: t values must lie in [0, 1]");
    for (double r : cfg.r_values)
        if (!(r >= 0.0 && r <= 1.0))
            throw std::invalid_argument("suite: r values must lie in [0, 1]");
}

// Standard sweep: dims and t cycle so every combination is exercised, the
// rest is drawn from the per-trial stream.
TrialParams draw_params(Rng& rng, const SuiteConfig& cfg, int trial) {
    TrialParams p;
    p.dim = cfg.dims[static_cast<size_t>(trial) % cfg.dims.size()];
    p.t = cfg.t_values[(static_cast<size_t>(trial) / cfg.dims.size()) % cfg.t_values.size()];
    p.r = cfg.r_values[static_cast<size_t>(rng.below(static_cast<int>(cfg.r_values.size())))];
    p.lo = rng.uniform(0.5, 2.0);
    p.ratio = std::exp(rng.uniform(std::log(1.5), std::log(12.0)));
    p.seed = rng.next_u64();
    return p;
}

// Falsification sweep for the advisory checks: continuous t and r, wider
// spectrum ratios.
TrialParams draw_wide_params(Rng& rng, const SuiteConfig& cfg, int trial) {
    TrialParams p;
    p.dim = cfg.dims[static_cast<size_t>(trial) % cfg.dims.size()];
    p.t = rng.uniform(0.02, 0.98);
    p.r = rng.uniform(0.02, 0.98);
    p.lo = rng.uniform(0.1, 3.0);
    p.ratio = std::exp(rng.uniform(std::log(1.05), std::log(40.0)));
    p.seed = rng.next_u64();
    return p;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    if (n == 0) return 0.0;
    return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    validate(cfg);

    SuiteReport rep;
    rep.config = cfg;

    const std::vector<CheckId> ids = all_checks();
    for (size_t idx = 0; idx < ids.size(); ++idx) {
        const CheckId id = ids[idx];

        CheckSummary summary;
        summary.id = id;
        summary.advisory = is_advisory(id);
        std::vector<double> rel_margins;
        double worst = std::numeric_limits<double>::infinity();
        std::map<std::string, int> stored; // per-mode cap

        const auto absorb = [&](const CheckResult& r, const char* mode) {
            const double rel = r.margin / r.scale;
            rel_margins.push_back(rel);
            summary.trials += 1;
            if (rel < worst) {
                worst = rel;
                summary.worst_instance = r.instance;
            }
            if (!r.pass) {
                summary.failures += 1;
                if (summary.advisory) {
                    rep.advisory_violations += 1;
                    if (stored[mode] < kMaxStoredDiscrepancies) {
                        stored[mode] += 1;
                        rep.discrepancies.push_back({id, mode, r.instance, rel});
                    }
                } else {
                    rep.enforced_failures += 1;
                }
            }
        };

        if (is_operator_check(id)) {
            const Rng check_stream = Rng(cfg.seed).split(idx + 1);
            for (int trial = 0; trial < cfg.trials; ++trial) {
                Rng trial_rng = check_stream.split(static_cast<uint64_t>(trial) + 1);
                absorb(run_check(id, draw_params(trial_rng, cfg, trial), cfg.tol), "grid");
            }
            if (summary.advisory) {
                const Rng wide_stream = Rng(cfg.seed).split(0x1000 + idx);
                for (int trial = 0; trial < cfg.falsification_trials; ++trial) {
                    Rng trial_rng = wide_stream.split(static_cast<uint64_t>(trial) + 1);
                    absorb(run_check(id, draw_wide_params(trial_rng, cfg, trial), cfg.tol),
                           "wide");
                }
            }
        } else {
            for (const CheckResult& r : run_scalar_check(id, cfg.tol)) absorb(r, "grid");
        }

        summary.min_rel_margin = rel_margins.empty() ? 0.0 : worst;
        summary.median_rel_margin = median_of(std::move(rel_margins));
        rep.checks.push_back(std::move(summary));
    }
    return rep;
}

} // namespace sgmean
