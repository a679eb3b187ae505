#include "sgmean/report.hpp"

#include "json.hpp"

#include <iomanip>
#include <ostream>

namespace sgmean {

std::string report_to_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["config"] = {
        {"seed", rep.config.seed},
        {"trials", rep.config.trials},
        {"dims", rep.config.dims},
        {"t_values", rep.config.t_values},
        {"r_values", rep.config.r_values},
        {"tol", rep.config.tol},
        {"falsification_trials", rep.config.falsification_trials},
    };
    j["checks"] = nlohmann::json::array();
    for (const CheckSummary& c : rep.checks) {
        j["checks"].push_back({
            {"id", check_name(c.id)},
            {"description", check_description(c.id)},
            {"advisory", c.advisory},
            {"trials", c.trials},
            {"failures", c.failures},
            {"min_rel_margin", c.min_rel_margin},
            {"median_rel_margin", c.median_rel_margin},
            {"worst_instance", c.worst_instance},
        });
    }
    j["discrepancies"] = nlohmann::json::array();
    for (const Discrepancy& d : rep.discrepancies) {
        j["discrepancies"].push_back({
            {"id", check_name(d.id)},
            {"mode", d.mode},
            {"instance", d.instance},
            {"rel_margin", d.rel_margin},
        });
    }
    j["summary"] = {
        {"enforced_failures", rep.enforced_failures},
        {"advisory_violations", rep.advisory_violations},
        {"pass", rep.enforced_failures == 0},
    };
    return j.dump(2) + "\n";
}

void print_report_table(std::ostream& os, const SuiteReport& rep) {
    os << std::left << std::setw(28) << "check" << std::right << std::setw(8) << "trials"
       << std::setw(10) << "failures" << std::setw(15) << "min margin" << std::setw(15)
       << "median" << "\n";
    os << std::string(76, '-') << "\n";
    for (const CheckSummary& c : rep.checks) {
        os << std::left << std::setw(28) << check_name(c.id) << std::right << std::setw(8)
           << c.trials << std::setw(10) << c.failures << std::setw(15) << std::scientific
           << std::setprecision(3) << c.min_rel_margin << std::setw(15)
           << c.median_rel_margin << std::defaultfloat
           << (c.advisory ? "  advisory" : "") << "\n";
    }
    os << std::string(76, '-') << "\n";
    os << "enforced failures:   " << rep.enforced_failures << "\n";
    os << "advisory violations: " << rep.advisory_violations << " ("
       << rep.discrepancies.size() << " stored)\n";
    os << (rep.enforced_failures == 0 ? "PASS" : "FAIL") << "\n";
}

} // namespace sgmean
