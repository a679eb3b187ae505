#pragma once

#include "sgmean/checks.hpp"

#include <iosfwd>
#include <string>

namespace sgmean {

/// Serialize a suite report as JSON. Keys are emitted sorted and floats in
/// shortest round-trip form, so identical reports give identical bytes.
/// Schema (stable across versions):
///   config:        {seed, trials, dims, t_values, r_values, tol, falsification_trials}
///   checks:        [{id, description, advisory, trials, failures,
///                    min_rel_margin, median_rel_margin, worst_instance}]
///   discrepancies: [{id, mode, instance, rel_margin}]   (advisory violations)
///   summary:       {enforced_failures, advisory_violations, pass}
std::string report_to_json(const SuiteReport& rep);

/// Per-check min-margin table plus the failure totals, for terminal use.
void print_report_table(std::ostream& os, const SuiteReport& rep);

} // namespace sgmean
