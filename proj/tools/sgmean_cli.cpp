// Command-line front end: run the inequality verification suite, tabulate
// the scalar constants over grids, spot-check reference values, and compare
// the two power-order constants.
//
// Exit codes: 0 success, 1 check failures, 2 usage error, 3 numeric failure.

#include "sgmean/checks.hpp"
#include "sgmean/errors.hpp"
#include "sgmean/report.hpp"
#include "sgmean/tables.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitNumeric;
    }
    out << contents;
    return out.good() ? kExitOk : kExitNumeric;
}

int run_verify(const sgmean::SuiteConfig& cfg, const std::string& output,
               const std::string& format) {
    const sgmean::SuiteReport report = sgmean::run_suite(cfg);
    const std::string json = sgmean::report_to_json(report);
    if (!output.empty()) {
        if (int rc = write_file(output, json); rc != kExitOk) return rc;
    }
    if (format == "json")
        std::cout << json;
    else
        sgmean::print_report_table(std::cout, report);
    return report.enforced_failures == 0 ? kExitOk : kExitCheckFailure;
}

template <typename Grid, typename Writer>
int run_csv(const Grid& grid, Writer writer, const std::string& output) {
    std::ostringstream buf;
    writer(buf, grid);
    if (output.empty()) {
        std::cout << buf.str();
        return kExitOk;
    }
    return write_file(output, buf.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix mean inequality toolkit"};
    app.require_subcommand(1);

    // verify
    sgmean::SuiteConfig cfg;
    std::string verify_output = "sgmean_report.json";
    std::string verify_format = "human";
    auto* verify = app.add_subcommand("verify", "run the full inequality suite");
    verify->add_option("--seed", cfg.seed, "root seed");
    verify->add_option("--trials", cfg.trials, "trials per operator check");
    verify->add_option("--dims", cfg.dims, "matrix dimensions")->delimiter(',');
    verify->add_option("--t-values", cfg.t_values, "weights t")->delimiter(',');
    verify->add_option("--r-values", cfg.r_values, "exponents r")->delimiter(',');
    verify->add_option("--tol", cfg.tol, "relative tolerance");
    verify->add_option("--falsification-trials", cfg.falsification_trials,
                       "wide-sweep trials for advisory checks");
    verify->add_option("--output", verify_output,
                       "JSON report path; empty string disables the file");
    verify->add_option("--format", verify_format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));

    // constants
    sgmean::ConstantsGrid cgrid;
    std::string constants_output;
    auto* constants = app.add_subcommand("constants", "tabulate K, L, delta, dK/dx as CSV");
    constants->add_option("--x-min", cgrid.x_min, "smallest x (log-spaced grid)");
    constants->add_option("--x-max", cgrid.x_max, "largest x");
    constants->add_option("--x-steps", cgrid.x_steps, "number of x points");
    constants->add_option("--t-min", cgrid.t_min, "smallest t");
    constants->add_option("--t-max", cgrid.t_max, "largest t");
    constants->add_option("--t-steps", cgrid.t_steps, "number of t points");
    constants->add_option("--output", constants_output, "CSV path (default stdout)");

    // repro
    auto* repro = app.add_subcommand("repro", "recompute reference constants");

    // compare-kappa
    sgmean::KappaGrid kgrid;
    std::string kappa_output;
    auto* kappa = app.add_subcommand("compare-kappa", "tabulate kappa1 vs kappa2 as CSV");
    kappa->add_option("--x-min", kgrid.x_min, "smallest ratio M/m (>= 1)");
    kappa->add_option("--x-max", kgrid.x_max, "largest ratio");
    kappa->add_option("--x-steps", kgrid.x_steps, "number of ratio points");
    kappa->add_option("--t-min", kgrid.t_min, "smallest t");
    kappa->add_option("--t-max", kgrid.t_max, "largest t");
    kappa->add_option("--t-steps", kgrid.t_steps, "number of t points");
    kappa->add_option("--r-min", kgrid.r_min, "smallest r");
    kappa->add_option("--r-max", kgrid.r_max, "largest r");
    kappa->add_option("--r-steps", kgrid.r_steps, "number of r points");
    kappa->add_option("--m", kgrid.m, "spectrum floor m");
    kappa->add_option("--output", kappa_output, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(cfg, verify_output, verify_format);
        if (constants->parsed())
            return run_csv(cgrid, [](std::ostream& os, const sgmean::ConstantsGrid& g) {
                sgmean::write_constants_csv(os, g);
            }, constants_output);
        if (repro->parsed())
            return sgmean::print_repro_table(std::cout) ? kExitOk : kExitCheckFailure;
        if (kappa->parsed())
            return run_csv(kgrid, [](std::ostream& os, const sgmean::KappaGrid& g) {
                sgmean::write_kappa_csv(os, g);
            }, kappa_output);
    } catch (const sgmean::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
