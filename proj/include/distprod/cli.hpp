#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "distprod/limits.hpp"
#include "distprod/products.hpp"
#include "distprod/scanner.hpp"

namespace distprod::cli {

enum class Subcommand { Constants, Sequence, Limit, Scan, Legacy, Suite };

/// Fully validated run configuration, one field per flag. The textual
/// expression fields keep their source form so a config round-trips.
struct RunConfig {
    Subcommand sub = Subcommand::Constants;

    int m = 2;
    std::string mkind = "oned";  // oned | product | radial
    int d = 1;

    std::string S = "delta";
    std::string T = "delta";
    std::string psi = "bump";
    std::string kind = "sym";  // sym | direct | exchange | legacy

    double alpha = 1.0;
    double beta = 1.0;
    std::string ratio;  // scan range "lo:hi:step"
    std::string ngrid = "2:2:14";

    double tau_slope = 0.1;
    double tau_cauchy = 1e-4;
    int window = 5;
    double rel_tol = 1e-10;

    std::string format = "csv";  // sequence output: csv | json
    std::string output;          // path; empty = stdout
    int workers = 1;

    bool operator==(const RunConfig&) const = default;

    /// key=value serialization, one flag per line.
    std::string to_config_text() const;
};

/// Parses argv into a validated config. Throws UsageError on any invalid
/// flag, value, or combination (maps to exit code 2).
RunConfig parse_args(const std::vector<std::string>& argv);

/// Parses the key=value config-file format produced by to_config_text.
RunConfig parse_config_text(const std::string& text, Subcommand sub);

/// Builders used by run() and by tests.
products::ProductQuery build_query(const RunConfig& cfg);
limits::NGrid build_grid(const RunConfig& cfg);
limits::ToleranceSet build_tolerances(const RunConfig& cfg);

/// Executes the configured subcommand. Returns the process exit code:
/// 0 success, 1 numerical failure (JSON error object on out).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse + run, mapping UsageError to exit code 2.
int main_impl(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace distprod::cli
