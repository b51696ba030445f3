#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace focp_cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string problem = "tip";   // builtin name, ignored when problem_file is set
    std::string problem_file;      // path to a key-value problem description
    std::vector<double> alphas = {0.75};
    std::vector<long> n_values = {64};
    std::string mode = "solve";    // solve | convergence | alpha-sweep
    std::string method = "direct"; // direct | sweep
    std::string output;            // resolved to a concrete path when empty
    std::string format = "csv";    // csv | json
    bool compat_costate_average = false;
    double sweep_tol = 1e-10;
    long sweep_max_iter = 10000;

    // Default file name in FOCP_OUTPUT_DIR (or the working directory):
    // <problem>_<mode>.<format>.
    std::string resolved_output() const;
    std::string problem_label() const;
};

struct ParseResult {
    bool help = false;  // --help was handled; config is not meaningful
    RunConfig config;
};

// Throws UsageError for unknown or malformed flags and ValidationError for
// out-of-range values or mode/flag combinations that make no sense.
ParseResult parse_args(int argc, const char* const* argv);

}  // namespace focp_cli
