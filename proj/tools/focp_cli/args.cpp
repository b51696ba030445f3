#include "args.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>

#include <CLI11.hpp>

namespace focp_cli {

std::string RunConfig::problem_label() const {
    if (!problem_file.empty()) return std::filesystem::path(problem_file).stem().string();
    return problem;
}

std::string RunConfig::resolved_output() const {
    if (!output.empty()) return output;
    const char* dir = std::getenv("FOCP_OUTPUT_DIR");
    std::string mode_label = mode;
    for (char& c : mode_label)
        if (c == '-') c = '_';
    const std::string file = problem_label() + "_" + mode_label + "." + format;
    return (std::filesystem::path(dir != nullptr ? dir : ".") / file).string();
}

ParseResult parse_args(int argc, const char* const* argv) {
    ParseResult result;
    RunConfig& cfg = result.config;

    CLI::App app{"focp: fractional-order linear-quadratic optimal control solver"};
    app.get_formatter()->column_width(34);

    auto* problem_opt =
        app.add_option("--problem", cfg.problem, "Builtin problem: tip or tvp")
            ->check(CLI::IsMember({"tip", "tvp"}));
    auto* file_opt = app.add_option("--problem-file", cfg.problem_file,
                                    "Path to a key-value problem description");
    problem_opt->excludes(file_opt);
    file_opt->excludes(problem_opt);

    app.add_option("--alpha", cfg.alphas, "Fractional order(s), comma separated")
        ->delimiter(',');
    app.add_option("--n", cfg.n_values, "Division count(s), comma separated")->delimiter(',');
    app.add_option("--mode", cfg.mode, "solve, convergence, or alpha-sweep")
        ->check(CLI::IsMember({"solve", "convergence", "alpha-sweep"}));
    app.add_option("--method", cfg.method, "Linear solver: direct or sweep")
        ->check(CLI::IsMember({"direct", "sweep"}));
    app.add_option("--output", cfg.output, "Output path (default: FOCP_OUTPUT_DIR)");
    app.add_option("--format", cfg.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--compat-costate-average", cfg.compat_costate_average,
                 "Use the lagged costate average in the adjoint rows");
    app.add_option("--sweep-tol", cfg.sweep_tol, "Sweep stopping tolerance");
    app.add_option("--sweep-max-iter", cfg.sweep_max_iter, "Sweep iteration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        result.help = true;
        return result;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (double alpha : cfg.alphas)
        if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
            throw ValidationError("--alpha must lie in (0, 1], got " + std::to_string(alpha));
    if (cfg.alphas.empty()) throw ValidationError("--alpha needs at least one value");
    for (long n : cfg.n_values)
        if (n < 1) throw ValidationError("--n must be at least 1, got " + std::to_string(n));
    if (cfg.n_values.empty()) throw ValidationError("--n needs at least one value");

    if (cfg.mode == "solve") {
        if (cfg.alphas.size() != 1)
            throw ValidationError("--mode solve takes a single --alpha");
        if (cfg.n_values.size() != 1)
            throw ValidationError("--mode solve takes a single --n");
    } else if (cfg.mode == "alpha-sweep") {
        if (cfg.n_values.size() != 1)
            throw ValidationError("--mode alpha-sweep takes a single --n");
    } else {  // convergence
        std::set<long> seen;
        for (long n : cfg.n_values) {
            if (!seen.insert(n).second)
                throw ValidationError("--mode convergence needs distinct --n values");
        }
        for (std::size_t i = 1; i < cfg.n_values.size(); ++i)
            if (cfg.n_values[i] <= cfg.n_values[i - 1])
                throw ValidationError("--mode convergence needs increasing --n values");
    }

    if (!std::isfinite(cfg.sweep_tol) || cfg.sweep_tol <= 0.0)
        throw ValidationError("--sweep-tol must be positive");
    if (cfg.sweep_max_iter < 1) throw ValidationError("--sweep-max-iter must be at least 1");

    return result;
}

}  // namespace focp_cli
