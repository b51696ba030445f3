#include <focp/focp.h>

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "args.hpp"

namespace {

using focp_cli::RunConfig;

struct ProblemDeleter {
    void operator()(focp_problem* p) const { focp_problem_free(p); }
};
struct TrajectoryDeleter {
    void operator()(focp_trajectory* t) const { focp_trajectory_free(t); }
};
struct StudyDeleter {
    void operator()(focp_study* s) const { focp_study_free(s); }
};

using ProblemHandle = std::unique_ptr<focp_problem, ProblemDeleter>;
using TrajectoryHandle = std::unique_ptr<focp_trajectory, TrajectoryDeleter>;
using StudyHandle = std::unique_ptr<focp_study, StudyDeleter>;

// Maps a library status to the pipeline stage named in the error text.
const char* stage_of(focp_status status) {
    switch (status) {
        case FOCP_ERROR_INVALID_ARGUMENT:
        case FOCP_ERROR_DOMAIN:
        case FOCP_ERROR_PARSE:
            return "validation";
        case FOCP_ERROR_IO:
            return "i/o";
        default:
            return "solver";
    }
}

[[noreturn]] void fail(focp_status status) {
    std::cerr << stage_of(status) << " error: " << focp_last_error() << '\n';
    std::exit(status == FOCP_ERROR_IO ? 1 : (stage_of(status) == std::string("validation") ? 2 : 1));
}

focp_solve_options make_options(const RunConfig& cfg) {
    focp_solve_options options;
    focp_solve_options_init(&options);
    options.method = cfg.method == "sweep" ? FOCP_METHOD_SWEEP : FOCP_METHOD_DIRECT;
    options.sweep_tolerance = cfg.sweep_tol;
    options.sweep_max_iterations = cfg.sweep_max_iter;
    options.compat_costate_average = cfg.compat_costate_average ? 1 : 0;
    return options;
}

}  // namespace

int main(int argc, char** argv) {
    focp_cli::ParseResult parsed;
    try {
        parsed = focp_cli::parse_args(argc, argv);
    } catch (const focp_cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        std::cerr << "run with --help for the flag list\n";
        return 2;
    } catch (const focp_cli::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    }
    if (parsed.help) return 0;
    const RunConfig& cfg = parsed.config;

    ProblemHandle problem;
    {
        focp_problem* raw = nullptr;
        const focp_status status =
            cfg.problem_file.empty() ? focp_problem_builtin(cfg.problem.c_str(), &raw)
                                     : focp_problem_load(cfg.problem_file.c_str(), &raw);
        if (status != FOCP_OK) fail(status);
        problem.reset(raw);
    }

    const focp_solve_options options = make_options(cfg);
    const focp_format format = cfg.format == "json" ? FOCP_FORMAT_JSON : FOCP_FORMAT_CSV;
    const std::string output = cfg.resolved_output();

    if (cfg.mode == "solve") {
        focp_trajectory* raw = nullptr;
        focp_status status =
            focp_solve(problem.get(), cfg.alphas[0], cfg.n_values[0], &options, &raw);
        if (status != FOCP_OK) fail(status);
        TrajectoryHandle trajectory(raw);
        status = focp_trajectory_write(trajectory.get(), output.c_str(), format);
        if (status != FOCP_OK) fail(status);
    } else {
        focp_study* raw = nullptr;
        focp_status status =
            cfg.mode == "convergence"
                ? focp_study_convergence(problem.get(), cfg.alphas.data(), cfg.alphas.size(),
                                         cfg.n_values.data(), cfg.n_values.size(), &options, &raw)
                : focp_study_alpha_sweep(problem.get(), cfg.alphas.data(), cfg.alphas.size(),
                                         cfg.n_values[0], &options, &raw);
        if (status != FOCP_OK) fail(status);
        StudyHandle study(raw);
        status = focp_study_write(study.get(), output.c_str(), format);
        if (status != FOCP_OK) fail(status);
    }

    std::cout << "wrote " << output << '\n';
    return 0;
}
