#include "focp/focp.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/gl_weights.hpp"
#include "core/problem.hpp"
#include "core/problem_file.hpp"
#include "core/serialize.hpp"
#include "core/solver.hpp"
#include "core/study.hpp"

struct focp_problem {
    focp::LqFocp value;
};

struct focp_trajectory {
    focp::Trajectory value;
};

struct focp_study {
    focp::StudyReport value;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

template <typename Fn>
focp_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return FOCP_OK;
    } catch (const focp::PositivityError& e) {
        set_error(e.what());
        return FOCP_ERROR_POSITIVITY;
    } catch (const focp::EvaluationError& e) {
        set_error(e.what());
        return FOCP_ERROR_EVALUATION;
    } catch (const focp::SingularSystemError& e) {
        set_error(e.what());
        return FOCP_ERROR_SINGULAR_SYSTEM;
    } catch (const focp::ConvergenceError& e) {
        set_error(e.what());
        return FOCP_ERROR_NO_CONVERGENCE;
    } catch (const focp::ParseError& e) {
        set_error(e.what());
        return FOCP_ERROR_PARSE;
    } catch (const focp::IoError& e) {
        set_error(e.what());
        return FOCP_ERROR_IO;
    } catch (const focp::DomainError& e) {
        set_error(e.what());
        return FOCP_ERROR_DOMAIN;
    } catch (const focp::Error& e) {
        set_error(e.what());
        return FOCP_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return FOCP_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return FOCP_ERROR_INTERNAL;
    }
}

focp_status invalid(const char* message) {
    set_error(message);
    return FOCP_ERROR_INVALID_ARGUMENT;
}

focp::SolveOptions convert_options(const focp_solve_options* options) {
    focp::SolveOptions converted;
    if (options == nullptr) return converted;
    if (options->method != FOCP_METHOD_DIRECT && options->method != FOCP_METHOD_SWEEP)
        throw focp::DomainError("unknown solve method");
    converted.method = options->method == FOCP_METHOD_SWEEP ? focp::SolveMethod::sweep
                                                            : focp::SolveMethod::direct;
    converted.sweep_tolerance = options->sweep_tolerance;
    if (options->sweep_max_iterations < 1)
        throw focp::DomainError("sweep iteration cap must be at least 1");
    converted.sweep_max_iterations = static_cast<std::size_t>(options->sweep_max_iterations);
    converted.pivot_threshold = options->pivot_threshold;
    converted.validate();
    return converted;
}

bool compat_flag(const focp_solve_options* options) {
    return options != nullptr && options->compat_costate_average != 0;
}

focp::OutputFormat convert_format(focp_format format) {
    if (format != FOCP_FORMAT_CSV && format != FOCP_FORMAT_JSON)
        throw focp::DomainError("unknown output format");
    return format == FOCP_FORMAT_CSV ? focp::OutputFormat::csv : focp::OutputFormat::json;
}

std::size_t checked_n(long n) {
    if (n < 1) throw focp::DomainError("division count must be at least 1");
    return static_cast<std::size_t>(n);
}

}  // namespace

extern "C" {

void focp_solve_options_init(focp_solve_options* options) {
    if (options == nullptr) return;
    options->method = FOCP_METHOD_DIRECT;
    options->sweep_tolerance = 1e-10;
    options->sweep_max_iterations = 10000;
    options->pivot_threshold = 1e-13;
    options->compat_costate_average = 0;
}

const char* focp_status_name(focp_status status) {
    switch (status) {
        case FOCP_OK: return "ok";
        case FOCP_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case FOCP_ERROR_DOMAIN: return "domain error";
        case FOCP_ERROR_POSITIVITY: return "positivity violation";
        case FOCP_ERROR_EVALUATION: return "evaluation error";
        case FOCP_ERROR_SINGULAR_SYSTEM: return "singular system";
        case FOCP_ERROR_NO_CONVERGENCE: return "no convergence";
        case FOCP_ERROR_PARSE: return "parse error";
        case FOCP_ERROR_IO: return "i/o error";
        case FOCP_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* focp_last_error(void) { return g_last_error.c_str(); }

const char* focp_version(void) { return "0.1.0"; }

focp_status focp_problem_builtin(const char* name, focp_problem** out) {
    if (name == nullptr || out == nullptr) return invalid("name and out must not be null");
    *out = nullptr;
    if (std::strcmp(name, "tip") != 0 && std::strcmp(name, "tvp") != 0)
        return invalid("unknown builtin problem; expected \"tip\" or \"tvp\"");
    return guarded([&] {
        *out = new focp_problem{std::strcmp(name, "tip") == 0 ? focp::make_tip()
                                                              : focp::make_tvp()};
    });
}

focp_status focp_problem_load(const char* path, focp_problem** out) {
    if (path == nullptr || out == nullptr) return invalid("path and out must not be null");
    *out = nullptr;
    return guarded([&] { *out = new focp_problem{focp::load_custom_problem(path)}; });
}

focp_status focp_problem_poly(const double* q, size_t q_len, const double* r, size_t r_len,
                              const double* a, size_t a_len, const double* b, size_t b_len,
                              double x0, double horizon, focp_problem** out) {
    if (out == nullptr) return invalid("out must not be null");
    *out = nullptr;
    if (q == nullptr || r == nullptr || a == nullptr || b == nullptr)
        return invalid("coefficient arrays must not be null");
    if (q_len == 0 || r_len == 0 || a_len == 0 || b_len == 0)
        return invalid("coefficient arrays must not be empty");
    return guarded([&] {
        const auto poly = [](const double* coeffs, size_t len) -> focp::Coefficient {
            std::vector<double> copy(coeffs, coeffs + len);
            for (double c : copy)
                if (!std::isfinite(c))
                    throw focp::DomainError("polynomial coefficients must be finite");
            return [copy = std::move(copy)](double t) {
                double acc = 0.0;
                for (std::size_t k = copy.size(); k-- > 0;) acc = acc * t + copy[k];
                return acc;
            };
        };
        focp::LqFocp problem;
        problem.name = "custom";
        problem.q = poly(q, q_len);
        problem.r = poly(r, r_len);
        problem.a = poly(a, a_len);
        problem.b = poly(b, b_len);
        problem.x0 = x0;
        problem.horizon = horizon <= 0.0 ? 1.0 : horizon;
        problem.validate();
        *out = new focp_problem{std::move(problem)};
    });
}

const char* focp_problem_name(const focp_problem* problem) {
    return problem == nullptr ? "" : problem->value.name.c_str();
}

void focp_problem_free(focp_problem* problem) { delete problem; }

focp_status focp_gl_weights(double alpha, size_t count, double* out) {
    if (out == nullptr) return invalid("out must not be null");
    if (count == 0) return invalid("count must be at least 1");
    return guarded([&] {
        const focp::WeightSequence w = focp::gl_weight_sequence(alpha, count - 1);
        for (size_t j = 0; j < count; ++j) out[j] = w[j];
    });
}

focp_status focp_solve(const focp_problem* problem, double alpha, long n,
                       const focp_solve_options* options, focp_trajectory** out) {
    if (problem == nullptr || out == nullptr) return invalid("problem and out must not be null");
    *out = nullptr;
    return guarded([&] {
        const focp::LqFocp instance = problem->value.with_alpha(alpha);
        *out = new focp_trajectory{
            focp::solve(instance, checked_n(n), convert_options(options), compat_flag(options))};
    });
}

focp_status focp_reference_solution(const focp_problem* problem, double alpha, long n_fine,
                                    focp_trajectory** out) {
    if (problem == nullptr || out == nullptr) return invalid("problem and out must not be null");
    *out = nullptr;
    return guarded([&] {
        const focp::LqFocp instance = problem->value.with_alpha(alpha);
        if (n_fine < 1) throw focp::DomainError("reference grid size must be positive");
        *out = new focp_trajectory{
            focp::reference_solution(instance, static_cast<std::size_t>(n_fine))};
    });
}

size_t focp_trajectory_points(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? 0 : trajectory->value.times.size();
}

const double* focp_trajectory_times(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? nullptr : trajectory->value.times.data();
}

const double* focp_trajectory_state(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? nullptr : trajectory->value.state.data();
}

const double* focp_trajectory_costate(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? nullptr : trajectory->value.costate.data();
}

const double* focp_trajectory_control(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? nullptr : trajectory->value.control.data();
}

double focp_trajectory_residual(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? 0.0 : trajectory->value.solver_info.residual;
}

const char* focp_trajectory_method(const focp_trajectory* trajectory) {
    return trajectory == nullptr ? "" : trajectory->value.solver_info.method.c_str();
}

focp_status focp_trajectory_write(const focp_trajectory* trajectory, const char* path,
                                  focp_format format) {
    if (trajectory == nullptr || path == nullptr)
        return invalid("trajectory and path must not be null");
    return guarded([&] { focp::write_trajectory(trajectory->value, path, convert_format(format)); });
}

void focp_trajectory_free(focp_trajectory* trajectory) { delete trajectory; }

focp_status focp_study_convergence(const focp_problem* problem, const double* alphas,
                                   size_t alpha_count, const long* n_values, size_t n_count,
                                   const focp_solve_options* options, focp_study** out) {
    if (problem == nullptr || out == nullptr) return invalid("problem and out must not be null");
    *out = nullptr;
    if (alphas == nullptr || alpha_count == 0) return invalid("alphas must not be empty");
    if (n_values == nullptr || n_count == 0) return invalid("n_values must not be empty");
    return guarded([&] {
        std::vector<std::size_t> ns;
        ns.reserve(n_count);
        for (size_t i = 0; i < n_count; ++i) ns.push_back(checked_n(n_values[i]));
        *out = new focp_study{focp::run_convergence_study(
            problem->value, std::span<const double>(alphas, alpha_count), ns,
            convert_options(options), compat_flag(options))};
    });
}

focp_status focp_study_alpha_sweep(const focp_problem* problem, const double* alphas,
                                   size_t alpha_count, long n,
                                   const focp_solve_options* options, focp_study** out) {
    if (problem == nullptr || out == nullptr) return invalid("problem and out must not be null");
    *out = nullptr;
    if (alphas == nullptr || alpha_count == 0) return invalid("alphas must not be empty");
    return guarded([&] {
        *out = new focp_study{focp::run_alpha_sweep(
            problem->value, std::span<const double>(alphas, alpha_count), checked_n(n),
            convert_options(options), compat_flag(options))};
    });
}

size_t focp_study_rows(const focp_study* study) {
    return study == nullptr ? 0 : study->value.cells.size();
}

focp_status focp_study_row(const focp_study* study, size_t index, double* alpha, long* n,
                           double* x_end, double* u_start, double* delta_vs_half_n,
                           int* has_delta, double* oracle_sup_error, int* has_oracle_error) {
    if (study == nullptr) return invalid("study must not be null");
    if (index >= study->value.cells.size()) return invalid("row index out of range");
    const focp::StudyCell& cell = study->value.cells[index];
    if (alpha != nullptr) *alpha = cell.alpha;
    if (n != nullptr) *n = static_cast<long>(cell.n);
    if (x_end != nullptr) *x_end = cell.endpoint_state;
    if (u_start != nullptr) *u_start = cell.initial_control;
    if (has_delta != nullptr) *has_delta = cell.delta_vs_half_n.has_value() ? 1 : 0;
    if (delta_vs_half_n != nullptr && cell.delta_vs_half_n)
        *delta_vs_half_n = *cell.delta_vs_half_n;
    if (has_oracle_error != nullptr) *has_oracle_error = cell.oracle_sup_error.has_value() ? 1 : 0;
    if (oracle_sup_error != nullptr && cell.oracle_sup_error)
        *oracle_sup_error = *cell.oracle_sup_error;
    g_last_error.clear();
    return FOCP_OK;
}

double focp_study_max_residual(const focp_study* study) {
    return study == nullptr ? 0.0 : study->value.max_residual;
}

focp_status focp_study_write(const focp_study* study, const char* path, focp_format format) {
    if (study == nullptr || path == nullptr) return invalid("study and path must not be null");
    return guarded([&] { focp::write_study(study->value, path, convert_format(format)); });
}

void focp_study_free(focp_study* study) { delete study; }

double focp_tip_beta(void) { return focp::tip_beta(); }

double focp_analytic_tip_state(double t) { return focp::analytic_tip_state(t); }

double focp_analytic_tip_control(double t) { return focp::analytic_tip_control(t); }

}  // extern "C"
