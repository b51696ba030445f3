#include "core/study.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/errors.hpp"

namespace focp {

namespace {

std::string cell_tag(double alpha, std::size_t n) {
    return "study cell (alpha=" + std::to_string(alpha) + ", n=" + std::to_string(n) + "): ";
}

// Re-throws the caught exception with the failing cell prepended,
// preserving the error type.
[[noreturn]] void rethrow_tagged(double alpha, std::size_t n) {
    const std::string tag = cell_tag(alpha, n);
    try {
        throw;
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(tag + e.what(), e.last_residual);
    } catch (const PositivityError& e) {
        throw PositivityError(tag + e.what());
    } catch (const EvaluationError& e) {
        throw EvaluationError(tag + e.what());
    } catch (const SingularSystemError& e) {
        throw SingularSystemError(tag + e.what());
    } catch (const DomainError& e) {
        throw DomainError(tag + e.what());
    } catch (const Error& e) {
        throw Error(tag + e.what());
    }
}

void validate_alphas(std::span<const double> alphas) {
    if (alphas.empty()) throw DomainError("study needs at least one order");
    for (double a : alphas)
        if (!std::isfinite(a) || a <= 0.0 || a > 1.0)
            throw DomainError("study order must lie in (0, 1], got " + std::to_string(a));
}

bool has_closed_form(const LqFocp& problem, double alpha) {
    return problem.name == "tip" && alpha == 1.0;
}

std::optional<double> closed_form_sup_error(const LqFocp& problem, double alpha,
                                            const Trajectory& traj) {
    if (!has_closed_form(problem, alpha)) return std::nullopt;
    const ErrorMetrics m = error_metrics(traj, analytic_tip_state, analytic_tip_control);
    return std::max(m.state_sup, m.control_sup);
}

}  // namespace

StudyReport run_convergence_study(const LqFocp& problem, std::span<const double> alphas,
                                  std::span<const std::size_t> n_values,
                                  const SolveOptions& options, bool compat_costate_average) {
    problem.validate();
    validate_alphas(alphas);
    if (n_values.empty()) throw DomainError("study needs at least one division count");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 1) throw DomainError("division counts must be at least 1");
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw DomainError("division counts must be strictly increasing");
    }

    StudyReport report;
    report.problem_name = problem.name;
    report.kind = "convergence";
    report.alphas.assign(alphas.begin(), alphas.end());
    report.n_values.assign(n_values.begin(), n_values.end());

    for (double alpha : alphas) {
        const LqFocp instance = problem.with_alpha(alpha);
        std::map<std::size_t, double> endpoint_by_n;
        for (std::size_t n : n_values) {
            Trajectory traj;
            try {
                traj = solve(instance, n, options, compat_costate_average);
            } catch (...) {
                rethrow_tagged(alpha, n);
            }
            report.max_residual = std::max(report.max_residual, traj.solver_info.residual);

            StudyCell cell;
            cell.alpha = alpha;
            cell.n = n;
            cell.endpoint_state = traj.state.back();
            cell.initial_control = traj.control.front();
            if (n % 2 == 0) {
                const auto half = endpoint_by_n.find(n / 2);
                if (half != endpoint_by_n.end())
                    cell.delta_vs_half_n = std::abs(cell.endpoint_state - half->second);
            }
            cell.oracle_sup_error = closed_form_sup_error(instance, alpha, traj);
            endpoint_by_n[n] = cell.endpoint_state;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

StudyReport run_alpha_sweep(const LqFocp& problem, std::span<const double> alphas, std::size_t n,
                            const SolveOptions& options, bool compat_costate_average) {
    problem.validate();
    validate_alphas(alphas);
    if (n < 1) throw DomainError("division count must be at least 1");

    StudyReport report;
    report.problem_name = problem.name;
    report.kind = "alpha-sweep";
    report.alphas.assign(alphas.begin(), alphas.end());
    report.n_values = {n};

    for (double alpha : alphas) {
        const LqFocp instance = problem.with_alpha(alpha);
        Trajectory traj;
        try {
            traj = solve(instance, n, options, compat_costate_average);
        } catch (...) {
            rethrow_tagged(alpha, n);
        }
        report.max_residual = std::max(report.max_residual, traj.solver_info.residual);

        StudyCell cell;
        cell.alpha = alpha;
        cell.n = n;
        cell.endpoint_state = traj.state.back();
        cell.initial_control = traj.control.front();
        cell.oracle_sup_error = closed_form_sup_error(instance, alpha, traj);
        report.cells.push_back(std::move(cell));
    }
    return report;
}

ErrorMetrics error_metrics(const Trajectory& candidate,
                           const std::function<double(double)>& state_oracle,
                           const std::function<double(double)>& control_oracle) {
    if (!state_oracle || !control_oracle) throw DomainError("oracle callables must be set");
    ErrorMetrics m;
    double state_sq = 0.0;
    double control_sq = 0.0;
    const std::size_t count = candidate.times.size();
    if (count == 0) throw DomainError("candidate trajectory is empty");
    for (std::size_t i = 0; i < count; ++i) {
        const double t = candidate.times[i];
        const double ds = candidate.state[i] - state_oracle(t);
        const double dc = candidate.control[i] - control_oracle(t);
        m.state_sup = std::max(m.state_sup, std::abs(ds));
        m.control_sup = std::max(m.control_sup, std::abs(dc));
        state_sq += ds * ds;
        control_sq += dc * dc;
    }
    m.state_rms = std::sqrt(state_sq / static_cast<double>(count));
    m.control_rms = std::sqrt(control_sq / static_cast<double>(count));
    return m;
}

ErrorMetrics error_metrics(const Trajectory& candidate, const Trajectory& oracle) {
    if (candidate.n == 0 || oracle.n == 0) throw DomainError("trajectories must be non-empty");
    if (oracle.n % candidate.n != 0)
        throw GridMismatchError("oracle grid (n=" + std::to_string(oracle.n) +
                                ") does not contain the candidate grid (n=" +
                                std::to_string(candidate.n) + ")");
    const std::size_t stride = oracle.n / candidate.n;
    const double horizon_gap =
        std::abs(candidate.times.back() - oracle.times.back());
    if (horizon_gap > 1e-12 * std::max(1.0, std::abs(oracle.times.back())))
        throw GridMismatchError("trajectories cover different horizons");

    ErrorMetrics m;
    double state_sq = 0.0;
    double control_sq = 0.0;
    for (std::size_t i = 0; i <= candidate.n; ++i) {
        const std::size_t j = i * stride;
        const double ds = candidate.state[i] - oracle.state[j];
        const double dc = candidate.control[i] - oracle.control[j];
        m.state_sup = std::max(m.state_sup, std::abs(ds));
        m.control_sup = std::max(m.control_sup, std::abs(dc));
        state_sq += ds * ds;
        control_sq += dc * dc;
    }
    const double count = static_cast<double>(candidate.n + 1);
    m.state_rms = std::sqrt(state_sq / count);
    m.control_rms = std::sqrt(control_sq / count);
    return m;
}

}  // namespace focp
