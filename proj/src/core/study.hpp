#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/solver.hpp"

namespace focp {

struct StudyCell {
    double alpha = 0.0;
    std::size_t n = 0;
    double endpoint_state = 0.0;   // x at the horizon
    double initial_control = 0.0;  // u at t = 0
    // |x_n(T) - x_{n/2}(T)| when n/2 was also run in the same study.
    std::optional<double> delta_vs_half_n;
    // Sup-norm error against the closed-form optimum, attached to the
    // alpha = 1 cells of the time-invariant benchmark only.
    std::optional<double> oracle_sup_error;
};

struct StudyReport {
    std::string problem_name;
    std::string kind;  // "convergence" or "alpha-sweep"
    std::vector<double> alphas;
    std::vector<std::size_t> n_values;
    std::vector<StudyCell> cells;      // in (alpha, n) run order
    double max_residual = 0.0;         // worst discrete residual over all solves
};

struct ErrorMetrics {
    double state_sup = 0.0;
    double state_rms = 0.0;
    double control_sup = 0.0;
    double control_rms = 0.0;
};

// Solves every (alpha, n) pair, recording x(T), u(0), and the doubling
// deltas for consecutive n-doublings present in n_values. alphas must lie
// in (0, 1]; n_values must be strictly increasing. Solver errors propagate
// with the failing (alpha, n) prepended to the message.
StudyReport run_convergence_study(const LqFocp& problem, std::span<const double> alphas,
                                  std::span<const std::size_t> n_values,
                                  const SolveOptions& options = {},
                                  bool compat_costate_average = false);

// Solves at fixed n for each alpha.
StudyReport run_alpha_sweep(const LqFocp& problem, std::span<const double> alphas, std::size_t n,
                            const SolveOptions& options = {},
                            bool compat_costate_average = false);

// Sup-norm and RMS differences over the candidate's nodes against callable
// oracles, or against a finer trajectory whose grid contains the
// candidate's nodes (oracle.n must be a multiple of candidate.n).
ErrorMetrics error_metrics(const Trajectory& candidate,
                           const std::function<double(double)>& state_oracle,
                           const std::function<double(double)>& control_oracle);
ErrorMetrics error_metrics(const Trajectory& candidate, const Trajectory& oracle);

}  // namespace focp
