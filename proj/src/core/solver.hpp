#pragma once

#include "core/linear_solver.hpp"
#include "core/trajectory.hpp"

namespace focp {

// Assemble, solve, and expand in one step. The trajectory's solver_info
// records the method tag and the max-norm residual of the discrete system.
Trajectory solve(const LqFocp& problem, std::size_t n, const SolveOptions& options = {},
                 bool compat_costate_average = false);

// Fine-grid self-reference for problems without a closed form: the solver's
// own direct solution at n_fine divisions, tagged "reference". n_fine must
// be a power of two >= 512.
Trajectory reference_solution(const LqFocp& problem, std::size_t n_fine,
                              const SolveOptions& options = {});

}  // namespace focp
