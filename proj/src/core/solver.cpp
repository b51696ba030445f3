#include "core/solver.hpp"

#include "core/errors.hpp"

namespace focp {

Trajectory solve(const LqFocp& problem, std::size_t n, const SolveOptions& options,
                 bool compat_costate_average) {
    const DiscreteSystem system = assemble(problem, n, compat_costate_average);
    const std::vector<double> unknowns = options.method == SolveMethod::direct
                                             ? solve_direct(system, options)
                                             : solve_sweep(system, options);
    Trajectory traj = expand_solution(system, unknowns, problem);
    traj.solver_info.method = options.method == SolveMethod::direct ? "direct" : "sweep";
    traj.solver_info.residual = residual_max_norm(system, unknowns);
    return traj;
}

Trajectory reference_solution(const LqFocp& problem, std::size_t n_fine,
                              const SolveOptions& options) {
    if (n_fine < 512 || (n_fine & (n_fine - 1)) != 0)
        throw DomainError("reference grid must be a power of two >= 512, got " +
                          std::to_string(n_fine));
    SolveOptions direct = options;
    direct.method = SolveMethod::direct;
    Trajectory traj = solve(problem, n_fine, direct);
    traj.solver_info.method = "reference";
    return traj;
}

}  // namespace focp
