#pragma once

#include <span>
#include <vector>

#include "core/dense_matrix.hpp"
#include "core/problem.hpp"
#include "core/trajectory.hpp"

namespace focp {

// Discretized optimality system: 2n linear equations in the 2n unknowns
// z = [x_1 .. x_n, l_0 .. l_{n-1}]. The known boundary values x_0 and
// l_n = 0 are folded into rhs. Rows 0..n-1 are the state equations for
// i = 1..n (centered at t_{i-1/2}); rows n..2n-1 are the costate
// equations for i = n-1 down to 0 (centered at t_{i+1/2}).
// Immutable after assembly.
struct DiscreteSystem {
    std::size_t n = 0;
    double h = 0.0;
    DenseMatrix matrix;
    std::vector<double> rhs;
    bool compat_costate_average = false;
};

// Builds the system for the given problem at n divisions. Each state row i is
//
//   h^-a sum_{j=0}^{i} w_j x_{i-j}
//     - (1/2) a(t_{i-1/2}) (x_{i-1} + x_i)
//     + (1/2) b^2(t_{i-1/2})/r(t_{i-1/2}) (l_{i-1} + l_i)  =  0
//
// and each costate row i is
//
//   h^-a sum_{j=0}^{n-i} w_j l_{i+j}
//     - (1/2) q(t_{i+1/2}) (x_i + x_{i+1})
//     - (1/2) a(t_{i+1/2}) (l_i + l_{i+1})  =  0.
//
// compat_costate_average swaps the costate row's trailing average for the
// lagged pair (l_{i-1} + l_i); the first row (i = 0), where l_{-1} does not
// exist, keeps the (l_0 + l_1) pair. Kept only for side-by-side comparison
// of the two row forms; the default is the midpoint-consistent pair.
//
// Throws PositivityError when r <= 0 or q < 0 at a sampled midpoint,
// EvaluationError when a coefficient evaluates non-finite, DomainError on
// bad n or an invalid problem.
DiscreteSystem assemble(const LqFocp& problem, std::size_t n,
                        bool compat_costate_average = false);

// Max-norm of matrix*z - rhs.
double residual_max_norm(const DiscreteSystem& system, std::span<const double> unknowns);
double residual_max_norm(const DiscreteSystem& system, const Trajectory& candidate);

// Prepends x_0, appends l_n = 0, and samples the control u = -b/r * l at
// the grid nodes.
Trajectory expand_solution(const DiscreteSystem& system, std::span<const double> unknowns,
                           const LqFocp& problem);

}  // namespace focp
