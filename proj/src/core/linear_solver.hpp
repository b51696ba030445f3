#pragma once

#include <vector>

#include "core/dense_matrix.hpp"
#include "core/discretizer.hpp"

namespace focp {

enum class SolveMethod { direct, sweep };

struct SolveOptions {
    SolveMethod method = SolveMethod::direct;
    double sweep_tolerance = 1e-10;          // max-norm change between full sweeps
    std::size_t sweep_max_iterations = 10000;
    double pivot_threshold = 1e-13;          // smallest acceptable pivot magnitude

    void validate() const;
};

// Row-pivoted Gaussian elimination on a general square system. Both
// arguments are taken by value; elimination works on the copies.
// Throws SingularSystemError naming the elimination step when the best
// available pivot falls below pivot_threshold.
std::vector<double> solve_dense(DenseMatrix matrix, std::vector<double> rhs,
                                double pivot_threshold = 1e-13);

std::vector<double> solve_direct(const DiscreteSystem& system, const SolveOptions& options = {});

// Alternating fixed-point iteration on the assembled blocks: holding the
// costate fixed, the state rows are forward-substituted for x_1..x_n (each
// row is triangular in x); holding the state fixed, the costate rows are
// back-substituted for l_{n-1}..l_0. Stops when successive full iterates
// differ by less than sweep_tolerance in max-norm. Convergence is not
// guaranteed; after sweep_max_iterations a ConvergenceError carrying the
// last residual is thrown, and callers may fall back to solve_direct.
std::vector<double> solve_sweep(const DiscreteSystem& system, const SolveOptions& options = {});

}  // namespace focp
