#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace focp {

struct SolverInfo {
    std::string method;     // "direct", "sweep", or "reference"
    double residual = 0.0;  // max-norm residual of the discrete system
};

// Solution on the uniform grid t_i = i * horizon / n, i = 0..n.
// state[0] equals the problem's x0 and costate[n] is 0, both imposed;
// control[i] = -b(t_i)/r(t_i) * costate[i] at every node.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> state;
    std::vector<double> costate;
    std::vector<double> control;
    double alpha = 0.0;
    std::size_t n = 0;
    SolverInfo solver_info;
};

}  // namespace focp
