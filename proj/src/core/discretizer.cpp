#include "core/discretizer.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/gl_weights.hpp"

namespace focp {

namespace {

double eval_checked(const Coefficient& f, double t, const char* what) {
    const double v = f(t);
    if (!std::isfinite(v))
        throw EvaluationError(std::string(what) + "(" + std::to_string(t) +
                              ") evaluated to a non-finite value");
    return v;
}

}  // namespace

DiscreteSystem assemble(const LqFocp& problem, std::size_t n, bool compat_costate_average) {
    problem.validate();
    if (n < 1) throw DomainError("division count must be at least 1");

    DiscreteSystem sys;
    sys.n = n;
    sys.h = problem.horizon / static_cast<double>(n);
    sys.compat_costate_average = compat_costate_average;
    sys.matrix = DenseMatrix(2 * n, 2 * n);
    sys.rhs.assign(2 * n, 0.0);

    const WeightSequence w = gl_weight_sequence(problem.alpha, n);
    const double scale = std::pow(sys.h, -problem.alpha);
    const double x0 = problem.x0;
    DenseMatrix& m = sys.matrix;

    // Column of x_k (k = 1..n) is k-1; column of l_k (k = 0..n-1) is n+k.
    const auto xcol = [](std::size_t k) { return k - 1; };
    const auto lcol = [n](std::size_t k) { return n + k; };

    // State equations, i = 1..n, centered at t_{i-1/2}.
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t row = i - 1;
        const double t = (static_cast<double>(i) - 0.5) * sys.h;
        const double ai = eval_checked(problem.a, t, "a");
        const double ri = eval_checked(problem.r, t, "r");
        const double bi = eval_checked(problem.b, t, "b");
        if (ri <= 0.0)
            throw PositivityError("r(" + std::to_string(t) + ") = " + std::to_string(ri) +
                                  " violates r > 0");
        const double coupling = bi * bi / ri;

        for (std::size_t j = 0; j <= i; ++j) {
            const std::size_t k = i - j;
            if (k >= 1)
                m(row, xcol(k)) += scale * w[j];
            else
                sys.rhs[row] -= scale * w[j] * x0;
        }
        for (std::size_t k = i - 1; k <= i; ++k) {
            if (k >= 1)
                m(row, xcol(k)) += -0.5 * ai;
            else
                sys.rhs[row] -= -0.5 * ai * x0;
        }
        for (std::size_t k = i - 1; k <= i; ++k) {
            if (k <= n - 1) m(row, lcol(k)) += 0.5 * coupling;
            // k == n: l_n = 0 contributes nothing.
        }
    }

    // Costate equations, i = n-1 down to 0, centered at t_{i+1/2}.
    for (std::size_t idx = 0; idx < n; ++idx) {
        const std::size_t i = n - 1 - idx;
        const std::size_t row = n + idx;
        const double t = (static_cast<double>(i) + 0.5) * sys.h;
        const double ai = eval_checked(problem.a, t, "a");
        const double qi = eval_checked(problem.q, t, "q");
        if (qi < 0.0)
            throw PositivityError("q(" + std::to_string(t) + ") = " + std::to_string(qi) +
                                  " violates q >= 0");

        for (std::size_t j = 0; j <= n - i; ++j) {
            const std::size_t k = i + j;
            if (k <= n - 1) m(row, lcol(k)) += scale * w[j];
        }
        for (std::size_t k = i; k <= i + 1; ++k) {
            if (k >= 1)
                m(row, xcol(k)) += -0.5 * qi;
            else
                sys.rhs[row] -= -0.5 * qi * x0;
        }
        const bool lagged = compat_costate_average && i >= 1;
        const std::size_t first = lagged ? i - 1 : i;
        for (std::size_t k = first; k <= first + 1; ++k) {
            if (k <= n - 1) m(row, lcol(k)) += -0.5 * ai;
        }
    }

    return sys;
}

double residual_max_norm(const DiscreteSystem& system, std::span<const double> unknowns) {
    const std::size_t dim = 2 * system.n;
    if (unknowns.size() != dim)
        throw DomainError("unknown vector has length " + std::to_string(unknowns.size()) +
                          ", expected " + std::to_string(dim));
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        double acc = -system.rhs[i];
        for (std::size_t j = 0; j < dim; ++j) acc += system.matrix(i, j) * unknowns[j];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

double residual_max_norm(const DiscreteSystem& system, const Trajectory& candidate) {
    const std::size_t n = system.n;
    if (candidate.n != n || candidate.state.size() != n + 1 || candidate.costate.size() != n + 1)
        throw GridMismatchError("candidate trajectory does not match the system grid (n = " +
                                std::to_string(n) + ")");
    if (candidate.times.size() != n + 1 ||
        std::abs(candidate.times[1] - candidate.times[0] - system.h) > 1e-12 * system.h)
        throw GridMismatchError("candidate step size does not match the system step");
    std::vector<double> z(2 * n);
    for (std::size_t k = 1; k <= n; ++k) z[k - 1] = candidate.state[k];
    for (std::size_t k = 0; k < n; ++k) z[n + k] = candidate.costate[k];
    return residual_max_norm(system, z);
}

Trajectory expand_solution(const DiscreteSystem& system, std::span<const double> unknowns,
                           const LqFocp& problem) {
    const std::size_t n = system.n;
    if (unknowns.size() != 2 * n)
        throw DomainError("unknown vector has length " + std::to_string(unknowns.size()) +
                          ", expected " + std::to_string(2 * n));

    Trajectory traj;
    traj.alpha = problem.alpha;
    traj.n = n;
    traj.times.resize(n + 1);
    traj.state.resize(n + 1);
    traj.costate.resize(n + 1);
    traj.control.resize(n + 1);

    for (std::size_t i = 0; i <= n; ++i) traj.times[i] = static_cast<double>(i) * system.h;

    traj.state[0] = problem.x0;
    for (std::size_t k = 1; k <= n; ++k) traj.state[k] = unknowns[k - 1];
    for (std::size_t k = 0; k < n; ++k) traj.costate[k] = unknowns[n + k];
    traj.costate[n] = 0.0;

    for (std::size_t i = 0; i <= n; ++i) {
        const double t = traj.times[i];
        const double ri = eval_checked(problem.r, t, "r");
        const double bi = eval_checked(problem.b, t, "b");
        if (ri <= 0.0)
            throw PositivityError("r(" + std::to_string(t) + ") = " + std::to_string(ri) +
                                  " violates r > 0");
        traj.control[i] = -bi / ri * traj.costate[i];
    }
    return traj;
}

}  // namespace focp
