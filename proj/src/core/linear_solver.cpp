#include "core/linear_solver.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace focp {

void SolveOptions::validate() const {
    if (!std::isfinite(sweep_tolerance) || sweep_tolerance <= 0.0)
        throw DomainError("sweep tolerance must be positive");
    if (sweep_max_iterations < 1)
        throw DomainError("sweep iteration cap must be at least 1");
    if (!std::isfinite(pivot_threshold) || pivot_threshold <= 0.0)
        throw DomainError("pivot threshold must be positive");
}

std::vector<double> solve_dense(DenseMatrix matrix, std::vector<double> rhs,
                                double pivot_threshold) {
    const std::size_t n = matrix.rows();
    if (matrix.cols() != n || rhs.size() != n)
        throw DomainError("solve_dense: need a square matrix and a matching rhs");
    if (!std::isfinite(pivot_threshold) || pivot_threshold <= 0.0)
        throw DomainError("pivot threshold must be positive");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(matrix(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double mag = std::abs(matrix(r, k));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < pivot_threshold)
            throw SingularSystemError("elimination step " + std::to_string(k) +
                                      ": pivot magnitude " + std::to_string(best) +
                                      " below threshold");
        if (pivot != k) {
            matrix.swap_rows(k, pivot);
            std::swap(rhs[k], rhs[pivot]);
        }
        const double inv = 1.0 / matrix(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = matrix(r, k) * inv;
            if (factor == 0.0) continue;
            matrix(r, k) = 0.0;
            for (std::size_t c = k + 1; c < n; ++c) matrix(r, c) -= factor * matrix(k, c);
            rhs[r] -= factor * rhs[k];
        }
    }

    std::vector<double> z(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double acc = rhs[ri];
        for (std::size_t c = ri + 1; c < n; ++c) acc -= matrix(ri, c) * z[c];
        z[ri] = acc / matrix(ri, ri);
    }
    return z;
}

std::vector<double> solve_direct(const DiscreteSystem& system, const SolveOptions& options) {
    options.validate();
    return solve_dense(system.matrix, system.rhs, options.pivot_threshold);
}

std::vector<double> solve_sweep(const DiscreteSystem& system, const SolveOptions& options) {
    options.validate();
    const std::size_t n = system.n;
    const DenseMatrix& m = system.matrix;
    if (m.rows() != 2 * n || m.cols() != 2 * n || system.rhs.size() != 2 * n)
        throw DomainError("solve_sweep: system dimensions are inconsistent");

    std::vector<double> x(n, 0.0);
    std::vector<double> lam(n, 0.0);

    const auto concat = [&] {
        std::vector<double> z(2 * n);
        std::copy(x.begin(), x.end(), z.begin());
        std::copy(lam.begin(), lam.end(), z.begin() + static_cast<std::ptrdiff_t>(n));
        return z;
    };

    for (std::size_t iter = 1; iter <= options.sweep_max_iterations; ++iter) {
        double change = 0.0;

        // Forward: row i-1 is solved for x_i. Entries at columns below i-1
        // are this sweep's values, entries above (zero for the default row
        // form) are the previous sweep's.
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t row = i - 1;
            double acc = system.rhs[row];
            for (std::size_t c = 0; c < n; ++c)
                if (c != i - 1) acc -= m(row, c) * x[c];
            for (std::size_t c = 0; c < n; ++c) acc -= m(row, n + c) * lam[c];
            const double diag = m(row, i - 1);
            if (std::abs(diag) < options.pivot_threshold)
                throw SingularSystemError("sweep: state row " + std::to_string(i) +
                                          " has a vanishing diagonal");
            const double next = acc / diag;
            change = std::max(change, std::abs(next - x[i - 1]));
            x[i - 1] = next;
        }

        // Backward: row n+k is solved for l_{n-1-k}.
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t row = n + k;
            const std::size_t target = n - 1 - k;
            double acc = system.rhs[row];
            for (std::size_t c = 0; c < n; ++c) acc -= m(row, c) * x[c];
            for (std::size_t c = 0; c < n; ++c)
                if (c != target) acc -= m(row, n + c) * lam[c];
            const double diag = m(row, n + target);
            if (std::abs(diag) < options.pivot_threshold)
                throw SingularSystemError("sweep: costate row for node " + std::to_string(target) +
                                          " has a vanishing diagonal");
            const double next = acc / diag;
            change = std::max(change, std::abs(next - lam[target]));
            lam[target] = next;
        }

        if (change < options.sweep_tolerance) return concat();
    }

    const double residual = residual_max_norm(system, concat());
    throw ConvergenceError("sweep did not converge within " +
                               std::to_string(options.sweep_max_iterations) +
                               " iterations; last residual " + std::to_string(residual),
                           residual);
}

}  // namespace focp
