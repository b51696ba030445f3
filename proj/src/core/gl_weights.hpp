#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace focp {

// Grunwald-Letnikov weight sequence w_0 .. w_m for a fractional order in
// (0, 1], generated by the recursion
//
//     w_0 = 1,   w_j = (1 - (alpha + 1)/j) * w_{j-1}.
//
// For 0 < alpha < 1 every w_j with j >= 1 is strictly negative and the
// partial sums are strictly positive and strictly decreasing. For
// alpha = 1 the sequence is exactly [1, -1, 0, 0, ...] and the midpoint
// operators below degenerate to the classic central differences.
// Immutable after construction; safe to share across threads.
class WeightSequence {
public:
    WeightSequence(double alpha, std::size_t max_index);

    double alpha() const { return alpha_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    std::span<const double> values() const { return values_; }

private:
    double alpha_;
    std::vector<double> values_;
};

// Weights w_0 .. w_max_index (length max_index + 1).
WeightSequence gl_weight_sequence(double alpha, std::size_t max_index);

// Left fractional derivative at the midpoint t_{i-1/2}, i = samples.size()-1:
//     step^-alpha * sum_{j=0}^{i} w_j * samples[i-j]
// samples holds x_0 .. x_i on a uniform grid of the given step.
double left_gl_midpoint(std::span<const double> samples, double step,
                        const WeightSequence& weights);

// Right fractional derivative at the midpoint t_{i+1/2}:
//     step^-alpha * sum_{j=0}^{k} w_j * samples[j],   k = samples.size()-1
// samples holds u_i .. u_n, so samples[j] is the value at node i+j.
double right_gl_midpoint(std::span<const double> samples, double step,
                         const WeightSequence& weights);

}  // namespace focp
