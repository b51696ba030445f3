#include "core/gl_weights.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace focp {

WeightSequence::WeightSequence(double alpha, std::size_t max_index) : alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
        throw DomainError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
    values_.resize(max_index + 1);
    values_[0] = 1.0;
    for (std::size_t j = 1; j <= max_index; ++j)
        values_[j] = (1.0 - (alpha + 1.0) / static_cast<double>(j)) * values_[j - 1];
}

WeightSequence gl_weight_sequence(double alpha, std::size_t max_index) {
    return WeightSequence(alpha, max_index);
}

namespace {

double gl_midpoint_sum(std::span<const double> samples, double step,
                       const WeightSequence& weights, bool from_newest) {
    if (!std::isfinite(step) || step <= 0.0)
        throw DomainError("step size must be positive, got " + std::to_string(step));
    if (samples.size() < 2)
        throw DomainError("midpoint derivative needs at least two samples, got " +
                          std::to_string(samples.size()));
    if (weights.size() < samples.size())
        throw DomainError("weight sequence too short: need " + std::to_string(samples.size()) +
                          " weights, have " + std::to_string(weights.size()));
    const std::size_t last = samples.size() - 1;
    double acc = 0.0;
    for (std::size_t j = 0; j <= last; ++j)
        acc += weights[j] * samples[from_newest ? last - j : j];
    return acc * std::pow(step, -weights.alpha());
}

}  // namespace

double left_gl_midpoint(std::span<const double> samples, double step,
                        const WeightSequence& weights) {
    // w_j pairs with x_{i-j}: walk the samples newest to oldest.
    return gl_midpoint_sum(samples, step, weights, true);
}

double right_gl_midpoint(std::span<const double> samples, double step,
                         const WeightSequence& weights) {
    // w_j pairs with u_{i+j}: walk the samples in storage order.
    return gl_midpoint_sum(samples, step, weights, false);
}

}  // namespace focp
