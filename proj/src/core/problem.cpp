#include "core/problem.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace focp {

LqFocp LqFocp::with_alpha(double new_alpha) const {
    LqFocp copy = *this;
    copy.alpha = new_alpha;
    copy.validate();
    return copy;
}

LqFocp LqFocp::with_x0(double new_x0) const {
    LqFocp copy = *this;
    copy.x0 = new_x0;
    copy.validate();
    return copy;
}

void LqFocp::validate() const {
    if (!q || !r || !a || !b)
        throw DomainError("problem '" + name + "': coefficients q, r, a, b must all be set");
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
        throw DomainError("problem '" + name + "': order must lie in (0, 1], got " +
                          std::to_string(alpha));
    if (!std::isfinite(x0))
        throw DomainError("problem '" + name + "': initial state must be finite");
    if (!std::isfinite(horizon) || horizon <= 0.0)
        throw DomainError("problem '" + name + "': horizon must be positive, got " +
                          std::to_string(horizon));
}

LqFocp make_tip(double alpha) {
    LqFocp p;
    p.name = "tip";
    p.q = [](double) { return 1.0; };
    p.r = [](double) { return 1.0; };
    p.a = [](double) { return -1.0; };
    p.b = [](double) { return 1.0; };
    p.x0 = 1.0;
    p.alpha = alpha;
    p.horizon = 1.0;
    p.validate();
    return p;
}

LqFocp make_tvp(double alpha) {
    LqFocp p;
    p.name = "tvp";
    p.q = [](double) { return 1.0; };
    p.r = [](double) { return 1.0; };
    p.a = [](double t) { return t; };
    p.b = [](double) { return 1.0; };
    p.x0 = 1.0;
    p.alpha = alpha;
    p.horizon = 1.0;
    p.validate();
    return p;
}

double tip_beta() {
    static const double beta = [] {
        const double s = std::sqrt(2.0);
        return -(std::cosh(s) + s * std::sinh(s)) / (s * std::cosh(s) + std::sinh(s));
    }();
    return beta;
}

double analytic_tip_state(double t) {
    const double s = std::sqrt(2.0);
    return std::cosh(s * t) + tip_beta() * std::sinh(s * t);
}

double analytic_tip_control(double t) {
    const double s = std::sqrt(2.0);
    const double beta = tip_beta();
    return (1.0 + s * beta) * std::cosh(s * t) + (s + beta) * std::sinh(s * t);
}

}  // namespace focp
