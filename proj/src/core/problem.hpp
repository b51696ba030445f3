#pragma once

#include <functional>
#include <string>

namespace focp {

// Time-dependent scalar coefficient. Callables must be pure: the solver
// samples them at grid midpoints and nodes and assumes repeatable values.
using Coefficient = std::function<double(double)>;

// Linear-quadratic problem of fractional order alpha on [0, horizon]:
//
//   minimize  (1/2) * integral of q(t) x^2 + r(t) u^2
//   subject to  D^alpha x = a(t) x + b(t) u,   x(0) = x0,
//
// with q >= 0 and r > 0 (enforced pointwise at assembly time).
struct LqFocp {
    std::string name = "custom";
    Coefficient q;
    Coefficient r;
    Coefficient a;
    Coefficient b;
    double x0 = 1.0;
    double alpha = 0.75;
    double horizon = 1.0;

    LqFocp with_alpha(double new_alpha) const;
    LqFocp with_x0(double new_x0) const;

    // Throws DomainError when a field is out of range or a coefficient is unset.
    void validate() const;
};

// Time-invariant benchmark: q = r = b = 1, a = -1, x0 = 1 on [0, 1].
LqFocp make_tip(double alpha = 0.75);

// Time-varying benchmark: q = r = b = 1, a(t) = t, x0 = 1 on [0, 1].
LqFocp make_tvp(double alpha = 0.75);

// Closed-form optimum of the time-invariant benchmark at alpha = 1:
//   x(t) = cosh(s t) + beta sinh(s t)
//   u(t) = (1 + s beta) cosh(s t) + (s + beta) sinh(s t),  s = sqrt(2),
// with beta = -(cosh s + s sinh s) / (s cosh s + sinh s) ~ -0.9799.
double tip_beta();
double analytic_tip_state(double t);
double analytic_tip_control(double t);

}  // namespace focp
