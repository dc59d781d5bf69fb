#pragma once

#include "fdstencil/stencil.hpp"

namespace fdstencil {

/// Inputs of the worst-case truncation bound: a stencil, a bound M on the
/// n-th derivative magnitude over the interval of consideration, and the
/// step h. The error R is defined as f^(k)(t) minus the stencil estimate,
/// so positive R means the estimate falls short.
class ErrorModel {
public:
    ErrorModel(Stencil stencil, double derivative_bound, double step);

    const Stencil& stencil() const { return stencil_; }
    double derivative_bound() const { return derivative_bound_; }
    double step() const { return step_; }

private:
    Stencil stencil_;
    double derivative_bound_;
    double step_;
};

/// The h^(n-k) f^(n)(t) term of the error expansion. A zero coefficient
/// means the true order exceeds the formal order n-k.
struct LeadingTerm {
    Rational coefficient;
    int derivative_order = 0;  // n
    int step_power = 0;        // n - k
    bool vanishes = false;
};

enum class DerivativeSign { positive, negative, unknown };
enum class BiasDirection { underestimate, overestimate, indeterminate };

/// M * delta_max^(2n-k-1) * h^(n-k) / (epsilon^(n-1) * (n-k-1)!). The whole
/// quantity is computed in exact arithmetic and converted to double rounding
/// toward +infinity, so the bound is never understated.
double worst_case_bound(const ErrorModel& model);

struct MagnitudeBound {
    Rational actual;  // sum_j |c_j offset_j^n|
    Rational bound;   // delta_max^(2n-k-1) n! / (epsilon^(n-1) (n-k-1)!)
};

/// Exact value and exact upper bound of the coefficient magnitude sum;
/// actual <= bound always holds.
MagnitudeBound coefficient_magnitude_bound(const Stencil& stencil);

LeadingTerm leading_error_term(const Stencil& stencil);

/// Asymptotic bias of the estimate for small h, decided by the sign of the
/// leading error coefficient times the sign of f^(n). All-negative node sets
/// with a positive n-th derivative always underestimate.
BiasDirection bias_direction(const Stencil& stencil, DerivativeSign nth_derivative_sign);

}  // namespace fdstencil
