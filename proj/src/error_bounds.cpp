#include "fdstencil/error_bounds.hpp"

#include <stdexcept>
#include <utility>

namespace fdstencil {

ErrorModel::ErrorModel(Stencil stencil, double derivative_bound, double step)
    : stencil_(std::move(stencil)), derivative_bound_(derivative_bound), step_(step) {
    if (!(derivative_bound_ > 0.0)) {
        throw std::invalid_argument("derivative bound must be positive");
    }
    if (!(step_ > 0.0)) {
        throw std::invalid_argument("step must be positive");
    }
}

namespace {

/// delta_max^(2n-k-1) / (epsilon^(n-1) (n-k-1)!), the geometry factor shared
/// by the worst-case bound and the magnitude bound (without the n! of the
/// latter).
Rational geometry_factor(const Stencil& stencil) {
    const int n = stencil.nodes.size();
    const int k = stencil.k;
    const Rational num = pow(stencil.nodes.delta_max(), 2 * n - k - 1);
    const Rational den = pow(stencil.nodes.epsilon(), n - 1) * Rational(factorial(n - k - 1));
    return num / den;
}

}  // namespace

double worst_case_bound(const ErrorModel& model) {
    const Stencil& stencil = model.stencil();
    const int n = stencil.nodes.size();
    const int k = stencil.k;
    const Rational exact = Rational::from_double(model.derivative_bound()) *
                           pow(Rational::from_double(model.step()), n - k) *
                           geometry_factor(stencil);
    return exact.to_double_round_up();
}

MagnitudeBound coefficient_magnitude_bound(const Stencil& stencil) {
    const int n = stencil.nodes.size();
    Rational actual(0);
    for (int j = 0; j < n; ++j) {
        actual += abs(stencil.coefficients[static_cast<std::size_t>(j)] *
                      pow(stencil.nodes.offset(j), n));
    }
    const Rational bound = geometry_factor(stencil) * Rational(factorial(n));
    if (actual > bound) {
        throw std::logic_error("coefficient magnitude exceeds its bound");
    }
    return {std::move(actual), bound};
}

LeadingTerm leading_error_term(const Stencil& stencil) {
    LeadingTerm term;
    term.coefficient = stencil.leading_coefficient;
    term.derivative_order = stencil.nodes.size();
    term.step_power = stencil.formal_order;
    term.vanishes = term.coefficient.is_zero();
    return term;
}

BiasDirection bias_direction(const Stencil& stencil, DerivativeSign nth_derivative_sign) {
    if (nth_derivative_sign == DerivativeSign::unknown) {
        return BiasDirection::indeterminate;
    }
    const int lead = stencil.leading_coefficient.sign();
    if (lead == 0) {
        return BiasDirection::indeterminate;
    }
    const int deriv = nth_derivative_sign == DerivativeSign::positive ? 1 : -1;
    // The error f^(k) - estimate behaves like lead * h^(n-k) * f^(n) for
    // small h; positive error means the estimate falls short.
    return lead * deriv > 0 ? BiasDirection::underestimate : BiasDirection::overestimate;
}

}  // namespace fdstencil
