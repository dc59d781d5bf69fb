#pragma once

#include "fdstencil/linalg.hpp"
#include "fdstencil/rational.hpp"

#include <span>

namespace fdstencil {

/// Smallest closed interval containing every sample point t + offset * h.
struct ReferenceInterval {
    double lower = 0.0;
    double upper = 0.0;
};

/// The distinct node offsets of a stencil, dimensionless multiples of the
/// step h. Carries the two geometry parameters every bound depends on:
/// delta_max (largest |offset|) and epsilon (smallest pairwise gap).
class NodeSet {
public:
    explicit NodeSet(RationalVector offsets);

    int size() const { return static_cast<int>(offsets_.size()); }
    const RationalVector& offsets() const { return offsets_; }
    const Rational& offset(int j) const { return offsets_.at(static_cast<std::size_t>(j)); }

    const Rational& delta_max() const { return delta_max_; }
    const Rational& epsilon() const { return epsilon_; }
    const RationalVector& epsilons() const { return epsilons_; }

    /// Offsets with entry j removed (0-based).
    RationalVector omitting(int j) const;

    bool all_negative() const;

    ReferenceInterval reference_interval(double t, double h) const;

private:
    RationalVector offsets_;
    Rational delta_max_;
    Rational epsilon_;
    RationalVector epsilons_;
};

/// Coefficients c_j such that (1/h^k) sum_j c_j f(t + offset_j h) estimates
/// the k-th derivative of f at t. Produced by generate_stencil; immutable
/// once built.
struct Stencil {
    NodeSet nodes;
    int k = 0;
    RationalVector coefficients;
    int formal_order = 0;         // n - k, the h-exponent of the generic error
    Rational power_sum;           // S = sum_j c_j offset_j^n
    Rational leading_coefficient; // factor of h^(n-k) f^(n)(t) in the error
};

/// Solves the moment system: sum_j c_j offset_j^i = 0 for 0 <= i <= n-1
/// except i = k, where the sum equals k!. Requires 0 < k < n.
Stencil generate_stencil(const NodeSet& nodes, int k);

/// c_j (0-based j) without solving the linear system:
///   (-1)^(n+k+1) k! sigma_{n-1,n-k-1}(offsets without j) / prod_{i!=j}(d_j - d_i)
Rational closed_form_coefficient(const NodeSet& nodes, int k, int j);

/// Coefficients for the uniformly spaced past-only nodes -1, -2, ..., -n,
/// from the harmonic-number formulas. Only k = 1 and k = 2 have this form.
RationalVector special_case_coefficients(int n, int k);

/// Exact residuals sum_j c_j offset_j^i - [i == k] k! for i = 0..n-1.
/// All zero exactly when the coefficients solve the moment system.
RationalVector moment_report(const NodeSet& nodes, int k,
                             std::span<const Rational> coefficients);
RationalVector moment_report(const Stencil& stencil);

/// S = sum_j c_j offset_j^n computed directly; throws if the direct sum ever
/// disagrees with the closed form (-1)^(k+n+1) k! sigma_{n,n-k}(offsets).
Rational weighted_power_sum(const Stencil& stencil);

/// (1/h^k) sum_j c_j samples[j]; coefficients convert to double here and
/// nowhere earlier. Samples pair with nodes in offset order.
double evaluate_stencil(const Stencil& stencil, std::span<const double> samples, double h);

/// Exact-arithmetic evaluation, for inputs that are themselves rationals.
Rational evaluate_stencil(const Stencil& stencil, std::span<const Rational> samples,
                          const Rational& h);

}  // namespace fdstencil
