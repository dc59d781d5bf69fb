#pragma once

#include "fdstencil/stencil.hpp"

#include <string>
#include <vector>

namespace fdstencil {

/// Analytic test signal with closed-form derivatives of every order used
/// by the studies (up to at least order 10).
class TestFunction {
public:
    static TestFunction sine();
    static TestFunction exponential();
    static TestFunction log1p();
    static TestFunction runge();  // 1 / (1 + t^2)
    static TestFunction poly(std::vector<double> coefficients);  // a0 + a1 t + ...

    /// Parses one of "sin", "exp", "log1p", "runge".
    static TestFunction named(const std::string& id);

    const std::string& name() const { return name_; }

    double value(double t) const { return derivative(0, t); }
    double derivative(int order, double t) const;

    /// Max of |f^(order)| over [lo, hi]; exact from monotonicity or phase
    /// structure where the function allows it, otherwise a fine-grid scan
    /// with a 1.01 safety factor.
    double max_abs_derivative(int order, double lo, double hi) const;

private:
    enum class Kind { sine, exponential, log1p, runge, poly };

    TestFunction(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    std::vector<double> coefficients_;
};

struct ConvergenceRow {
    double h = 0.0;
    double error = 0.0;  // |f^(k)(t0) - estimate|
    double ratio = 0.0;  // error / h^(n-k)
    bool used = false;   // above the roundoff floor, included in the fit
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;       // h strictly decreasing
    double fitted_slope = 0.0;              // least-squares slope of log error vs log h
    double leading_estimate = 0.0;          // ratio at the smallest usable h
};

/// Measures the error of the stencil on exact function samples across the
/// step grid. Rows whose error sits below 100 * eps * |f^(k)(t0)| / h^k are
/// flagged unused (rounding noise, not truncation). Throws when every row
/// is below that floor.
ConvergenceReport convergence_study(const NodeSet& nodes, int k, const TestFunction& fn,
                                    double t0, std::vector<double> h_grid);

/// points-element geometric grid from h_max down to h_min.
std::vector<double> geometric_grid(double h_max, double h_min, int points);

struct BoundAuditResult {
    double measured = 0.0;
    double bound = 0.0;
    double derivative_bound = 0.0;  // the M fed to the bound
    bool ok = false;                // measured <= bound
};

/// Checks the worst-case bound against the actually measured error at one
/// step size, with M taken as the max of |f^(n)| over the interval of
/// consideration.
BoundAuditResult bound_audit(const NodeSet& nodes, int k, const TestFunction& fn,
                             double t0, double h);

std::string report_to_text(const ConvergenceReport& report);
std::string report_to_json(const ConvergenceReport& report);
std::string report_to_csv(const ConvergenceReport& report);

}  // namespace fdstencil
