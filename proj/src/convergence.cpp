#include "fdstencil/convergence.hpp"

#include "fdstencil/error_bounds.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fdstencil {

TestFunction TestFunction::sine() { return {Kind::sine, "sin"}; }
TestFunction TestFunction::exponential() { return {Kind::exponential, "exp"}; }
TestFunction TestFunction::log1p() { return {Kind::log1p, "log1p"}; }
TestFunction TestFunction::runge() { return {Kind::runge, "runge"}; }

TestFunction TestFunction::poly(std::vector<double> coefficients) {
    if (coefficients.empty()) {
        throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    TestFunction fn(Kind::poly, "poly");
    fn.coefficients_ = std::move(coefficients);
    return fn;
}

TestFunction TestFunction::named(const std::string& id) {
    if (id == "sin") return sine();
    if (id == "exp") return exponential();
    if (id == "log1p") return log1p();
    if (id == "runge") return runge();
    throw std::invalid_argument("unknown test function: '" + id + "'");
}

double TestFunction::derivative(int order, double t) const {
    if (order < 0) {
        throw std::invalid_argument("derivative order must be non-negative");
    }
    switch (kind_) {
        case Kind::sine:
            // The derivative cycle sin, cos, -sin, -cos keeps the phase exact.
            switch (order % 4) {
                case 0: return std::sin(t);
                case 1: return std::cos(t);
                case 2: return -std::sin(t);
                default: return -std::cos(t);
            }
        case Kind::exponential:
            return std::exp(t);
        case Kind::log1p: {
            if (t <= -1.0) throw std::domain_error("log1p requires t > -1");
            if (order == 0) return std::log1p(t);
            // f^(m)(t) = (-1)^(m-1) (m-1)! / (1+t)^m
            double magnitude = 1.0;
            for (int i = 1; i < order; ++i) magnitude *= i;
            magnitude /= std::pow(1.0 + t, order);
            return order % 2 == 1 ? magnitude : -magnitude;
        }
        case Kind::runge: {
            if (order == 0) return 1.0 / (1.0 + t * t);
            // 1/(1+t^2) = Im 1/(t-i), so the m-th derivative is
            // (-1)^m m! Im (t-i)^-(m+1).
            const std::complex<double> pole(t, -1.0);
            std::complex<double> p = std::pow(pole, -(order + 1));
            double m_fact = 1.0;
            for (int i = 2; i <= order; ++i) m_fact *= i;
            const double value = m_fact * p.imag();
            return order % 2 == 0 ? value : -value;
        }
        case Kind::poly: {
            double acc = 0.0;
            for (std::size_t i = coefficients_.size(); i-- > 0;) {
                const int d = static_cast<int>(i);
                if (d < order) break;
                double falling = 1.0;
                for (int m = 0; m < order; ++m) falling *= d - m;
                acc = acc * t + coefficients_[i] * falling;
            }
            return acc;
        }
    }
    return 0.0;
}

namespace {

double grid_max_abs(const TestFunction& fn, int order, double lo, double hi) {
    constexpr int kPoints = 2001;
    double best = 0.0;
    for (int i = 0; i < kPoints; ++i) {
        const double t = lo + (hi - lo) * i / (kPoints - 1);
        best = std::max(best, std::abs(fn.derivative(order, t)));
    }
    return best * 1.01;
}

}  // namespace

double TestFunction::max_abs_derivative(int order, double lo, double hi) const {
    if (!(lo <= hi)) {
        throw std::invalid_argument("empty interval");
    }
    switch (kind_) {
        case Kind::exponential:
            return std::exp(hi);  // increasing for every order
        case Kind::sine: {
            // |f^(order)| is |sin| or |cos| shifted by the cycle; it peaks at 1
            // wherever the interval covers a crest, otherwise at an endpoint.
            const bool is_sin_branch = order % 2 == 0;
            // Crests of |sin| sit at pi/2 + m*pi, crests of |cos| at m*pi.
            constexpr double pi = std::numbers::pi;
            const double offset = is_sin_branch ? 0.5 * pi : 0.0;
            const double m_lo = std::ceil((lo - offset) / pi);
            if (offset + m_lo * pi <= hi) return 1.0;
            return std::max(std::abs(derivative(order, lo)), std::abs(derivative(order, hi)));
        }
        case Kind::log1p:
            if (lo <= -1.0) throw std::domain_error("log1p requires t > -1");
            // Every derivative magnitude decreases in t; order 0 is monotone too.
            if (order >= 1) return std::abs(derivative(order, lo));
            return std::max(std::abs(derivative(0, lo)), std::abs(derivative(0, hi)));
        case Kind::runge:
        case Kind::poly:
            return grid_max_abs(*this, order, lo, hi);
    }
    return 0.0;
}

std::vector<double> geometric_grid(double h_max, double h_min, int points) {
    if (!(h_max > h_min) || !(h_min > 0.0)) {
        throw std::invalid_argument("grid requires h_max > h_min > 0");
    }
    if (points < 2) {
        throw std::invalid_argument("grid needs at least two points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double ratio = std::log(h_min / h_max) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = h_max * std::exp(ratio * i);
    }
    return grid;
}

ConvergenceReport convergence_study(const NodeSet& nodes, int k, const TestFunction& fn,
                                    double t0, std::vector<double> h_grid) {
    if (k <= 0 || k >= nodes.size()) {
        throw std::invalid_argument("derivative order out of range");
    }
    std::sort(h_grid.begin(), h_grid.end(), std::greater<>());
    h_grid.erase(std::unique(h_grid.begin(), h_grid.end()), h_grid.end());
    if (h_grid.empty() || h_grid.back() <= 0.0) {
        throw std::invalid_argument("step grid must be positive");
    }

    const Stencil stencil = generate_stencil(nodes, k);
    const int n = nodes.size();
    const double target = fn.derivative(k, t0);

    ConvergenceReport report;
    report.rows.reserve(h_grid.size());
    for (const double h : h_grid) {
        std::vector<double> samples(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            samples[static_cast<std::size_t>(j)] =
                fn.value(t0 + nodes.offset(j).to_double() * h);
        }
        const double estimate = evaluate_stencil(stencil, samples, h);
        ConvergenceRow row;
        row.h = h;
        row.error = std::abs(target - estimate);
        row.ratio = row.error / std::pow(h, n - k);
        const double floor = 100.0 * std::numeric_limits<double>::epsilon() *
                             std::abs(target) / std::pow(h, k);
        row.used = row.error > 0.0 && row.error >= floor;
        report.rows.push_back(row);
    }

    std::size_t used = 0;
    for (const auto& row : report.rows) used += row.used ? 1 : 0;
    if (used == 0) {
        throw std::runtime_error("grid entirely in roundoff regime");
    }

    // Least-squares slope of log error against log h over the usable rows.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& row : report.rows) {
        if (!row.used) continue;
        const double x = std::log(row.h);
        const double y = std::log(row.error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(used);
    const double denom = m * sxx - sx * sx;
    report.fitted_slope = used >= 2 ? (m * sxy - sx * sy) / denom
                                    : std::numeric_limits<double>::quiet_NaN();

    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (it->used) {
            report.leading_estimate = it->ratio;
            break;
        }
    }
    return report;
}

BoundAuditResult bound_audit(const NodeSet& nodes, int k, const TestFunction& fn,
                             double t0, double h) {
    const Stencil stencil = generate_stencil(nodes, k);
    const int n = nodes.size();

    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        samples[static_cast<std::size_t>(j)] = fn.value(t0 + nodes.offset(j).to_double() * h);
    }
    const double estimate = evaluate_stencil(stencil, samples, h);

    BoundAuditResult result;
    result.measured = std::abs(fn.derivative(k, t0) - estimate);
    const ReferenceInterval interval = nodes.reference_interval(t0, h);
    result.derivative_bound = fn.max_abs_derivative(n, interval.lower, interval.upper);
    result.bound = worst_case_bound(ErrorModel(stencil, result.derivative_bound, h));
    result.ok = result.measured <= result.bound;
    return result;
}

namespace {

std::string double_str(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace

std::string report_to_text(const ConvergenceReport& report) {
    std::ostringstream os;
    os << "h,error,error/h^order,used\n";
    for (const auto& row : report.rows) {
        os << double_str(row.h) << "  " << double_str(row.error) << "  "
           << double_str(row.ratio) << "  " << (row.used ? "yes" : "no") << "\n";
    }
    os << "fitted slope: " << double_str(report.fitted_slope) << "\n";
    os << "leading estimate: " << double_str(report.leading_estimate) << "\n";
    return os.str();
}

std::string report_to_json(const ConvergenceReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"h", row.h},
                        {"error", row.error},
                        {"ratio", row.ratio},
                        {"used", row.used}});
    }
    nlohmann::json j{{"rows", rows},
                     {"fitted_slope", report.fitted_slope},
                     {"leading_estimate", report.leading_estimate}};
    return j.dump();
}

std::string report_to_csv(const ConvergenceReport& report) {
    std::ostringstream os;
    os << "h,error,ratio,used\n";
    for (const auto& row : report.rows) {
        os << double_str(row.h) << ',' << double_str(row.error) << ','
           << double_str(row.ratio) << ',' << (row.used ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace fdstencil
