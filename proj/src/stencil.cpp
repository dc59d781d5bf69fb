#include "fdstencil/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fdstencil {

NodeSet::NodeSet(RationalVector offsets) : offsets_(std::move(offsets)) {
    const std::size_t n = offsets_.size();
    if (n < 2) {
        throw std::invalid_argument("at least two nodes required");
    }
    epsilons_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Rational a = abs(offsets_[j]);
        if (j == 0 || a > delta_max_) delta_max_ = a;

        bool have_gap = false;
        Rational gap;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            const Rational d = abs(offsets_[j] - offsets_[i]);
            if (d.is_zero()) {
                throw std::invalid_argument("nodes must be distinct");
            }
            if (!have_gap || d < gap) {
                gap = d;
                have_gap = true;
            }
        }
        epsilons_[j] = gap;
        if (j == 0 || gap < epsilon_) epsilon_ = gap;
    }
}

RationalVector NodeSet::omitting(int j) const {
    if (j < 0 || j >= size()) {
        throw std::out_of_range("node index out of range");
    }
    RationalVector rest;
    rest.reserve(offsets_.size() - 1);
    for (int i = 0; i < size(); ++i) {
        if (i != j) rest.push_back(offsets_[static_cast<std::size_t>(i)]);
    }
    return rest;
}

bool NodeSet::all_negative() const {
    return std::all_of(offsets_.begin(), offsets_.end(),
                       [](const Rational& d) { return d.sign() < 0; });
}

ReferenceInterval NodeSet::reference_interval(double t, double h) const {
    if (!(h > 0.0)) {
        throw std::invalid_argument("step must be positive");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Rational& d : offsets_) {
        const double x = t + d.to_double() * h;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return {lo, hi};
}

namespace {

void require_order_in_range(const NodeSet& nodes, int k) {
    if (k <= 0 || k >= nodes.size()) {
        throw std::invalid_argument("derivative order out of range");
    }
}

Rational closed_form_power_sum(const NodeSet& nodes, int k) {
    const int n = nodes.size();
    Rational s = Rational(factorial(k)) *
                 elementary_symmetric(nodes.offsets(), static_cast<std::size_t>(n - k));
    return (k + n + 1) % 2 == 0 ? s : -s;
}

}  // namespace

Stencil generate_stencil(const NodeSet& nodes, int k) {
    require_order_in_range(nodes, k);
    const int n = nodes.size();

    RationalVector rhs(static_cast<std::size_t>(n));
    rhs[static_cast<std::size_t>(k)] = Rational(factorial(k));
    RationalVector coeffs = solve_vandermonde(nodes.offsets(), rhs);

    Stencil stencil{nodes, k, std::move(coeffs), n - k, Rational(0), Rational(0)};

    const RationalVector residuals = moment_report(stencil);
    for (const Rational& r : residuals) {
        if (!r.is_zero()) {
            throw std::logic_error("moment conditions violated after solve");
        }
    }

    Rational s(0);
    for (int j = 0; j < n; ++j) {
        s += stencil.coefficients[static_cast<std::size_t>(j)] * pow(nodes.offset(j), n);
    }
    stencil.power_sum = std::move(s);
    stencil.leading_coefficient = -stencil.power_sum / Rational(factorial(n));
    return stencil;
}

Rational closed_form_coefficient(const NodeSet& nodes, int k, int j) {
    require_order_in_range(nodes, k);
    if (j < 0 || j >= nodes.size()) {
        throw std::out_of_range("node index out of range");
    }
    const int n = nodes.size();
    const RationalVector rest = nodes.omitting(j);

    Rational denom(1);
    for (const Rational& d : rest) {
        denom *= nodes.offset(j) - d;
    }
    const Rational numer = Rational(factorial(k)) *
                           elementary_symmetric(rest, static_cast<std::size_t>(n - k - 1));
    const Rational c = numer / denom;
    return (n + k + 1) % 2 == 0 ? c : -c;
}

RationalVector special_case_coefficients(int n, int k) {
    if (k != 1 && k != 2) {
        throw std::invalid_argument("special case covers k=1,2 only");
    }
    if (n < 2 || k >= n) {
        throw std::invalid_argument("derivative order out of range");
    }

    // Offsets are -1, -2, ..., -n. H is the n-th harmonic number.
    Rational harmonic(0);
    RationalVector reciprocals;
    reciprocals.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Rational r = Rational(1) / Rational(i);
        harmonic += r;
        reciprocals.push_back(r);
    }

    RationalVector coeffs(static_cast<std::size_t>(n));
    if (k == 1) {
        for (int j = 1; j <= n; ++j) {
            Rational c = Rational(binomial(n, j)) * (harmonic - Rational(1) / Rational(j));
            coeffs[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? c : -c;
        }
    } else {
        const Rational sigma2 = elementary_symmetric(reciprocals, 2);
        for (int j = 1; j <= n; ++j) {
            const Rational inv_j = Rational(1) / Rational(j);
            Rational c = Rational(2) * Rational(binomial(n, j)) *
                         (sigma2 - inv_j * (harmonic - inv_j));
            coeffs[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? c : -c;
        }
    }
    return coeffs;
}

RationalVector moment_report(const NodeSet& nodes, int k,
                             std::span<const Rational> coefficients) {
    const int n = nodes.size();
    if (coefficients.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("coefficient count does not match node count");
    }
    RationalVector residuals(static_cast<std::size_t>(n));
    RationalVector powers(static_cast<std::size_t>(n), Rational(1));
    for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) {
            acc += coefficients[static_cast<std::size_t>(j)] * powers[static_cast<std::size_t>(j)];
        }
        if (i == k) acc -= Rational(factorial(k));
        residuals[static_cast<std::size_t>(i)] = std::move(acc);
        for (int j = 0; j < n; ++j) {
            powers[static_cast<std::size_t>(j)] *= nodes.offset(j);
        }
    }
    return residuals;
}

RationalVector moment_report(const Stencil& stencil) {
    return moment_report(stencil.nodes, stencil.k, stencil.coefficients);
}

Rational weighted_power_sum(const Stencil& stencil) {
    const int n = stencil.nodes.size();
    Rational s(0);
    for (int j = 0; j < n; ++j) {
        s += stencil.coefficients[static_cast<std::size_t>(j)] * pow(stencil.nodes.offset(j), n);
    }
    if (s != closed_form_power_sum(stencil.nodes, stencil.k)) {
        throw std::logic_error("weighted power sum disagrees with closed form");
    }
    return s;
}

double evaluate_stencil(const Stencil& stencil, std::span<const double> samples, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("step must be positive");
    }
    const std::size_t n = stencil.coefficients.size();
    if (samples.size() != n) {
        throw std::invalid_argument("sample count does not match node count");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += stencil.coefficients[j].to_double() * samples[j];
    }
    double scale = 1.0;
    for (int i = 0; i < stencil.k; ++i) scale *= h;
    return acc / scale;
}

Rational evaluate_stencil(const Stencil& stencil, std::span<const Rational> samples,
                          const Rational& h) {
    if (h.sign() <= 0) {
        throw std::invalid_argument("step must be positive");
    }
    const std::size_t n = stencil.coefficients.size();
    if (samples.size() != n) {
        throw std::invalid_argument("sample count does not match node count");
    }
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        acc += stencil.coefficients[j] * samples[j];
    }
    return acc / pow(h, stencil.k);
}

}  // namespace fdstencil
