#include "fdstencil/selftest.hpp"

#include "fdstencil/error_bounds.hpp"
#include "fdstencil/linalg.hpp"
#include "fdstencil/stencil.hpp"

#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

namespace fdstencil {

namespace {

RationalVector random_distinct_offsets(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> numerator(-40, 40);
    std::uniform_int_distribution<int> denominator(1, 4);
    RationalVector offsets;
    while (static_cast<int>(offsets.size()) < n) {
        Rational candidate(numerator(rng), denominator(rng));
        bool fresh = true;
        for (const Rational& existing : offsets) {
            if (existing == candidate) {
                fresh = false;
                break;
            }
        }
        if (fresh) offsets.push_back(std::move(candidate));
    }
    return offsets;
}

// Cofactor-expansion determinant; the slow reference the closed form is
// checked against.
Rational brute_force_det(const std::vector<RationalVector>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<RationalVector> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            RationalVector row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[i][c]);
            }
            sub.push_back(std::move(row));
        }
        const Rational term = m[0][j] * brute_force_det(sub);
        det += j % 2 == 0 ? term : -term;
    }
    return det;
}

Rational brute_force_minor(const RationalVector& values, std::size_t row, std::size_t col) {
    const std::size_t n = values.size();
    std::vector<RationalVector> minor;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == row) continue;
        RationalVector r;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == col) continue;
            r.push_back(pow(values[j], static_cast<long long>(i)));
        }
        minor.push_back(std::move(r));
    }
    return brute_force_det(minor);
}

struct Check {
    const char* name;
    bool passed;
};

}  // namespace

bool run_selftest(std::ostream& out) {
    std::mt19937 rng(20240307);
    std::vector<Check> checks;

    // Random stencils shared by several checks.
    std::vector<Stencil> stencils;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 8;
        const NodeSet nodes(random_distinct_offsets(rng, n));
        for (int k = 1; k < n; ++k) {
            stencils.push_back(generate_stencil(nodes, k));
        }
    }

    bool moments_ok = true;
    for (const Stencil& s : stencils) {
        for (const Rational& r : moment_report(s)) {
            moments_ok = moments_ok && r.is_zero();
        }
    }
    checks.push_back({"moment conditions", moments_ok});

    bool closed_form_ok = true;
    for (const Stencil& s : stencils) {
        for (int j = 0; j < s.nodes.size(); ++j) {
            closed_form_ok = closed_form_ok &&
                             closed_form_coefficient(s.nodes, s.k, j) ==
                                 s.coefficients[static_cast<std::size_t>(j)];
        }
    }
    checks.push_back({"closed-form coefficients", closed_form_ok});

    bool power_sum_ok = true;
    for (const Stencil& s : stencils) {
        try {
            power_sum_ok = power_sum_ok && weighted_power_sum(s) == s.power_sum;
        } catch (const std::logic_error&) {
            power_sum_ok = false;
        }
    }
    checks.push_back({"power-sum identity", power_sum_ok});

    bool magnitude_ok = true;
    for (const Stencil& s : stencils) {
        const MagnitudeBound mb = coefficient_magnitude_bound(s);
        magnitude_ok = magnitude_ok && mb.actual <= mb.bound &&
                       abs(s.power_sum) <= mb.actual;
    }
    checks.push_back({"magnitude bound", magnitude_ok});

    bool minors_ok = true;
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 4;
        const RationalVector values = random_distinct_offsets(rng, n);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                minors_ok = minors_ok &&
                            vandermonde_minor_det(values, i, j) == brute_force_minor(values, i, j);
            }
        }
    }
    checks.push_back({"minor determinants", minors_ok});

    bool special_ok = true;
    for (int n = 2; n <= 12; ++n) {
        RationalVector uniform;
        for (int i = 1; i <= n; ++i) uniform.push_back(Rational(-i));
        const NodeSet nodes(std::move(uniform));
        for (int k = 1; k <= 2 && k < n; ++k) {
            special_ok = special_ok &&
                         special_case_coefficients(n, k) == generate_stencil(nodes, k).coefficients;
        }
    }
    checks.push_back({"uniform-node specializations", special_ok});

    bool all_ok = true;
    for (const Check& check : checks) {
        out << (check.passed ? "ok" : "FAIL") << " - " << check.name << "\n";
        all_ok = all_ok && check.passed;
    }
    out << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
    return all_ok;
}

}  // namespace fdstencil
