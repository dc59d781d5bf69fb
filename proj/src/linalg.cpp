#include "fdstencil/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fdstencil {

namespace {

bool has_duplicates(std::span<const Rational> values) {
    RationalVector sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
}

RationalMatrix RationalMatrix::vandermonde(std::span<const Rational> values) {
    const std::size_t n = values.size();
    RationalMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational p(1);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, j) = p;
            if (i + 1 < n) p *= values[j];
        }
    }
    return m;
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return data_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return data_[i * cols_ + j];
}

RationalVector RationalMatrix::multiply(std::span<const Rational> x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("vector length does not match matrix columns");
    }
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += data_[i * cols_ + j] * x[j];
        }
        y[i] = std::move(acc);
    }
    return y;
}

Rational elementary_symmetric(std::span<const Rational> values, std::size_t degree) {
    if (degree == 0) return Rational(1);
    if (degree > values.size()) return Rational(0);

    // e[d] after processing m values holds sigma_{m,d}.
    RationalVector e(degree + 1);
    e[0] = Rational(1);
    std::size_t seen = 0;
    for (const Rational& v : values) {
        ++seen;
        for (std::size_t d = std::min(seen, degree); d >= 1; --d) {
            e[d] += v * e[d - 1];
        }
    }
    return e[degree];
}

Rational vandermonde_det(std::span<const Rational> values) {
    Rational det(1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            det *= values[j] - values[i];
        }
    }
    return det;
}

Rational vandermonde_minor_det(std::span<const Rational> values, std::size_t row,
                               std::size_t col) {
    const std::size_t n = values.size();
    if (row >= n || col >= n) {
        throw std::out_of_range("minor index out of range");
    }
    if (has_duplicates(values)) {
        throw std::invalid_argument("nodes must be distinct");
    }
    RationalVector rest;
    rest.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j != col) rest.push_back(values[j]);
    }
    return vandermonde_det(rest) * elementary_symmetric(rest, n - 1 - row);
}

RationalVector solve_vandermonde(std::span<const Rational> values,
                                 std::span<const Rational> rhs) {
    const std::size_t n = values.size();
    if (rhs.size() != n) {
        throw std::invalid_argument("right-hand side length does not match system size");
    }
    if (n == 0) return {};
    if (has_duplicates(values)) {
        throw std::invalid_argument("singular Vandermonde system");
    }

    // Exact Gaussian elimination on the augmented matrix. Pivoting picks the
    // first nonzero entry; exact arithmetic needs no magnitude heuristics.
    RationalMatrix m(n, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Rational p(1);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, j) = p;
            if (i + 1 < n) p *= values[j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, n) = rhs[i];
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw std::logic_error("unexpected zero pivot in Vandermonde elimination");
        }
        if (pivot != col) {
            for (std::size_t j = col; j <= n; ++j) {
                std::swap(m.at(col, j), m.at(pivot, j));
            }
        }
        const Rational inv = m.at(col, col).reciprocal();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational factor = m.at(i, col) * inv;
            m.at(i, col) = Rational(0);
            for (std::size_t j = col + 1; j <= n; ++j) {
                m.at(i, j) -= factor * m.at(col, j);
            }
        }
    }

    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = m.at(i, n);
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= m.at(i, j) * x[j];
        }
        x[i] = acc / m.at(i, i);
    }
    return x;
}

}  // namespace fdstencil
