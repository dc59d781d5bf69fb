#pragma once

#include "fdstencil/rational.hpp"

#include <cstddef>
#include <span>

namespace fdstencil {

/// Dense row-major matrix of exact rationals. Dimensions are fixed at
/// construction and checked on every operation.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    /// V with V(i, j) = values[j]^i, rows indexed from 0.
    static RationalMatrix vandermonde(std::span<const Rational> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    RationalVector multiply(std::span<const Rational> x) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    RationalVector data_;
};

/// Sum over all degree-element subsets of the product of subset members.
/// Degree 0 gives 1; degree beyond the list size gives 0. One incremental
/// pass, O(size * degree) multiplications.
Rational elementary_symmetric(std::span<const Rational> values, std::size_t degree);

/// Product of (values[j] - values[i]) over all pairs i < j. A repeated value
/// makes the product zero.
Rational vandermonde_det(std::span<const Rational> values);

/// Determinant of the matrix obtained by deleting row `row` and column `col`
/// (0-based) from the Vandermonde matrix of `values`, via the closed form
/// v(values without col) * sigma_{n-1, n-1-row}(values without col).
Rational vandermonde_minor_det(std::span<const Rational> values, std::size_t row,
                               std::size_t col);

/// Exact solution of V(values) x = rhs with V(i, j) = values[j]^i.
/// The system is singular exactly when two values coincide.
RationalVector solve_vandermonde(std::span<const Rational> values,
                                 std::span<const Rational> rhs);

}  // namespace fdstencil
