#pragma once

#include <optional>
#include <vector>

#include "hopfmod/matrix.hpp"

namespace hopfmod {

/// Reduced row echelon form with its pivot columns. The RREF of a matrix is unique, so
/// everything derived from it (kernel bases, particular solutions) is deterministic.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

/// Bareiss fraction-free elimination over Q, plain Gauss-Jordan over F_p.
Echelon row_reduce(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Columns form a basis of ker a: one column per free variable, that variable set to 1.
Matrix kernel_basis(const Matrix& a);

/// Some x with a*x = b (free variables zero), or nullopt when inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Column-by-column solve of a*X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Basis of the column space: the pivot columns of a, in order.
Matrix image_basis(const Matrix& a);

/// Monic least-degree polynomial annihilating a square matrix, coefficients by ascending degree.
std::vector<Scalar> minimal_polynomial(const Matrix& a);

/// p(a) for coefficients by ascending degree.
Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& a);

/// Matrix power for square a.
Matrix power(const Matrix& a, std::size_t e);

}  // namespace hopfmod
