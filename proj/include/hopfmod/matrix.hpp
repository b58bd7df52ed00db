#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfmod/field.hpp"

namespace hopfmod {

/// Raised on incompatible matrix shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a single exact field. Column vectors are n x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Column vector from entries.
  static Matrix column(Field field, const std::vector<Scalar>& entries);
  /// Integer-valued matrix; convenient for fixtures and tests.
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  /// Standard basis vector e_i of length n.
  static Matrix unit_vector(Field field, std::size_t n, std::size_t i);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  /// Vector access for n x 1 matrices.
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  Scalar& operator[](std::size_t i) { return data_[i]; }

  Matrix col(std::size_t c) const;
  Matrix row(std::size_t r) const;
  void set_col(std::size_t c, const Matrix& v);
  /// Columns [first, first + count).
  Matrix cols_range(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  /// Row-major flattening into a (rows*cols) x 1 vector.
  Matrix vectorized() const;
  static Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols);

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix hcat(const std::vector<Matrix>& blocks, Field field, std::size_t rows);
Matrix vcat(const std::vector<Matrix>& blocks, Field field, std::size_t cols);

/// Kronecker product; basis e_i (x) f_j is ordered with the left index major.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Permutation matrix moving tensor factors. The source space has factors of the given
/// dimensions; output factor t is source factor order[t].
Matrix tensor_permutation(Field field, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& order);

}  // namespace hopfmod
