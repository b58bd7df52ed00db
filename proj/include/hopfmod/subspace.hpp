#pragma once

#include <optional>
#include <vector>

#include "hopfmod/matrix.hpp"

namespace hopfmod {

/// Subspace of k^n held by a canonical basis: the transposed nonzero rows of the RREF of any
/// spanning set. Equal subspaces therefore have identical bases.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of k^n.
  Subspace(Field field, std::size_t ambient);
  /// Span of the columns of `spanning` (dependent columns allowed).
  static Subspace span(const Matrix& spanning);
  static Subspace whole(Field field, std::size_t ambient);

  Field field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient(); }
  /// ambient x dim, independent columns.
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& v) const;
  bool contains(const Subspace& o) const;
  /// Coordinates of v in basis(), or nullopt if v is outside.
  std::optional<Matrix> coordinates(const Matrix& v) const;
  /// Coordinates of every column of vs; throws std::logic_error if any column lies outside.
  Matrix coordinates_of(const Matrix& vs) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// True iff op maps the subspace into itself.
  bool is_invariant(const Matrix& op) const;

  /// Standard basis vectors completing basis() to k^n, chosen by column-pivot order.
  std::vector<std::size_t> complement_coordinates() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix basis_;
};

/// Smallest subspace containing the seeds and stable under every operator.
Subspace invariant_closure(const std::vector<Matrix>& ops, const Matrix& seeds);

}  // namespace hopfmod
