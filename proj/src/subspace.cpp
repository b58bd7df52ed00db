#include "hopfmod/subspace.hpp"

#include <stdexcept>

#include "hopfmod/linalg.hpp"

namespace hopfmod {

Subspace::Subspace(Field field, std::size_t ambient) : basis_(field, ambient, 0) {}

Subspace Subspace::span(const Matrix& spanning) {
  const Echelon e = row_reduce(spanning.transpose());
  Subspace s(spanning.field(), spanning.rows());
  s.basis_ = e.rref.rows_range(0, e.pivots.size()).transpose();
  return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  return span(Matrix::identity(field, ambient));
}

bool Subspace::contains(const Matrix& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient() != ambient()) throw DimensionError("subspace ambient mismatch");
  for (std::size_t c = 0; c < o.dim(); ++c)
    if (!contains(o.basis_.col(c))) return false;
  return true;
}

std::optional<Matrix> Subspace::coordinates(const Matrix& v) const {
  if (v.rows() != ambient() || v.cols() != 1) throw DimensionError("subspace vector mismatch");
  return solve_linear(basis_, v);
}

Matrix Subspace::coordinates_of(const Matrix& vs) const {
  if (vs.rows() != ambient()) throw DimensionError("subspace vector mismatch");
  auto c = solve_matrix(basis_, vs);
  if (!c) throw std::logic_error("vector outside subspace");
  return *c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.ambient() != ambient()) throw DimensionError("subspace ambient mismatch");
  return span(hcat(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient() != ambient()) throw DimensionError("subspace ambient mismatch");
  // x in both iff x = U a = V b; solve [U | -V] (a, b) = 0.
  const Matrix k = kernel_basis(hcat(basis_, -o.basis_));
  return span(basis_ * k.rows_range(0, dim()));
}

bool Subspace::is_invariant(const Matrix& op) const {
  if (!op.is_square() || op.rows() != ambient()) throw DimensionError("operator/subspace mismatch");
  const Matrix img = op * basis_;
  for (std::size_t c = 0; c < img.cols(); ++c)
    if (!contains(img.col(c))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  const Echelon e = row_reduce(hcat(basis_, Matrix::identity(field(), ambient())));
  std::vector<std::size_t> out;
  for (auto p : e.pivots)
    if (p >= dim()) out.push_back(p - dim());
  return out;
}

Subspace invariant_closure(const std::vector<Matrix>& ops, const Matrix& seeds) {
  Subspace s = Subspace::span(seeds);
  while (true) {
    Matrix gens = s.basis();
    for (const auto& op : ops) gens = hcat(gens, op * s.basis());
    Subspace next = Subspace::span(gens);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

}  // namespace hopfmod
