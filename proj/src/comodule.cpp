#include "hopfmod/comodule.hpp"

#include "hopfmod/linalg.hpp"

namespace hopfmod {

Diagnostics check_comodule(const Comodule& m) {
  const HopfAlgebra& h = *m.hopf;
  const std::size_t n = m.dim, d = h.dim();
  if (m.coaction.rows() != n * d || m.coaction.cols() != n) throw DimensionError("coaction table shape");
  Diagnostics out;
  const Field f = h.field();
  const Matrix id_h = Matrix::identity(f, d), id_m = Matrix::identity(f, n);
  const Matrix lhs = kronecker(m.coaction, id_h) * m.coaction;
  const Matrix rhs = kronecker(id_m, h.comult()) * m.coaction;
  const Matrix counit = kronecker(id_m, h.counit()) * m.coaction;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lhs.col(i) == rhs.col(i))) out.push_back({"coaction coassociativity", {i}});
    if (!(counit.col(i) == id_m.col(i))) out.push_back({"coaction counit", {i}});
  }
  return out;
}

Comodule regular_comodule(const HopfPtr& h) { return {h, h->dim(), h->comult()}; }

Comodule trivial_comodule(const HopfPtr& h, std::size_t dim) {
  return {h, dim, kronecker(Matrix::identity(h->field(), dim), h->unit())};
}

Comodule one_dim_comodule(const HopfPtr& h, std::size_t h_index) {
  return {h, 1, Matrix::unit_vector(h->field(), h->dim(), h_index)};
}

Comodule tensor_comodules(const Comodule& m, const Comodule& n) {
  const HopfAlgebra& h = *m.hopf;
  const Field f = h.field();
  const std::size_t d = h.dim();
  // m_a h_l n_b h_k  ->  m_a n_b h_l h_k  ->  m_a n_b (h_l h_k)
  const Matrix reorder = tensor_permutation(f, {m.dim, d, n.dim, d}, {0, 2, 1, 3});
  const Matrix multiply = kronecker(Matrix::identity(f, m.dim * n.dim), h.mult());
  return {m.hopf, m.dim * n.dim, multiply * reorder * kronecker(m.coaction, n.coaction)};
}

Matrix tensor_unit(const Comodule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim), m.hopf->unit());
}

Matrix coinvariance_map(const Comodule& m) { return m.coaction - tensor_unit(m); }

Subspace coinvariants(const Comodule& m) { return Subspace::span(kernel_basis(coinvariance_map(m))); }

Matrix first_leg(const Comodule& m, std::size_t k) {
  const Matrix functional = Matrix::unit_vector(m.field(), m.hopf->dim(), k).transpose();
  return kronecker(Matrix::identity(m.field(), m.dim), functional) * m.coaction;
}

std::vector<Matrix> first_legs(const Comodule& m) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < m.hopf->dim(); ++k) out.push_back(first_leg(m, k));
  return out;
}

bool is_colinear(const Matrix& f, const Comodule& m, const Comodule& n) {
  if (f.rows() != n.dim || f.cols() != m.dim) throw DimensionError("is_colinear: map does not fit the comodules");
  return n.coaction * f == kronecker(f, Matrix::identity(m.field(), m.hopf->dim())) * m.coaction;
}

bool is_subcomodule(const Comodule& m, const Subspace& w) {
  const Matrix image = m.coaction * w.basis();
  const Subspace target = Subspace::span(kronecker(w.basis(), Matrix::identity(m.field(), m.hopf->dim())));
  for (std::size_t c = 0; c < image.cols(); ++c)
    if (!target.contains(image.col(c))) return false;
  return true;
}

Comodule restrict_comodule(const Comodule& m, const Subspace& w) {
  const Matrix wh = kronecker(w.basis(), Matrix::identity(m.field(), m.hopf->dim()));
  auto coeffs = solve_matrix(wh, m.coaction * w.basis());
  if (!coeffs) throw std::logic_error("restrict_comodule: subspace is not a subcomodule");
  return {m.hopf, w.dim(), *coeffs};
}

Subspace generated_subcomodule(const Comodule& m, const Matrix& v) {
  return invariant_closure(first_legs(m), v);
}

CosemisimplicityResult is_cosemisimple(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const Field f = h.field();
  // Unknown lambda as a column; equation rows: (id (x) lambda) Delta(e_i) - lambda(e_i) 1 = 0.
  Matrix system(f, d * d + 1, d);
  Matrix rhs(f, d * d + 1, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        system(i * d + j, k) += h.comult()(j * d + k, i);
        if (k == i) system(i * d + j, k) -= h.unit()[j];
      }
  for (std::size_t k = 0; k < d; ++k) system(d * d, k) = h.unit()[k];
  rhs[d * d] = Scalar::one(f);
  auto sol = solve_linear(system, rhs);
  if (!sol) return {};
  return {true, sol->transpose()};
}

bool is_normalized_integral(const HopfAlgebra& h, const Matrix& lambda) {
  if (lambda.rows() != 1 || lambda.cols() != h.dim()) return false;
  const Matrix id = Matrix::identity(h.field(), h.dim());
  return (lambda * h.unit())(0, 0).is_one() && kronecker(id, lambda) * h.comult() == h.unit() * lambda;
}

bool is_grouplike_basis(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix e = Matrix::unit_vector(h.field(), d, i);
    if (!(h.comult() * e == kronecker(e, e)) || !(h.counit() * e)(0, 0).is_one()) return false;
  }
  return true;
}

}  // namespace hopfmod
