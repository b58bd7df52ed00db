#include "hopfmod/relhopf.hpp"

#include "hopfmod/linalg.hpp"

namespace hopfmod {

namespace {

Matrix id(Field f, std::size_t n) { return Matrix::identity(f, n); }

Matrix combine_action(const std::vector<Matrix>& action, const Matrix& a, Field f, std::size_t dim) {
  Matrix r(f, dim, dim);
  for (std::size_t i = 0; i < action.size(); ++i)
    if (!a[i].is_zero()) r = r + action[i].scaled(a[i]);
  return r;
}

// The map H (x) H -> H, h (x) h' -> S^{-1}(h') h.
Matrix twisted_product(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  return h.mult() * kronecker(h.antipode_inv(), id(h.field(), d)) * tensor_permutation(h.field(), {d, d}, {1, 0});
}

// Coaction of a quotient by relations: requires rho(relations) inside relations (x) H.
Matrix induced_coaction(const Quotient& q, const Matrix& coaction, const HopfAlgebra& h) {
  const Matrix idh = id(h.field(), h.dim());
  const Subspace target = Subspace::span(kronecker(q.relations.basis(), idh));
  const Matrix image = coaction * q.relations.basis();
  for (std::size_t c = 0; c < image.cols(); ++c)
    if (!target.contains(image.col(c))) throw std::logic_error("coaction does not preserve the relations");
  return kronecker(q.projection, idh) * coaction * q.section;
}

}  // namespace

// ---------------------------------------------------------------------------
// Comodule algebras

Matrix ComoduleAlgebra::coinvariant_left_mult(std::size_t t) const {
  return algebra_.left_mult(coinvariants_.basis().col(t));
}

ComoduleAlgebraValidation validate_comodule_algebra(const FinAlgebra& algebra, const Comodule& coaction) {
  if (coaction.dim != algebra.dim) throw DimensionError("comodule algebra: coaction and algebra dimensions differ");
  if (!(coaction.field() == algebra.field)) throw FieldError("comodule algebra over mixed fields");
  ComoduleAlgebraValidation out;
  auto& diags = out.diagnostics;
  for (auto& d : check_algebra(algebra)) diags.push_back(d);
  for (auto& d : check_comodule(coaction)) diags.push_back(d);

  const HopfAlgebra& h = *coaction.hopf;
  const Field f = algebra.field;
  const std::size_t n = algebra.dim, d = h.dim();
  if (!(coaction.coaction * algebra.unit == kronecker(algebra.unit, h.unit())))
    diags.push_back({"unit colinearity", {}});
  const Matrix lhs = coaction.coaction * algebra.mult;
  const Matrix rhs = kronecker(algebra.mult, h.mult()) * tensor_permutation(f, {n, d, n, d}, {0, 2, 1, 3}) *
                     kronecker(coaction.coaction, coaction.coaction);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(lhs.col(i * n + j) == rhs.col(i * n + j))) diags.push_back({"multiplicativity", {i, j}});
  if (!diags.empty()) return out;

  const Subspace b = coinvariants(coaction);
  const std::size_t r = b.dim();
  FinAlgebra balg{f, r, Matrix(f, r, r * r), Matrix(f, r, 1)};
  bool closed = b.contains(algebra.unit);
  for (std::size_t s = 0; s < r && closed; ++s)
    for (std::size_t t = 0; t < r && closed; ++t) {
      auto c = b.coordinates(algebra.product(b.basis().col(s), b.basis().col(t)));
      if (!c) {
        closed = false;
        break;
      }
      balg.mult.set_col(s * r + t, *c);
    }
  if (!closed) {
    diags.push_back({"coinvariants not a subalgebra", {}});
    return out;
  }
  balg.unit = *b.coordinates(algebra.unit);

  auto a = std::shared_ptr<ComoduleAlgebra>(new ComoduleAlgebra());
  a->algebra_ = algebra;
  a->coaction_ = coaction;
  a->coinvariants_ = b;
  a->coinvariant_algebra_ = std::move(balg);
  a->commutative_ = algebra.is_commutative();
  out.algebra = std::move(a);
  return out;
}

AlgebraPtr regular_comodule_algebra(const HopfPtr& h) {
  auto v = validate_comodule_algebra(h->algebra(), regular_comodule(h));
  if (!v.ok()) throw std::logic_error("H over itself failed validation");
  return v.algebra;
}

AlgebraPtr trivial_comodule_algebra(const HopfPtr& h) {
  const Field f = h->field();
  FinAlgebra k{f, 1, Matrix::identity(f, 1), Matrix::identity(f, 1)};
  auto v = validate_comodule_algebra(k, trivial_comodule(h, 1));
  if (!v.ok()) throw std::logic_error("trivial comodule algebra failed validation");
  return v.algebra;
}

bool is_hopf_itself(const ComoduleAlgebra& a) {
  const HopfAlgebra& h = *a.hopf();
  return a.dim() == h.dim() && a.algebra().mult == h.mult() && a.algebra().unit == h.unit() &&
         a.coaction().coaction == h.comult();
}

// ---------------------------------------------------------------------------
// Relative Hopf modules

Matrix RelHopfModule::act(const Matrix& a) const { return combine_action(action_, a, field(), dim()); }

Matrix RelHopfModule::action_map() const {
  Matrix m(field(), dim(), 0);
  for (const auto& l : action_) m = hcat(m, l);
  // hcat of the blocks puts column i*dim + j = e_i m_j.
  return m;
}

RelHopfModuleValidation validate_relhopf(const AlgebraPtr& over, std::vector<Matrix> action, Matrix coaction) {
  const ComoduleAlgebra& a = *over;
  const HopfAlgebra& h = *a.hopf();
  const Field f = a.field();
  const std::size_t na = a.dim(), d = h.dim();
  if (action.size() != na) throw DimensionError("module action: one matrix per basis vector of A expected");
  const std::size_t n = coaction.cols();
  if (coaction.rows() != n * d) throw DimensionError("module coaction table shape");
  for (const auto& l : action)
    if (l.rows() != n || l.cols() != n) throw DimensionError("module action matrix shape");

  RelHopfModuleValidation out;
  auto& diags = out.diagnostics;
  if (!(combine_action(action, a.algebra().unit, f, n) == id(f, n))) diags.push_back({"module unit", {}});
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Matrix prod = a.algebra().product(a.algebra().basis_vector(i), a.algebra().basis_vector(j));
      if (!(action[i] * action[j] == combine_action(action, prod, f, n)))
        diags.push_back({"module associativity", {i, j}});
    }
  Comodule co{a.hopf(), n, coaction};
  for (auto& dg : check_comodule(co)) diags.push_back(dg);

  Matrix act_map(f, n, 0);
  for (const auto& l : action) act_map = hcat(act_map, l);
  const Matrix lhs = coaction * act_map;
  const Matrix rhs = kronecker(act_map, h.mult()) * tensor_permutation(f, {na, d, n, d}, {0, 2, 1, 3}) *
                     kronecker(a.coaction().coaction, coaction);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(lhs.col(i * n + j) == rhs.col(i * n + j))) diags.push_back({"compatibility", {i, j}});
  if (!diags.empty()) return out;

  Subspace coinv = coinvariants(co);
  for (std::size_t t = 0; t < a.coinvariants().dim(); ++t)
    if (!coinv.is_invariant(combine_action(action, a.coinvariants().basis().col(t), f, n)))
      diags.push_back({"coinvariants not a B-module", {t}});
  if (!diags.empty()) return out;

  RelHopfModule m;
  m.over_ = over;
  m.action_ = std::move(action);
  m.coaction_ = std::move(co);
  m.coinvariants_ = std::move(coinv);
  out.module = std::move(m);
  return out;
}

RelHopfModule make_relhopf(const AlgebraPtr& over, std::vector<Matrix> action, Matrix coaction) {
  auto v = validate_relhopf(over, std::move(action), std::move(coaction));
  if (!v.ok()) {
    std::string msg = "construction is not a relative Hopf module:";
    for (const auto& d : v.diagnostics) msg += " " + d.to_string();
    throw std::logic_error(msg);
  }
  return std::move(*v.module);
}

RelHopfModule regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->algebra().left_mult(a->algebra().basis_vector(i)));
  return make_relhopf(a, std::move(action), a->coaction().coaction);
}

RelHopfModule zero_module(const AlgebraPtr& a) {
  const Field f = a->field();
  return make_relhopf(a, std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)), Matrix(f, 0, 0));
}

RelHopfModule direct_sum(const RelHopfModule& m, const RelHopfModule& n) {
  const Field f = m.field();
  const std::size_t a = m.dim(), b = n.dim(), d = m.hopf()->dim();
  auto block = [&](const Matrix& x, const Matrix& y, std::size_t xr, std::size_t yr) {
    Matrix out(f, xr + yr, a + b);
    for (std::size_t r = 0; r < xr; ++r)
      for (std::size_t c = 0; c < a; ++c) out(r, c) = x(r, c);
    for (std::size_t r = 0; r < yr; ++r)
      for (std::size_t c = 0; c < b; ++c) out(xr + r, a + c) = y(r, c);
    return out;
  };
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.action().size(); ++i) action.push_back(block(m.action()[i], n.action()[i], a, b));
  return make_relhopf(m.over(), std::move(action), block(m.coaction().coaction, n.coaction().coaction, a * d, b * d));
}

RelHopfModule free_module(const AlgebraPtr& a, std::size_t r) {
  const Field f = a->field();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i)
    action.push_back(kronecker(id(f, r), a->algebra().left_mult(a->algebra().basis_vector(i))));
  return make_relhopf(a, std::move(action), kronecker(id(f, r), a->coaction().coaction));
}

bool is_subobject(const RelHopfModule& m, const Subspace& w) {
  for (const auto& l : m.action())
    if (!w.is_invariant(l)) return false;
  return is_subcomodule(m.coaction(), w);
}

RelHopfModule restrict_module(const RelHopfModule& m, const Subspace& w) {
  if (!is_subobject(m, w)) throw std::logic_error("restrict_module: subspace is not a subobject");
  std::vector<Matrix> action;
  for (const auto& l : m.action()) action.push_back(w.coordinates_of(l * w.basis()));
  return make_relhopf(m.over(), std::move(action), restrict_comodule(m.coaction(), w).coaction);
}

bool is_a_linear(const Matrix& f, const RelHopfModule& source, const RelHopfModule& target) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) throw DimensionError("map does not fit the modules");
  for (std::size_t i = 0; i < source.action().size(); ++i)
    if (!(f * source.action()[i] == target.action()[i] * f)) return false;
  return true;
}

bool is_morphism(const Matrix& f, const RelHopfModule& source, const RelHopfModule& target) {
  return is_a_linear(f, source, target) && is_colinear(f, source.coaction(), target.coaction());
}

// ---------------------------------------------------------------------------
// B-modules

Matrix BModule::act(const Matrix& b) const { return combine_action(action, b, over->field(), dim); }

Diagnostics check_bmodule(const BModule& p) {
  const FinAlgebra& b = p.over->coinvariant_algebra();
  const Field f = b.field;
  if (p.action.size() != b.dim) throw DimensionError("B-module action: one matrix per basis vector of B expected");
  for (const auto& l : p.action)
    if (l.rows() != p.dim || l.cols() != p.dim) throw DimensionError("B-module action matrix shape");
  Diagnostics out;
  if (!(p.act(b.unit) == id(f, p.dim))) out.push_back({"bmodule unit", {}});
  for (std::size_t s = 0; s < b.dim; ++s)
    for (std::size_t t = 0; t < b.dim; ++t)
      if (!(p.action[s] * p.action[t] == p.act(b.mult.col(s * b.dim + t))))
        out.push_back({"bmodule associativity", {s, t}});
  return out;
}

BModule regular_bmodule(const AlgebraPtr& a) { return free_bmodule(a, 1); }

BModule free_bmodule(const AlgebraPtr& a, std::size_t r) {
  const FinAlgebra& b = a->coinvariant_algebra();
  BModule p{a, r * b.dim, {}};
  for (std::size_t t = 0; t < b.dim; ++t) p.action.push_back(kronecker(id(b.field, r), b.left_mult(b.basis_vector(t))));
  return p;
}

BModule coinvariant_bmodule(const RelHopfModule& m) {
  const AlgebraPtr& a = m.over();
  const Subspace& w = m.coinvariants();
  BModule p{a, w.dim(), {}};
  for (std::size_t t = 0; t < a->coinvariants().dim(); ++t)
    p.action.push_back(w.coordinates_of(m.act(a->coinvariants().basis().col(t)) * w.basis()));
  return p;
}

bool is_b_linear(const Matrix& f, const BModule& source, const BModule& target) {
  if (f.rows() != target.dim || f.cols() != source.dim) throw DimensionError("map does not fit the B-modules");
  for (std::size_t t = 0; t < source.action.size(); ++t)
    if (!(f * source.action[t] == target.action[t] * f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hom spaces

Matrix MapSpace::combine(const Matrix& coeffs) const { return Matrix::unvectorize(basis * coeffs, rows, cols); }

std::optional<Matrix> MapSpace::coordinates(const Matrix& f) const {
  if (f.rows() != rows || f.cols() != cols) throw DimensionError("map outside the MapSpace shape");
  return solve_linear(basis, f.vectorized());
}

Matrix a_linearity_constraints(const RelHopfModule& source, const RelHopfModule& target) {
  const Field f = source.field();
  const std::size_t r = target.dim(), c = source.dim();
  Matrix rows(f, 0, r * c);
  // vec(X F Y) = (X (x) Y^T) vec(F) for row-major vec.
  for (std::size_t i = 0; i < source.action().size(); ++i)
    rows = vcat(rows, kronecker(target.action()[i], id(f, c)) - kronecker(id(f, r), source.action()[i].transpose()));
  return rows;
}

Matrix colinearity_constraints(const Comodule& source, const Comodule& target) {
  const Field f = source.field();
  const std::size_t r = target.dim, c = source.dim, d = source.hopf->dim();
  Matrix rows = kronecker(target.coaction, id(f, c));
  // ((F (x) id_H) rho_S)[a*d + l][j] = sum_b F[a][b] rho_S[b*d + l][j].
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t b = 0; b < c; ++b) {
          const Scalar& x = source.coaction(b * d + l, j);
          if (!x.is_zero()) rows((a * d + l) * c + j, a * c + b) -= x;
        }
  return rows;
}

MapSpace a_linear_maps(const RelHopfModule& m, const RelHopfModule& n) {
  return {n.dim(), m.dim(), kernel_basis(a_linearity_constraints(m, n))};
}

MapSpace morphism_space(const RelHopfModule& m, const RelHopfModule& n) {
  return {n.dim(), m.dim(),
          kernel_basis(vcat(a_linearity_constraints(m, n), colinearity_constraints(m.coaction(), n.coaction())))};
}

Matrix hom_coaction_of(const Matrix& f, const RelHopfModule& m, const RelHopfModule& n) {
  const HopfAlgebra& h = *m.hopf();
  const Field fld = h.field();
  return kronecker(id(fld, n.dim()), twisted_product(h)) * kronecker(n.coaction().coaction * f, id(fld, h.dim())) *
         m.coaction().coaction;
}

HomSpace hom_space(const RelHopfModule& m, const RelHopfModule& n) {
  const HopfAlgebra& h = *m.hopf();
  const Field f = h.field();
  const std::size_t d = h.dim();
  HomSpace out;
  out.maps = a_linear_maps(m, n);
  const std::size_t dim = out.maps.dim();
  Matrix coaction(f, dim * d, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const Matrix t = hom_coaction_of(out.maps.map(s), m, n);
    for (std::size_t k = 0; k < d; ++k) {
      const Matrix component =
          kronecker(id(f, n.dim()), Matrix::unit_vector(f, d, k).transpose()) * t;
      auto c = out.maps.coordinates(component);
      if (!c) {
        out.well_defined = false;
        continue;
      }
      for (std::size_t s2 = 0; s2 < dim; ++s2) coaction(s2 * d + k, s) = (*c)[s2];
    }
  }
  out.comodule = Comodule{m.hopf(), dim, coaction};
  out.coassociative = out.well_defined && check_comodule(out.comodule).empty();
  return out;
}

bool hom_coinvariants_equal_colinear(const RelHopfModule& m, const RelHopfModule& n) {
  const HomSpace hs = hom_space(m, n);
  if (!hs.well_defined) return false;
  const Subspace co = coinvariants(hs.comodule);
  const Subspace from_pi = Subspace::span(hs.maps.basis * co.basis());
  return from_pi == morphism_space(m, n).as_subspace();
}

RelHopfModule hom_from_regular(const RelHopfModule& n, MapSpace* maps_out) {
  const AlgebraPtr& a = n.over();
  const RelHopfModule ra = regular_module(a);
  HomSpace hs = hom_space(ra, n);
  if (!hs.well_defined) throw std::logic_error("hom_from_regular: pi not well defined");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    const Matrix right = a->algebra().right_mult(a->algebra().basis_vector(i));
    Matrix l(n.field(), hs.maps.dim(), hs.maps.dim());
    for (std::size_t s = 0; s < hs.maps.dim(); ++s) {
      auto c = hs.maps.coordinates(hs.maps.map(s) * right);
      if (!c) throw std::logic_error("hom_from_regular: f(- a) is not A-linear");
      l.set_col(s, *c);
    }
    action.push_back(std::move(l));
  }
  if (maps_out) *maps_out = hs.maps;
  return make_relhopf(a, std::move(action), hs.comodule.coaction);
}

EvalIso eval_iso_psi(const RelHopfModule& n) {
  EvalIso out;
  auto target = std::make_shared<const RelHopfModule>(n);
  auto hom = std::make_shared<const RelHopfModule>(hom_from_regular(n, &out.maps));
  const AlgebraPtr& a = n.over();
  const Field f = n.field();
  const std::size_t dh = out.maps.dim();
  Matrix psi(f, n.dim(), dh);
  for (std::size_t s = 0; s < dh; ++s) psi.set_col(s, out.maps.map(s) * a->algebra().unit);
  Matrix psi_inv(f, dh, n.dim());
  for (std::size_t j = 0; j < n.dim(); ++j) {
    Matrix r(f, n.dim(), a->dim());
    const Matrix nj = Matrix::unit_vector(f, n.dim(), j);
    for (std::size_t i = 0; i < a->dim(); ++i) r.set_col(i, n.action()[i] * nj);
    auto c = out.maps.coordinates(r);
    if (!c) throw std::logic_error("eval_iso_psi: a -> a n is not A-linear");
    psi_inv.set_col(j, *c);
  }
  out.hom = hom;
  out.psi = {hom, target, std::move(psi)};
  out.psi_inv = {target, hom, std::move(psi_inv)};
  return out;
}

// ---------------------------------------------------------------------------
// Tensor constructions

RelHopfModule tensor_with_comodule(const RelHopfModule& n, const Comodule& v) {
  const Field f = n.field();
  std::vector<Matrix> action;
  for (const auto& l : n.action()) action.push_back(kronecker(l, id(f, v.dim)));
  return make_relhopf(n.over(), std::move(action), tensor_comodules(n.coaction(), v).coaction);
}

RelHopfModule tensor_commutative_H(const Comodule& v, const RelHopfModule& n) {
  if (!n.hopf()->is_commutative()) throw PreconditionError("H is not commutative");
  const Field f = n.field();
  std::vector<Matrix> action;
  for (const auto& l : n.action()) action.push_back(kronecker(id(f, v.dim), l));
  return make_relhopf(n.over(), std::move(action), tensor_comodules(v, n.coaction()).coaction);
}

Matrix Quotient::induced(const Matrix& op) const {
  if (!relations.is_invariant(op)) throw std::logic_error("operator does not preserve the relations");
  return projection * op * section;
}

Quotient quotient_by(const Subspace& relations) {
  const Field f = relations.field();
  const auto comp = relations.complement_coordinates();
  const Matrix section = Matrix::identity(f, relations.ambient()).select_cols(comp);
  auto inv = inverse(hcat(relations.basis(), section));
  if (!inv) throw std::logic_error("quotient_by: complement is not complementary");
  return {relations, inv->rows_range(relations.dim(), comp.size()), section};
}

TensorProduct tensor_over_A(const RelHopfModule& m, const RelHopfModule& n) {
  const AlgebraPtr& a = m.over();
  if (!a->is_commutative()) throw PreconditionError("A is not commutative");
  const Field f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  Matrix rel(f, dm * dn, 0);
  for (std::size_t i = 0; i < a->dim(); ++i)
    rel = hcat(rel, kronecker(m.action()[i], id(f, dn)) - kronecker(id(f, dm), n.action()[i]));
  Quotient q = quotient_by(Subspace::span(rel));
  std::vector<Matrix> action;
  for (const auto& l : m.action()) action.push_back(q.induced(kronecker(l, id(f, dn))));
  const Matrix co = induced_coaction(q, tensor_comodules(m.coaction(), n.coaction()).coaction, *m.hopf());
  return {make_relhopf(a, std::move(action), co), std::move(q)};
}

TensorProduct tensor_over_B(const AlgebraPtr& a, const BModule& p) {
  if (!check_bmodule(p).empty()) throw PreconditionError("P action not associative/unital over B");
  const Field f = a->field();
  const std::size_t da = a->dim(), dp = p.dim, d = a->hopf()->dim();
  const Subspace& b = a->coinvariants();
  Matrix rel(f, da * dp, 0);
  for (std::size_t t = 0; t < b.dim(); ++t)
    rel = hcat(rel, kronecker(a->algebra().right_mult(b.basis().col(t)), id(f, dp)) - kronecker(id(f, da), p.action[t]));
  Quotient q = quotient_by(Subspace::span(rel));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < da; ++i)
    action.push_back(q.induced(kronecker(a->algebra().left_mult(a->algebra().basis_vector(i)), id(f, dp))));
  const Matrix plain = tensor_permutation(f, {da, d, dp}, {0, 2, 1}) * kronecker(a->coaction().coaction, id(f, dp));
  const Matrix co = induced_coaction(q, plain, *a->hopf());
  return {make_relhopf(a, std::move(action), co), std::move(q)};
}

UnitMap unit_map(const BModule& p) {
  const AlgebraPtr& a = p.over;
  const Field f = a->field();
  UnitMap out{tensor_over_B(a, p), Matrix(), false, false, false};
  const Subspace& w = out.tensor.module.coinvariants();
  Matrix images(f, out.tensor.quotient.dim(), p.dim);
  for (std::size_t j = 0; j < p.dim; ++j)
    images.set_col(j, out.tensor.quotient.projection * kronecker(a->algebra().unit, Matrix::unit_vector(f, p.dim, j)));
  out.map = w.coordinates_of(images);
  const BModule wb = coinvariant_bmodule(out.tensor.module);
  out.b_linear = is_b_linear(out.map, p, wb);
  out.injective = rank(out.map) == p.dim;
  out.bijective = out.injective && w.dim() == p.dim;
  return out;
}

CounitMap counit_map(const RelHopfModule& m) {
  const AlgebraPtr& a = m.over();
  const Field f = m.field();
  const BModule p = coinvariant_bmodule(m);
  CounitMap out{tensor_over_B(a, p), {}, false, false};
  const Matrix& w = m.coinvariants().basis();
  Matrix c(f, m.dim(), a->dim() * p.dim);
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t s = 0; s < p.dim; ++s) c.set_col(i * p.dim + s, m.action()[i] * w.col(s));
  if (!(c * out.tensor.quotient.relations.basis()).is_zero())
    throw std::logic_error("counit_map: a (x) m -> a m does not factor through the tensor over B");
  Matrix cm = c * out.tensor.quotient.section;
  const std::size_t rk = rank(cm);
  out.injective = rk == cm.cols();
  out.surjective = rk == m.dim();
  out.morphism = {std::make_shared<const RelHopfModule>(out.tensor.module), std::make_shared<const RelHopfModule>(m),
                  std::move(cm)};
  return out;
}

MTensorH m_tensor_H(const RelHopfModule& m) {
  const HopfAlgebra& h = *m.hopf();
  const Field f = m.field();
  const std::size_t dm = m.dim(), d = h.dim();
  std::vector<Matrix> action;
  for (const auto& l : m.action()) action.push_back(kronecker(l, id(f, d)));
  const Matrix co = kronecker(id(f, dm * d), h.mult()) * tensor_permutation(f, {dm, d, d, d}, {0, 2, 1, 3}) *
                    kronecker(m.coaction().coaction, h.comult());
  MTensorH out{make_relhopf(m.over(), std::move(action), co), Subspace(), Matrix(), Matrix(), false, false};
  out.coinvariants = out.module.coinvariants();
  const Matrix f_plain = kronecker(id(f, dm), h.antipode()) * m.coaction().coaction;
  out.f = out.coinvariants.coordinates_of(f_plain);
  out.g = kronecker(id(f, dm), h.counit()) * out.coinvariants.basis();
  out.inverse_pair = out.g * out.f == id(f, dm) && out.f * out.g == id(f, out.coinvariants.dim());
  const BModule mb{m.over(), dm, [&] {
                     std::vector<Matrix> acts;
                     for (std::size_t t = 0; t < m.over()->coinvariants().dim(); ++t)
                       acts.push_back(m.act(m.over()->coinvariants().basis().col(t)));
                     return acts;
                   }()};
  out.b_linear = is_b_linear(out.f, mb, coinvariant_bmodule(out.module));
  return out;
}

RelHopfModule hom_module_commutative(const RelHopfModule& n, const RelHopfModule& p, MapSpace* maps_out) {
  const AlgebraPtr& a = n.over();
  if (!a->is_commutative()) throw PreconditionError("A is not commutative");
  HomSpace hs = hom_space(n, p);
  if (!hs.well_defined) throw std::logic_error("hom_module_commutative: pi not well defined");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix l(n.field(), hs.maps.dim(), hs.maps.dim());
    for (std::size_t s = 0; s < hs.maps.dim(); ++s) {
      auto c = hs.maps.coordinates(p.action()[i] * hs.maps.map(s));
      if (!c) throw std::logic_error("hom_module_commutative: a f is not A-linear");
      l.set_col(s, *c);
    }
    action.push_back(std::move(l));
  }
  if (maps_out) *maps_out = hs.maps;
  return make_relhopf(a, std::move(action), hs.comodule.coaction);
}

CurryIso curry_iso(const RelHopfModule& m, const RelHopfModule& n, const RelHopfModule& p) {
  const AlgebraPtr& a = m.over();
  if (!a->is_commutative()) throw PreconditionError("A is not commutative");
  if (!a->hopf()->is_commutative()) throw PreconditionError("H is not commutative");
  const Field f = m.field();
  MapSpace g;
  const RelHopfModule hnp = hom_module_commutative(n, p, &g);
  const TensorProduct t = tensor_over_A(m, n);
  CurryIso out;
  out.left = morphism_space(m, hnp);
  out.right = morphism_space(t.module, p);
  const std::size_t dm = m.dim(), dn = n.dim(), dp = p.dim();

  out.phi = Matrix(f, out.right.dim(), out.left.dim());
  for (std::size_t s = 0; s < out.left.dim(); ++s) {
    const Matrix fl = out.left.map(s);  // g.dim x dm
    Matrix plain(f, dp, dm * dn);
    for (std::size_t j = 0; j < dm; ++j) {
      const Matrix value = g.combine(fl.col(j));  // f(m_j): dp x dn
      for (std::size_t l = 0; l < dn; ++l) plain.set_col(j * dn + l, value.col(l));
    }
    if (!(plain * t.quotient.relations.basis()).is_zero())
      throw std::logic_error("curry_iso: phi(f) does not factor through the tensor over A");
    auto c = out.right.coordinates(plain * t.quotient.section);
    if (!c) throw std::logic_error("curry_iso: phi(f) is not a morphism");
    out.phi.set_col(s, *c);
  }

  out.phi_inv = Matrix(f, out.left.dim(), out.right.dim());
  for (std::size_t s = 0; s < out.right.dim(); ++s) {
    const Matrix gr = out.right.map(s);  // dp x q
    Matrix fl(f, g.dim(), dm);
    for (std::size_t j = 0; j < dm; ++j) {
      Matrix value(f, dp, dn);
      for (std::size_t l = 0; l < dn; ++l)
        value.set_col(l, gr * t.quotient.projection * Matrix::unit_vector(f, dm * dn, j * dn + l));
      auto c = g.coordinates(value);
      if (!c) throw std::logic_error("curry_iso: n -> g(m (x) n) is not A-linear");
      fl.set_col(j, *c);
    }
    auto c = out.left.coordinates(fl);
    if (!c) throw std::logic_error("curry_iso: inverse image is not a morphism");
    out.phi_inv.set_col(s, *c);
  }
  out.mutually_inverse = out.left.dim() == out.right.dim() &&
                         out.phi * out.phi_inv == id(f, out.right.dim()) &&
                         out.phi_inv * out.phi == id(f, out.left.dim());
  return out;
}

}  // namespace hopfmod
