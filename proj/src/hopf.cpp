#include "hopfmod/hopf.hpp"

#include <sstream>

#include "hopfmod/linalg.hpp"

namespace hopfmod {

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  os << axiom;
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i] + 1;
    os << ")";
  }
  return os.str();
}

bool has_axiom(const Diagnostics& ds, const std::string& axiom) {
  for (const auto& d : ds)
    if (d.axiom == axiom) return true;
  return false;
}

Matrix FinAlgebra::product(const Matrix& a, const Matrix& b) const { return mult * kronecker(a, b); }

Matrix FinAlgebra::left_mult(const Matrix& a) const {
  return mult * kronecker(a, Matrix::identity(field, dim));
}

Matrix FinAlgebra::right_mult(const Matrix& a) const {
  return mult * kronecker(Matrix::identity(field, dim), a);
}

bool FinAlgebra::is_commutative() const {
  const Matrix swap = tensor_permutation(field, {dim, dim}, {1, 0});
  return mult == mult * swap;
}

Diagnostics check_algebra(const FinAlgebra& a) {
  Diagnostics out;
  const std::size_t n = a.dim;
  if (a.mult.rows() != n || a.mult.cols() != n * n) throw DimensionError("multiplication table shape");
  if (a.unit.rows() != n || a.unit.cols() != 1) throw DimensionError("unit vector shape");
  const Matrix id = Matrix::identity(a.field, n);
  // (e_i e_j) e_k against e_i (e_j e_k), compared as the two maps A^{(x)3} -> A.
  const Matrix lhs = a.mult * kronecker(a.mult, id);
  const Matrix rhs = a.mult * kronecker(id, a.mult);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t c = (i * n + j) * n + k;
        if (!(lhs.col(c) == rhs.col(c))) out.push_back({"associativity", {i, j, k}});
      }
  const Matrix left = a.left_mult(a.unit), right = a.right_mult(a.unit);
  for (std::size_t i = 0; i < n; ++i)
    if (!(left.col(i) == id.col(i)) || !(right.col(i) == id.col(i))) out.push_back({"unit", {i}});
  return out;
}

std::optional<Matrix> find_unit(Field field, std::size_t dim, const Matrix& mult) {
  // u e_i = e_i and e_i u = e_i for all i is linear in u.
  const Matrix id = Matrix::identity(field, dim);
  Matrix system(field, 0, dim), rhs(field, 0, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    const Matrix ei = id.col(i);
    system = vcat(system, mult * kronecker(id, ei));
    system = vcat(system, mult * kronecker(ei, id));
    rhs = vcat(rhs, vcat(ei, ei));
  }
  return solve_linear(system, rhs);
}

Diagnostics check_coalgebra(const FinCoalgebra& c) {
  Diagnostics out;
  const std::size_t n = c.dim;
  const Field f = c.comult.field();
  if (c.comult.rows() != n * n || c.comult.cols() != n) throw DimensionError("comultiplication table shape");
  if (c.counit.rows() != 1 || c.counit.cols() != n) throw DimensionError("counit shape");
  const Matrix id = Matrix::identity(f, n);
  const Matrix lhs = kronecker(c.comult, id) * c.comult;
  const Matrix rhs = kronecker(id, c.comult) * c.comult;
  const Matrix left_counit = kronecker(c.counit, id) * c.comult;
  const Matrix right_counit = kronecker(id, c.counit) * c.comult;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lhs.col(i) == rhs.col(i))) out.push_back({"coassociativity", {i}});
    if (!(left_counit.col(i) == id.col(i)) || !(right_counit.col(i) == id.col(i)))
      out.push_back({"counit", {i}});
  }
  return out;
}

RawHopfData HopfAlgebra::raw() const {
  return {field(), dim(), mult(), unit(), comult(), counit(), antipode_};
}

HopfValidation validate_hopf(const RawHopfData& raw) {
  const std::size_t n = raw.dim;
  const Field f = raw.field;
  if (n == 0) throw DimensionError("Hopf algebra of dimension 0");
  if (raw.mult.rows() != n || raw.mult.cols() != n * n) throw DimensionError("multiplication table shape");
  if (raw.comult.rows() != n * n || raw.comult.cols() != n) throw DimensionError("comultiplication table shape");
  if (raw.counit.rows() != 1 || raw.counit.cols() != n) throw DimensionError("counit shape");
  if (raw.antipode.rows() != n || raw.antipode.cols() != n) throw DimensionError("antipode shape");
  for (const Matrix* m : {&raw.mult, &raw.comult, &raw.counit, &raw.antipode})
    if (!(m->field() == f)) throw FieldError("Hopf data over mixed fields");

  HopfValidation result;
  auto& diags = result.diagnostics;
  FinAlgebra alg{f, n, raw.mult, Matrix(f, n, 1)};
  if (raw.unit) {
    if (raw.unit->rows() != n || raw.unit->cols() != 1) throw DimensionError("unit vector shape");
    alg.unit = *raw.unit;
  } else if (auto u = find_unit(f, n, raw.mult)) {
    alg.unit = *u;
  } else {
    diags.push_back({"unit", {}});
  }
  for (auto& d : check_algebra(alg))
    if (!(d.axiom == "unit" && has_axiom(diags, "unit"))) diags.push_back(d);
  FinCoalgebra coalg{n, raw.comult, raw.counit};
  for (auto& d : check_coalgebra(coalg)) diags.push_back(d);

  // Bialgebra: Delta and epsilon are unital algebra maps.
  const Matrix mult_hh = kronecker(raw.mult, raw.mult) * tensor_permutation(f, {n, n, n, n}, {0, 2, 1, 3});
  const Matrix delta_of_product = raw.comult * raw.mult;
  const Matrix product_of_deltas = mult_hh * kronecker(raw.comult, raw.comult);
  const Matrix eps_of_product = raw.counit * raw.mult;
  const Matrix product_of_eps = kronecker(raw.counit, raw.counit);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t c = i * n + j;
      if (!(delta_of_product.col(c) == product_of_deltas.col(c)))
        diags.push_back({"comultiplication multiplicative", {i, j}});
      if (!(eps_of_product(0, c) == product_of_eps(0, c))) diags.push_back({"counit multiplicative", {i, j}});
    }
  if (!(raw.comult * alg.unit == kronecker(alg.unit, alg.unit))) diags.push_back({"comultiplication unital", {}});
  if (!(raw.counit * alg.unit)(0, 0).is_one()) diags.push_back({"counit unital", {}});

  const Matrix id = Matrix::identity(f, n);
  const Matrix unit_counit = alg.unit * raw.counit;
  const Matrix left = raw.mult * kronecker(raw.antipode, id) * raw.comult;
  const Matrix right = raw.mult * kronecker(id, raw.antipode) * raw.comult;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(left.col(i) == unit_counit.col(i))) diags.push_back({"antipode left", {i}});
    if (!(right.col(i) == unit_counit.col(i))) diags.push_back({"antipode right", {i}});
  }
  auto inv = inverse(raw.antipode);
  if (!inv) diags.push_back({"antipode not bijective", {}});
  if (!diags.empty()) return result;

  auto h = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  h->algebra_ = std::move(alg);
  h->coalgebra_ = std::move(coalg);
  h->antipode_ = raw.antipode;
  h->antipode_inv_ = *inv;
  if (!(h->antipode_inv_ * h->antipode_ == id) || !(h->antipode_ * h->antipode_inv_ == id))
    throw std::logic_error("antipode inverse failed to revalidate");
  result.hopf = std::move(h);
  return result;
}

HopfPtr group_algebra(Field field, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("non-group table: empty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("non-group table: not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n || seen[v]) throw std::invalid_argument("non-group table: not a Latin square");
      seen[v] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && table[e][i] == i && table[i][e] == i;
    if (ok) identity = e;
  }
  if (!identity) throw std::invalid_argument("non-group table: no identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw std::invalid_argument("non-group table: not associative");

  RawHopfData raw{field, n, Matrix(field, n, n * n), std::nullopt, Matrix(field, n * n, n), Matrix(field, 1, n),
                  Matrix(field, n, n)};
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      raw.mult(table[i][j], i * n + j) = one;
      if (table[i][j] == *identity) raw.antipode(j, i) = one;
    }
    raw.comult(i * n + i, i) = one;
    raw.counit(0, i) = one;
  }
  raw.unit = Matrix::unit_vector(field, n, *identity);
  auto v = validate_hopf(raw);
  if (!v.ok()) throw std::logic_error("group algebra failed validation");
  return v.hopf;
}

HopfPtr cyclic_group_algebra(Field field, std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return group_algebra(field, table);
}

HopfPtr sweedler_h4(Field field) {
  if (field.characteristic() == 2) throw std::invalid_argument("Sweedler's Hopf algebra requires char != 2");
  // Basis order: 0 = 1, 1 = g, 2 = x, 3 = gx.
  const std::size_t n = 4;
  RawHopfData raw{field, n, Matrix(field, n, n * n), Matrix::unit_vector(field, n, 0), Matrix(field, n * n, n),
                  Matrix(field, 1, n), Matrix(field, n, n)};
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    raw.mult(k, i * n + j) = Scalar::from_int(field, c);
  };
  for (std::size_t b = 0; b < n; ++b) {
    set(0, b, b, 1);
    set(b, 0, b, 1);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  // x x = x gx = gx x = gx gx = 0
  auto co = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    raw.comult(j * n + k, i) = Scalar::from_int(field, c);
  };
  co(0, 0, 0, 1);
  co(1, 1, 1, 1);
  co(2, 2, 0, 1);  // x (x) 1
  co(2, 1, 2, 1);  // g (x) x
  co(3, 3, 1, 1);  // gx (x) g
  co(3, 0, 3, 1);  // 1 (x) gx
  raw.counit(0, 0) = Scalar::one(field);
  raw.counit(0, 1) = Scalar::one(field);
  raw.antipode(0, 0) = Scalar::one(field);
  raw.antipode(1, 1) = Scalar::one(field);
  raw.antipode(3, 2) = Scalar::from_int(field, -1);  // S(x) = -gx
  raw.antipode(2, 3) = Scalar::one(field);           // S(gx) = x
  auto v = validate_hopf(raw);
  if (!v.ok()) throw std::logic_error("Sweedler algebra failed validation");
  return v.hopf;
}

Matrix antipode_defect(const HopfAlgebra& h) {
  const Matrix id = Matrix::identity(h.field(), h.dim());
  return h.mult() * kronecker(h.antipode(), id) * h.comult() - h.unit() * h.counit();
}

}  // namespace hopfmod
