#include "hopfmod/projcert.hpp"

#include "hopfmod/linalg.hpp"

namespace hopfmod {

namespace {

Matrix id(Field f, std::size_t n) { return Matrix::identity(f, n); }

// Some map (rows x cols) with homogeneous * vec = 0 and affine * vec = rhs.
std::optional<Matrix> solve_map(std::size_t rows, std::size_t cols, const Matrix& homogeneous, const Matrix& affine,
                                const Matrix& rhs) {
  const Field f = affine.field();
  const Matrix system = vcat(homogeneous, affine);
  const Matrix target = vcat(Matrix(f, homogeneous.rows(), 1), rhs);
  auto sol = solve_linear(system, target);
  if (!sol) return std::nullopt;
  return Matrix::unvectorize(*sol, rows, cols);
}

Matrix b_linearity_constraints(const BModule& source, const BModule& target) {
  const Field f = source.over->field();
  const std::size_t r = target.dim, c = source.dim;
  Matrix rows(f, 0, r * c);
  for (std::size_t t = 0; t < source.action.size(); ++t)
    rows = vcat(rows, kronecker(target.action[t], id(f, c)) - kronecker(id(f, r), source.action[t].transpose()));
  return rows;
}

Matrix morphism_constraints(const RelHopfModule& source, const RelHopfModule& target) {
  return vcat(a_linearity_constraints(source, target), colinearity_constraints(source.coaction(), target.coaction()));
}

// Lifts b -> (A (x) b) through plain tensors onto the quotients; checks relations map to relations.
Matrix induced_on_tensor(const Matrix& map, const TensorProduct& source, const TensorProduct& target, std::size_t dim_a) {
  const Matrix plain = kronecker(id(map.field(), dim_a), map);
  const Matrix rel = plain * source.quotient.relations.basis();
  for (std::size_t c = 0; c < rel.cols(); ++c)
    if (!target.quotient.relations.contains(rel.col(c)))
      throw std::logic_error("map is not B-linear: relations are not preserved");
  return target.quotient.projection * plain * source.quotient.section;
}

std::vector<Matrix> h_ideal_operators(const ComoduleAlgebra& a) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix e = a.algebra().basis_vector(i);
    ops.push_back(a.algebra().left_mult(e));
    ops.push_back(a.algebra().right_mult(e));
  }
  for (auto& leg : first_legs(a.coaction())) ops.push_back(std::move(leg));
  return ops;
}

// Calls visit on every nonzero vector of F_p^n, stopping when it returns true.
template <typename Visit>
bool for_each_nonzero_vector(Field f, std::size_t n, Visit visit) {
  const std::uint64_t p = f.characteristic();
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < n && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == n) return false;
    ++digits[pos];
    Matrix v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(f, static_cast<long>(digits[i]));
    if (visit(v)) return true;
  }
}

bool exhaustible(Field f, std::size_t n, std::size_t budget) {
  if (f.is_rational()) return false;
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(f.characteristic());
  return count - 1 <= static_cast<double>(budget);
}

Poly monomial_x(Field f) { return {Scalar::zero(f), Scalar::one(f)}; }

}  // namespace

bool SplitWitness::replays() const {
  return epi.cols() == section.rows() && epi.rows() == section.cols() && epi * section == Matrix::identity(epi.field(), epi.rows());
}

Matrix canonical_b_epi(const BModule& p) {
  const Field f = p.over->field();
  const std::size_t b = p.over->coinvariants().dim();
  Matrix epi(f, p.dim, p.dim * b);
  for (std::size_t s = 0; s < p.dim; ++s)
    for (std::size_t t = 0; t < b; ++t) epi.set_col(s * b + t, p.action[t] * Matrix::unit_vector(f, p.dim, s));
  return epi;
}

std::optional<SplitWitness> is_projective_over_B(const BModule& p) {
  if (!check_bmodule(p).empty()) throw std::invalid_argument("is_projective_over_B: invalid B-module");
  const Field f = p.over->field();
  const BModule free = free_bmodule(p.over, p.dim);
  const Matrix epi = canonical_b_epi(p);
  auto s = solve_map(free.dim, p.dim, b_linearity_constraints(p, free), kronecker(epi, id(f, p.dim)),
                     id(f, p.dim).vectorized());
  if (!s) return std::nullopt;
  return SplitWitness{epi, *s, SplitContext::over_B};
}

bool replays_over_B(const SplitWitness& w, const BModule& source, const BModule& target) {
  return w.epi.rows() == target.dim && w.epi.cols() == source.dim && w.replays() && is_b_linear(w.epi, source, target) &&
         is_b_linear(w.section, target, source);
}

std::optional<TotalIntegral> find_total_integral(const ComoduleAlgebra& a) {
  const HopfAlgebra& h = *a.hopf();
  const Field f = a.field();
  const Matrix colinear = colinearity_constraints(regular_comodule(a.hopf()), a.coaction());
  const Matrix unital = kronecker(id(f, a.dim()), h.unit().transpose());
  auto phi = solve_map(a.dim(), h.dim(), colinear, unital, a.algebra().unit);
  if (!phi) return std::nullopt;
  return TotalIntegral{*phi, MapSpace{a.dim(), h.dim(), kernel_basis(vcat(colinear, unital))}};
}

bool is_total_integral(const ComoduleAlgebra& a, const Matrix& phi) {
  const HopfAlgebra& h = *a.hopf();
  if (phi.rows() != a.dim() || phi.cols() != h.dim()) return false;
  return phi * h.unit() == a.algebra().unit && is_colinear(phi, regular_comodule(a.hopf()), a.coaction());
}

bool is_coinvariantly_generated(const RelHopfModule& m) {
  const Matrix& w = m.coinvariants().basis();
  Matrix span(m.field(), m.dim(), 0);
  for (const auto& l : m.action()) span = hcat(span, l * w);
  return rank(span) == m.dim();
}

std::optional<Matrix> split_section(const RelHopfModule& source, const RelHopfModule& target, const Matrix& f) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) throw DimensionError("split_section: map shape");
  const Field fld = source.field();
  return solve_map(source.dim(), target.dim(), morphism_constraints(target, source),
                   kronecker(f, id(fld, target.dim())), id(fld, target.dim()).vectorized());
}

std::optional<Matrix> split_retraction(const RelHopfModule& source, const RelHopfModule& target, const Matrix& f) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) throw DimensionError("split_retraction: map shape");
  const Field fld = source.field();
  return solve_map(source.dim(), target.dim(), morphism_constraints(target, source),
                   kronecker(id(fld, source.dim()), f.transpose()), id(fld, source.dim()).vectorized());
}

bool replays_in_category(const SplitWitness& w, const RelHopfModule& source, const RelHopfModule& target) {
  return w.epi.rows() == target.dim() && w.epi.cols() == source.dim() && w.replays() &&
         is_morphism(w.epi, source, target) && is_morphism(w.section, target, source);
}

Matrix coinvariant_restriction(const Matrix& f, const RelHopfModule& source, const RelHopfModule& target) {
  return target.coinvariants().coordinates_of(f * source.coinvariants().basis());
}

LiftedWitness lift_witness(const BModule& p, const SplitWitness& b_witness) {
  const AlgebraPtr& a = p.over;
  TensorProduct free = tensor_over_B(a, free_bmodule(a, p.dim));
  TensorProduct target = tensor_over_B(a, p);
  SplitWitness w{induced_on_tensor(b_witness.epi, free, target, a->dim()),
                 induced_on_tensor(b_witness.section, target, free, a->dim()), SplitContext::in_category};
  return {std::move(free), std::move(target), std::move(w)};
}

SplitWitness descend_witness(const SplitWitness& w, const RelHopfModule& source, const RelHopfModule& target) {
  return {coinvariant_restriction(w.epi, source, target), coinvariant_restriction(w.section, target, source),
          SplitContext::over_B};
}

ProjectivityCertificate certify_projectivity(const RelHopfModule& m) {
  ProjectivityCertificate cert;
  cert.coinvariants = coinvariant_bmodule(m);
  const BModule& p = cert.coinvariants;
  cert.notes.push_back("direct sums of copies of A are bounded by dim M = " + std::to_string(m.dim()));
  cert.notes.push_back("B-witness splits the canonical epi from B^(" + std::to_string(p.dim) + ")");
  cert.b_witness = is_projective_over_B(p);
  cert.u_bijective = unit_map(p).bijective;
  if (!cert.b_witness) {
    cert.notes.push_back("no B-linear section of the canonical epi exists");
    return cert;
  }
  cert.projective = true;
  LiftedWitness lifted = lift_witness(p, *cert.b_witness);
  cert.category_witness_replays = replays_in_category(lifted.witness, lifted.free.module, lifted.target.module);
  SplitWitness down = descend_witness(lifted.witness, lifted.free.module, lifted.target.module);
  cert.descended_witness_replays = replays_over_B(down, coinvariant_bmodule(lifted.free.module),
                                                  coinvariant_bmodule(lifted.target.module));
  cert.descended_witness = std::move(down);
  cert.category_witness = std::move(lifted);
  return cert;
}

ExactnessWitness exactness_witness(const ComoduleAlgebra& a) {
  ExactnessWitness w;
  auto cs = is_cosemisimple(*a.hopf());
  if (cs.cosemisimple) w.cosemisimple_integral = cs.integral;
  w.total_integral = find_total_integral(a);
  return w;
}

Matrix free_module_map(const RelHopfModule& target, const Matrix& gens) {
  const std::size_t da = target.over()->dim(), r = gens.cols();
  Matrix f(target.field(), target.dim(), r * da);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t i = 0; i < da; ++i) f.set_col(s * da + i, target.action()[i] * gens.col(s));
  return f;
}

ChainReport prop25_chain(const RelHopfModule& m) {
  const AlgebraPtr& a = m.over();
  const Field f = m.field();
  BModule p = coinvariant_bmodule(m);
  TensorProduct t = tensor_over_B(a, p);
  ChainReport out{p, t, false, {}, false, {}, false, {}, exactness_witness(*a), false};

  Matrix gens(f, t.module.dim(), p.dim);
  for (std::size_t s = 0; s < p.dim; ++s)
    gens.set_col(s, t.quotient.projection * kronecker(a->algebra().unit, Matrix::unit_vector(f, p.dim, s)));
  const RelHopfModule free1 = free_module(a, p.dim);
  out.item1_section = split_section(free1, t.module, free_module_map(t.module, gens));
  out.item1 = out.item1_section.has_value();

  const Matrix& w = t.module.coinvariants().basis();
  const RelHopfModule free2 = free_module(a, w.cols());
  if (is_coinvariantly_generated(t.module) && unit_map(p).bijective) {
    out.item2_section = split_section(free2, t.module, free_module_map(t.module, w));
    out.item2 = out.item2_section.has_value();
  }

  out.item3_witness = is_projective_over_B(p);
  out.item3 = out.item3_witness.has_value();
  out.implications_hold = (!out.item1 || out.item2) && (!out.item2 || out.item3) &&
                          (out.exactness.empty() || !out.item3 || out.item1);
  return out;
}

bool is_h_ideal(const ComoduleAlgebra& a, const Subspace& w) {
  if (w.ambient() != a.dim()) return false;
  for (const auto& op : h_ideal_operators(a))
    if (!w.is_invariant(op)) return false;
  return true;
}

bool generates_full_matrix_algebra(const std::vector<Matrix>& ops, Field field, std::size_t n) {
  if (n > 12) return false;
  const Matrix idn = Matrix::identity(field, n);
  std::vector<Matrix> left;
  for (const auto& op : ops) left.push_back(kronecker(op, idn));
  return invariant_closure(left, idn.vectorized()).is_whole();
}

HSimplicity is_H_simple(const ComoduleAlgebra& a, std::size_t exhaustive_budget) {
  const auto ops = h_ideal_operators(a);
  const Field f = a.field();
  const std::size_t n = a.dim();
  auto proper = [&](const Matrix& seed) -> std::optional<Subspace> {
    Subspace c = invariant_closure(ops, seed);
    if (c.is_zero() || c.is_whole()) return std::nullopt;
    return c;
  };
  // Principal ideals A a for coinvariant a come first: they are H-ideals whenever A is commutative.
  const Matrix& coinv = a.coinvariants().basis();
  for (std::size_t c = 0; c < coinv.cols(); ++c)
    if (auto w = proper(coinv.col(c))) return {Verdict::no, w, "closure of a coinvariant seed"};
  for (std::size_t i = 0; i < n; ++i)
    if (auto w = proper(Matrix::unit_vector(f, n, i))) return {Verdict::no, w, "closure of a basis seed"};
  if (generates_full_matrix_algebra(ops, f, n))
    return {Verdict::yes, std::nullopt, "multiplications and coaction legs generate End(A)"};
  if (exhaustible(f, n, exhaustive_budget)) {
    std::optional<Subspace> found;
    for_each_nonzero_vector(f, n, [&](const Matrix& v) {
      found = proper(v);
      return found.has_value();
    });
    if (found) return {Verdict::no, found, "closure of an exhaustive seed"};
    return {Verdict::yes, std::nullopt, "every nonzero vector generates A"};
  }
  return {Verdict::unknown, std::nullopt, "no proper H-ideal found from basis seeds"};
}

FieldVerdict is_field(const FinAlgebra& b, std::size_t attempt_budget) {
  if (!b.is_commutative()) throw PreconditionError("is_field: B is not commutative");
  const Field f = b.field;
  const std::size_t n = b.dim;
  FieldVerdict out;
  if (n == 1) {
    out.field = Verdict::yes;
    out.element = b.unit;
    out.minimal_polynomial = minimal_polynomial(b.left_mult(b.unit));
    out.reason = "one-dimensional";
    return out;
  }
  bool saw_unknown = false;
  auto attempt = [&](const Matrix& theta) -> bool {
    if (theta.is_zero()) return false;
    Poly mp = minimal_polynomial(b.left_mult(theta));
    const std::size_t deg = degree(mp);
    bool nilpotent = true;
    for (std::size_t i = 0; i < deg; ++i) nilpotent = nilpotent && mp[i].is_zero();
    if (nilpotent) {
      out = {Verdict::no, theta, mp, monomial_x(f), "nilpotent element"};
      return true;
    }
    auto irr = irreducibility(mp);
    if (irr.verdict == Irreducibility::reducible) {
      out = {Verdict::no, theta, mp, irr.factor, "reducible minimal polynomial"};
      return true;
    }
    if (deg == n) {
      if (irr.verdict == Irreducibility::irreducible) {
        out = {Verdict::yes, theta, mp, std::nullopt, "primitive element with irreducible minimal polynomial"};
        return true;
      }
      saw_unknown = true;
    }
    return false;
  };
  std::size_t tried = 0;
  for (std::size_t i = 0; i < n && tried < attempt_budget; ++i, ++tried)
    if (attempt(b.basis_vector(i))) return out;
  std::vector<int> coeffs(n, -2);
  while (tried < attempt_budget) {
    Matrix theta(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) theta[i] = Scalar::from_int(f, coeffs[i]);
    ++tried;
    if (attempt(theta)) return out;
    std::size_t pos = 0;
    while (pos < n && coeffs[pos] == 2) coeffs[pos++] = -2;
    if (pos == n) break;
    ++coeffs[pos];
  }
  out = {};
  out.reason = saw_unknown ? "primitive element found but irreducibility undecided" : "no primitive element found";
  return out;
}

bool replays_not_field(const FinAlgebra& b, const FieldVerdict& v) {
  if (v.field != Verdict::no || !v.element || !v.factor) return false;
  const Matrix l = b.left_mult(*v.element);
  if (!(minimal_polynomial(l) == v.minimal_polynomial)) return false;
  auto [q, r] = divide(v.minimal_polynomial, *v.factor);
  for (const auto& c : r)
    if (!c.is_zero()) return false;
  const Matrix x = evaluate_polynomial(*v.factor, l), y = evaluate_polynomial(q, l);
  return !x.is_zero() && !y.is_zero() && (x * y).is_zero();
}

}  // namespace hopfmod
