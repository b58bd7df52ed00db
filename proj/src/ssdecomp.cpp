#include "hopfmod/ssdecomp.hpp"

#include <random>

#include "hopfmod/linalg.hpp"

namespace hopfmod {

namespace {

std::optional<Subspace> proper_closure(const std::vector<Matrix>& ops, const Matrix& seed) {
  Subspace c = invariant_closure(ops, seed);
  if (c.is_zero() || c.is_whole()) return std::nullopt;
  return c;
}

Matrix random_vector(Field f, std::size_t n, std::mt19937_64& rng) {
  Matrix v(f, n, 1);
  if (f.is_rational()) {
    std::uniform_int_distribution<long> dist(-3, 3);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(f, dist(rng));
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(f, static_cast<long>(dist(rng)));
  }
  return v;
}

bool exhaustive_search(const std::vector<Matrix>& ops, Field f, std::size_t n, std::size_t budget,
                       std::optional<Subspace>& found) {
  if (f.is_rational()) return false;
  const std::uint64_t p = f.characteristic();
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(p);
  if (count - 1 > static_cast<double>(budget)) return false;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < n && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == n) return true;
    ++digits[pos];
    Matrix v(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(f, static_cast<long>(digits[i]));
    if ((found = proper_closure(ops, v))) return true;
  }
}

}  // namespace

Matrix hstar_action(const Matrix& hstar, const Matrix& f, const RelHopfModule& m, const RelHopfModule& n) {
  const HopfAlgebra& h = *m.hopf();
  const Field fld = h.field();
  const std::size_t d = h.dim(), dm = m.dim(), dn = n.dim();
  if (hstar.rows() != 1 || hstar.cols() != d) throw DimensionError("hstar_action: functional shape");
  if (f.rows() != dn || f.cols() != dm) throw DimensionError("hstar_action: map shape");
  // pairing[k][l] = h*(S^{-1}(h_k) h_l)
  std::vector<std::vector<Scalar>> pairing(d, std::vector<Scalar>(d, Scalar::zero(fld)));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const Matrix prod = h.algebra().product(h.antipode_inv().col(k), Matrix::unit_vector(fld, d, l));
      pairing[k][l] = (hstar * prod)(0, 0);
    }
  const Matrix& rho_m = m.coaction().coaction;
  const Matrix rho_nf = n.coaction().coaction * f;
  Matrix out(fld, dn, dm);
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = rho_m(a * d + k, j);
        if (c.is_zero()) continue;
        for (std::size_t b = 0; b < dn; ++b)
          for (std::size_t l = 0; l < d; ++l) {
            const Scalar& e = rho_nf(b * d + l, a);
            if (e.is_zero() || pairing[k][l].is_zero()) continue;
            out(b, j) += c * e * pairing[k][l];
          }
      }
  return out;
}

bool rationality_check(const RelHopfModule& m, const RelHopfModule& n) {
  const HomSpace hs = hom_space(m, n);
  if (!hs.well_defined) return false;
  const Field f = m.field();
  const std::size_t d = m.hopf()->dim(), dim = hs.maps.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix delta = Matrix::unit_vector(f, d, k).transpose();
    for (std::size_t s = 0; s < dim; ++s) {
      const Matrix acted = hstar_action(delta, hs.maps.map(s), m, n);
      if (!hs.maps.coordinates(acted)) return false;
      Matrix coeffs(f, dim, 1);
      for (std::size_t s2 = 0; s2 < dim; ++s2) coeffs[s2] = hs.comodule.coaction(s2 * d + k, s);
      if (!(acted == hs.maps.combine(coeffs))) return false;
    }
  }
  return true;
}

GeneratorEpi generator_epi(const RelHopfModule& m, std::optional<Matrix> generators) {
  const Field f = m.field();
  Subspace v(f, m.dim());
  if (generators) {
    if (generators->rows() != m.dim()) throw DimensionError("generator_epi: generators shape");
    for (std::size_t c = 0; c < generators->cols(); ++c) v = v + generated_subcomodule(m.coaction(), generators->col(c));
  } else {
    // Greedy: add the subcomodule of e_j whenever e_j is outside A V.
    Subspace av(f, m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Matrix ej = Matrix::unit_vector(f, m.dim(), j);
      if (av.contains(ej)) continue;
      v = v + generated_subcomodule(m.coaction(), ej);
      Matrix images(f, m.dim(), 0);
      for (const auto& l : m.action()) images = hcat(images, l * v.basis());
      av = Subspace::span(images);
    }
  }
  Comodule vc = restrict_comodule(m.coaction(), v);
  RelHopfModule source = tensor_with_comodule(regular_module(m.over()), vc);
  const std::size_t da = m.over()->dim(), dv = v.dim();
  Matrix pi(f, m.dim(), da * dv);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t t = 0; t < dv; ++t) pi.set_col(i * dv + t, m.action()[i] * v.basis().col(t));
  GeneratorEpi out{v, vc, source, pi, false, false, false};
  out.surjective = rank(pi) == m.dim();
  out.a_linear = is_a_linear(pi, out.source, m);
  out.colinear = is_colinear(pi, out.source.coaction(), m.coaction());
  return out;
}

Matrix SmashAlgebra::act(const RelHopfModule& m, std::size_t index) const {
  const std::size_t d = base->hopf()->dim();
  return m.action()[index / d] * first_leg(m.coaction(), index % d);
}

Matrix SmashAlgebra::act_element(const RelHopfModule& m, const Matrix& x) const {
  Matrix out(m.field(), m.dim(), m.dim());
  for (std::size_t idx = 0; idx < x.rows(); ++idx)
    if (!x[idx].is_zero()) out = out + act(m, idx).scaled(x[idx]);
  return out;
}

SmashAlgebra smash(const AlgebraPtr& a) {
  const HopfAlgebra& h = *a->hopf();
  const Field f = a->field();
  const std::size_t n = a->dim(), d = h.dim(), nd = n * d;
  const Matrix& rho = a->coaction().coaction;
  const Matrix& amult = a->algebra().mult;

  // hpart[r][l][s] = (delta_r <- h_l) * delta_s in the dual basis.
  std::vector<std::vector<std::vector<Matrix>>> hpart(d, std::vector<std::vector<Matrix>>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t s = 0; s < d; ++s) {
        Matrix coef(f, d, 1);
        for (std::size_t q = 0; q < d; ++q)
          for (std::size_t q1 = 0; q1 < d; ++q1) {
            const Scalar& c = h.comult()(q1 * d + s, q);
            if (!c.is_zero()) coef[q] += c * h.mult()(r, l * d + q1);
          }
        hpart[r][l].push_back(std::move(coef));
      }

  Matrix mult(f, nd, nd * nd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < d; ++s) {
          const std::size_t col = (i * d + r) * nd + (j * d + s);
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t l = 0; l < d; ++l) {
              const Scalar& c = rho(b * d + l, j);
              if (c.is_zero()) continue;
              const Matrix& coef = hpart[r][l][s];
              for (std::size_t u = 0; u < n; ++u) {
                const Scalar& ab = amult(u, i * n + b);
                if (ab.is_zero()) continue;
                for (std::size_t q = 0; q < d; ++q)
                  if (!coef[q].is_zero()) mult(u * d + q, col) += c * ab * coef[q];
              }
            }
        }

  Matrix unit(f, nd, 1), embed_a(f, nd, n), embed_hstar(f, nd, d);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t q = 0; q < d; ++q) {
      unit[u * d + q] = a->algebra().unit[u] * h.counit()(0, q);
      embed_a(u * d + q, u) = h.counit()(0, q);
      embed_hstar(u * d + q, q) = a->algebra().unit[u];
    }
  SmashAlgebra out{a, FinAlgebra{f, nd, std::move(mult), std::move(unit)}, std::move(embed_a),
                   std::move(embed_hstar), {}};
  out.diagnostics = check_algebra(out.algebra);
  return out;
}

std::vector<Matrix> subobject_operators(const RelHopfModule& m) {
  std::vector<Matrix> ops = m.action();
  for (auto& leg : first_legs(m.coaction())) ops.push_back(std::move(leg));
  return ops;
}

Subspace radical_char0(const FinAlgebra& e) {
  if (!e.field.is_rational()) throw PreconditionError("radical_char0: characteristic p is not supported");
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < e.dim; ++i) l.push_back(e.left_mult(e.basis_vector(i)));
  Matrix gram(e.field, e.dim, e.dim);
  for (std::size_t i = 0; i < e.dim; ++i)
    for (std::size_t j = i; j < e.dim; ++j) {
      const Matrix p = l[i] * l[j];
      Scalar tr = Scalar::zero(e.field);
      for (std::size_t k = 0; k < e.dim; ++k) tr += p(k, k);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  return Subspace::span(kernel_basis(gram));
}

SimplicityVerdict is_simple_object(const RelHopfModule& m, const SeedOptions& opts) {
  if (m.dim() == 0) throw std::invalid_argument("is_simple_object: zero module");
  const Field f = m.field();
  const std::size_t n = m.dim();
  const auto ops = subobject_operators(m);
  const Matrix& coinv = m.coinvariants().basis();
  for (std::size_t c = 0; c < coinv.cols(); ++c)
    if (auto w = proper_closure(ops, coinv.col(c))) return {Verdict::no, w, "closure of a coinvariant seed"};
  for (std::size_t i = 0; i < n; ++i)
    if (auto w = proper_closure(ops, Matrix::unit_vector(f, n, i))) return {Verdict::no, w, "closure of a basis seed"};
  if (generates_full_matrix_algebra(ops, f, n)) return {Verdict::yes, std::nullopt, "smash action generates End(M)"};

  std::optional<Subspace> found;
  if (exhaustive_search(ops, f, n, opts.exhaustive_budget, found)) {
    if (found) return {Verdict::no, found, "closure of an exhaustive seed"};
    return {Verdict::yes, std::nullopt, "every nonzero vector generates M"};
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_seeds; ++t)
    if (auto w = proper_closure(ops, random_vector(f, n, rng))) return {Verdict::no, w, "closure of a random seed"};
  if (f.is_rational()) {
    const SmashAlgebra e = smash(m.over());
    const Subspace rad = radical_char0(e.algebra);
    bool annihilates = true;
    for (std::size_t c = 0; c < rad.dim() && annihilates; ++c)
      annihilates = e.act_element(m, rad.basis().col(c)).is_zero();
    if (annihilates && morphism_space(m, m).dim() == 1)
      return {Verdict::yes, std::nullopt, "radical of the smash algebra annihilates M and End(M) is one-dimensional"};
  }
  return {Verdict::unknown, std::nullopt, "no proper subobject found from seeds"};
}

Decomposition decompose_semisimple(const RelHopfModule& m, const SeedOptions& opts) {
  const Field f = m.field();
  Decomposition out;
  out.h_cosemisimple = is_cosemisimple(*m.hopf()).cosemisimple;
  out.a_semisimple = f.is_rational() && radical_char0(m.over()->algebra()).is_zero();
  Subspace w = Subspace::whole(f, m.dim());
  while (!w.is_zero()) {
    const RelHopfModule wm = restrict_module(m, w);
    Subspace s = invariant_closure(subobject_operators(wm), Matrix::unit_vector(f, wm.dim(), 0));
    SimplicityVerdict v;
    while (true) {
      v = is_simple_object(restrict_module(wm, s), opts);
      if (v.simple != Verdict::no) break;
      s = Subspace::span(s.basis() * v.subobject->basis());
    }
    const RelHopfModule sm = restrict_module(wm, s);
    auto r = split_retraction(sm, wm, s.basis());
    if (!r) {
      out.remainder = w;
      out.diagnostic = "no complement in the category for a subobject of dimension " + std::to_string(s.dim()) +
                       " inside a part of dimension " + std::to_string(w.dim());
      return out;
    }
    out.summands.push_back({Subspace::span(w.basis() * s.basis()), v.simple == Verdict::yes, v.certificate});
    w = Subspace::span(w.basis() * kernel_basis(*r));
  }
  out.complete = true;
  return out;
}

bool replays_decomposition(const RelHopfModule& m, const std::vector<Subspace>& summands) {
  const Field f = m.field();
  Matrix all(f, m.dim(), 0);
  for (const auto& s : summands) {
    if (s.ambient() != m.dim() || s.is_zero() || !is_subobject(m, s)) return false;
    all = hcat(all, s.basis());
  }
  return all.cols() == m.dim() && rank(all) == m.dim();
}

DaggerWitness dagger_witness(const ComoduleAlgebra& a) {
  DaggerWitness w;
  w.a_semisimple = a.field().is_rational() && radical_char0(a.algebra()).is_zero();
  w.a_is_commutative_h = is_hopf_itself(a) && a.hopf()->is_commutative();
  return w;
}

GeneratorSplitReport prop43_check(const RelHopfModule& m) {
  const ComoduleAlgebra& a = *m.over();
  GeneratorSplitReport out;
  out.dagger = dagger_witness(a);
  out.exactness = exactness_witness(a);
  const bool exact_to_k = out.exactness.cosemisimple_integral.has_value();
  const bool exact_to_b =
      a.is_commutative() && a.hopf()->is_commutative() && out.exactness.total_integral.has_value();
  out.applicable = !out.dagger.empty() && (exact_to_k || exact_to_b);
  if (!out.applicable) return out;
  out.epi = generator_epi(m);
  out.section = split_section(out.epi->source, m, out.epi->pi);
  out.split = out.section.has_value();
  return out;
}

}  // namespace hopfmod
