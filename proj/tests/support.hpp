#pragma once

// Generators and independent oracles shared by the test binaries.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hopfmod/fixtures.hpp"
#include "hopfmod/instance.hpp"
#include "hopfmod/linalg.hpp"

namespace testsupport {

using namespace hopfmod;

inline Instance load_fixture(const std::string& file) { return build_instance(fixture_raw(file)); }

inline const RelHopfModule& module_named(const Instance& inst, const std::string& name) {
  const NamedModule* m = inst.find_module(name);
  if (!m) throw std::logic_error("fixture has no module " + name);
  return m->module;
}

inline const AlgebraPtr& algebra_named(const Instance& inst, const std::string& name) {
  const NamedAlgebra* a = inst.find_algebra(name);
  if (!a) throw std::logic_error("fixture has no algebra " + name);
  return a->algebra;
}

inline const BModule& bmodule_named(const Instance& inst, const std::string& name) {
  const NamedBModule* p = inst.find_bmodule(name);
  if (!p) throw std::logic_error("fixture has no bmodule " + name);
  return p->module;
}

/// Small scalars: integers in [-range, range] over Q, uniform residues over F_p.
inline Scalar random_scalar(std::mt19937_64& rng, Field f, long range = 3) {
  if (!f.is_rational()) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
    return Scalar::from_int(f, d(rng));
  }
  std::uniform_int_distribution<long> d(-range, range);
  return Scalar::from_int(f, d(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols, long range = 3) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, f, range);
  return m;
}

/// A rows x cols matrix of rank at most k, built as a product so rank deficiency is common.
inline Matrix random_low_rank(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, f, rows, k) * random_matrix(rng, f, k, cols);
}

/// Textbook Gauss-Jordan with division, written independently of the library elimination.
inline std::size_t naive_rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) / a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

// ---- F_2 exhaustive enumeration; vectors of F_2^n are bitmasks, bit i = coordinate i ----

inline std::uint32_t to_mask(const Matrix& v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (!v[i].is_zero()) m |= 1u << i;
  return m;
}

inline Matrix from_mask(Field f2, std::size_t n, std::uint32_t m) {
  Matrix v(f2, n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (m & (1u << i)) v[i] = Scalar::one(f2);
  return v;
}

/// Every subspace of F_2^n, found by testing all 2^(2^n) subsets of vectors for closure.
/// Requires n <= 4, so at most 2^16 candidates.
inline std::vector<std::set<std::uint32_t>> all_f2_subspaces(std::size_t n) {
  if (n > 4) throw std::invalid_argument("exhaustive enumeration limited to n <= 4");
  const std::uint32_t vectors = 1u << n;
  std::vector<std::set<std::uint32_t>> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << vectors); ++subset) {
    if (!(subset & 1)) continue;  // must contain 0
    bool closed = true;
    for (std::uint32_t u = 0; u < vectors && closed; ++u)
      for (std::uint32_t w = 0; w < vectors && closed; ++w)
        if ((subset >> u & 1) && (subset >> w & 1) && !(subset >> (u ^ w) & 1)) closed = false;
    if (!closed) continue;
    std::set<std::uint32_t> s;
    for (std::uint32_t u = 0; u < vectors; ++u)
      if (subset >> u & 1) s.insert(u);
    out.push_back(std::move(s));
  }
  return out;
}

/// Applies op to each vector of s and checks the image stays inside s.
inline bool f2_stable(const std::set<std::uint32_t>& s, const Matrix& op, Field f2) {
  for (std::uint32_t u : s)
    if (!s.count(to_mask(op * from_mask(f2, op.cols(), u)))) return false;
  return true;
}

/// Elements of a library subspace, enumerated from its basis.
inline std::set<std::uint32_t> f2_elements(const Subspace& w) {
  std::set<std::uint32_t> out;
  const std::size_t d = w.dim();
  for (std::uint32_t c = 0; c < (1u << d); ++c) {
    std::uint32_t v = 0;
    for (std::size_t t = 0; t < d; ++t)
      if (c & (1u << t)) v ^= to_mask(w.basis().col(t));
    out.insert(v);
  }
  return out;
}

inline Subspace f2_span(Field f2, std::size_t n, const std::set<std::uint32_t>& s) {
  Matrix gens(f2, n, s.size());
  std::size_t c = 0;
  for (std::uint32_t u : s) gens.set_col(c++, from_mask(f2, n, u));
  return Subspace::span(gens);
}

/// rho(v) = v (x) 1 tested directly on the coaction matrix, for one vector.
inline bool f2_is_coinvariant(const Comodule& m, std::uint32_t v) {
  const Field f = m.field();
  const Matrix x = from_mask(f, m.dim, v);
  return m.coaction * x == kronecker(x, m.hopf->unit());
}

}  // namespace testsupport
