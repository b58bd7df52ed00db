#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hopfmod/diagnostics.hpp"
#include "hopfmod/matrix.hpp"

namespace hopfmod {

/// Finite-dimensional associative unital algebra by structure constants.
/// `mult` is dim x dim^2: column i*dim + j holds the coordinates of e_i e_j.
struct FinAlgebra {
  Field field;
  std::size_t dim = 0;
  Matrix mult;
  Matrix unit;  // dim x 1

  Matrix product(const Matrix& a, const Matrix& b) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const Matrix& a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(const Matrix& a) const;
  Matrix basis_vector(std::size_t i) const { return Matrix::unit_vector(field, dim, i); }
  bool is_commutative() const;
};

/// Associativity and two-sided unit, checked on all basis tuples.
Diagnostics check_algebra(const FinAlgebra& a);

/// The unique two-sided unit of the multiplication, if any.
std::optional<Matrix> find_unit(Field field, std::size_t dim, const Matrix& mult);

/// Comultiplication (dim^2 x dim, column i = coordinates of Delta(e_i)) and counit (1 x dim).
struct FinCoalgebra {
  std::size_t dim = 0;
  Matrix comult;
  Matrix counit;
};

Diagnostics check_coalgebra(const FinCoalgebra& c);

/// Unvalidated structure constants, as read from an instance file or produced by a builder.
struct RawHopfData {
  Field field;
  std::size_t dim = 0;
  Matrix mult;
  std::optional<Matrix> unit;  // derived from mult when absent
  Matrix comult;
  Matrix counit;
  Matrix antipode;  // column i = coordinates of S(e_i)
};

struct HopfValidation;

class HopfAlgebra {
 public:
  Field field() const { return algebra_.field; }
  std::size_t dim() const { return algebra_.dim; }
  const FinAlgebra& algebra() const { return algebra_; }
  const FinCoalgebra& coalgebra() const { return coalgebra_; }
  const Matrix& mult() const { return algebra_.mult; }
  const Matrix& unit() const { return algebra_.unit; }
  const Matrix& comult() const { return coalgebra_.comult; }
  const Matrix& counit() const { return coalgebra_.counit; }
  const Matrix& antipode() const { return antipode_; }
  /// Derived by inverting the antipode at validation time.
  const Matrix& antipode_inv() const { return antipode_inv_; }
  bool is_commutative() const { return algebra_.is_commutative(); }

  RawHopfData raw() const;

 private:
  friend HopfValidation validate_hopf(const RawHopfData& raw);
  HopfAlgebra() = default;

  FinAlgebra algebra_;
  FinCoalgebra coalgebra_;
  Matrix antipode_;
  Matrix antipode_inv_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct HopfValidation {
  HopfPtr hopf;  // null when any axiom fails
  Diagnostics diagnostics;
  bool ok() const { return hopf != nullptr; }
};

/// Checks every Hopf axiom exhaustively on basis tuples. Throws DimensionError when the
/// tables do not have matching shapes; axiom failures (including a singular antipode,
/// reported as "antipode not bijective") come back as diagnostics.
HopfValidation validate_hopf(const RawHopfData& raw);

/// Throws std::invalid_argument on a non-group table. table[i][j] = index of g_i g_j.
HopfPtr group_algebra(Field field, const std::vector<std::vector<std::size_t>>& table);

/// Cyclic group C_n with g_i = g^i.
HopfPtr cyclic_group_algebra(Field field, std::size_t n);

/// Sweedler's 4-dimensional Hopf algebra on the basis {1, g, x, gx}; requires char != 2.
HopfPtr sweedler_h4(Field field);

/// m o (S (x) id) o Delta - unit o counit; zero for every Hopf algebra.
Matrix antipode_defect(const HopfAlgebra& h);

}  // namespace hopfmod
