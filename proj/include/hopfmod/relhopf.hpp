#pragma once

// Comodule algebras A with coinvariants B = A^{coH}, relative (A,H)-Hopf modules, B-modules,
// and the constructions relating them: tensor products, Hom spaces with their H-coaction,
// the adjunction A (x)_B - -| (-)^{coH} and the M (x) H isomorphism.

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopfmod/comodule.hpp"

namespace hopfmod {

/// A construction was asked for outside its hypotheses (e.g. non-commutative H).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ComoduleAlgebraValidation;
struct RelHopfModuleValidation;

class ComoduleAlgebra {
 public:
  HopfPtr hopf() const { return coaction_.hopf; }
  Field field() const { return algebra_.field; }
  std::size_t dim() const { return algebra_.dim; }
  const FinAlgebra& algebra() const { return algebra_; }
  const Comodule& coaction() const { return coaction_; }
  /// B = A^{coH}; its basis order is the coordinate system for every B-module.
  const Subspace& coinvariants() const { return coinvariants_; }
  /// B with structure constants in the coordinates of coinvariants().basis().
  const FinAlgebra& coinvariant_algebra() const { return coinvariant_algebra_; }
  bool is_commutative() const { return commutative_; }
  /// Left multiplication by the t-th basis vector of B, acting on A.
  Matrix coinvariant_left_mult(std::size_t t) const;

 private:
  friend ComoduleAlgebraValidation validate_comodule_algebra(const FinAlgebra&, const Comodule&);
  ComoduleAlgebra() = default;

  FinAlgebra algebra_;
  Comodule coaction_;
  Subspace coinvariants_;
  FinAlgebra coinvariant_algebra_;
  bool commutative_ = false;
};

using AlgebraPtr = std::shared_ptr<const ComoduleAlgebra>;

struct ComoduleAlgebraValidation {
  AlgebraPtr algebra;
  Diagnostics diagnostics;
  bool ok() const { return algebra != nullptr; }
};

/// Checks the algebra axioms, the comodule axioms, colinearity of unit and multiplication,
/// and that the coinvariants form a unital subalgebra.
ComoduleAlgebraValidation validate_comodule_algebra(const FinAlgebra& algebra, const Comodule& coaction);

/// A = H with coaction Delta.
AlgebraPtr regular_comodule_algebra(const HopfPtr& h);
/// A = k with the trivial coaction.
AlgebraPtr trivial_comodule_algebra(const HopfPtr& h);

/// True when A is H itself with coaction Delta (same structure constants).
bool is_hopf_itself(const ComoduleAlgebra& a);

/// Left A-module + right H-comodule with rho(a m) = a0 m0 (x) a1 m1.
class RelHopfModule {
 public:
  const AlgebraPtr& over() const { return over_; }
  HopfPtr hopf() const { return over_->hopf(); }
  Field field() const { return over_->field(); }
  std::size_t dim() const { return coaction_.dim; }
  /// action()[i] is the matrix of m -> e_i m.
  const std::vector<Matrix>& action() const { return action_; }
  const Comodule& coaction() const { return coaction_; }
  /// M^{coH}.
  const Subspace& coinvariants() const { return coinvariants_; }
  /// Matrix of m -> a m for a in A (dim A x 1).
  Matrix act(const Matrix& a) const;
  /// The action as a map A (x) M -> M.
  Matrix action_map() const;

 private:
  friend RelHopfModuleValidation validate_relhopf(const AlgebraPtr&, std::vector<Matrix>, Matrix);
  RelHopfModule() = default;

  AlgebraPtr over_;
  std::vector<Matrix> action_;
  Comodule coaction_;
  Subspace coinvariants_;
};

struct RelHopfModuleValidation {
  std::optional<RelHopfModule> module;
  Diagnostics diagnostics;
  bool ok() const { return module.has_value(); }
};

RelHopfModuleValidation validate_relhopf(const AlgebraPtr& over, std::vector<Matrix> action, Matrix coaction);
/// validate_relhopf that throws std::logic_error on failure; for constructions that must succeed.
RelHopfModule make_relhopf(const AlgebraPtr& over, std::vector<Matrix> action, Matrix coaction);

RelHopfModule regular_module(const AlgebraPtr& a);
RelHopfModule zero_module(const AlgebraPtr& a);
RelHopfModule direct_sum(const RelHopfModule& m, const RelHopfModule& n);
/// Direct sum of r copies of A.
RelHopfModule free_module(const AlgebraPtr& a, std::size_t r);
/// The subobject on an A-stable subcomodule w, in the coordinates of w.basis().
RelHopfModule restrict_module(const RelHopfModule& m, const Subspace& w);
bool is_subobject(const RelHopfModule& m, const Subspace& w);

bool is_a_linear(const Matrix& f, const RelHopfModule& source, const RelHopfModule& target);
/// A-linear and H-colinear.
bool is_morphism(const Matrix& f, const RelHopfModule& source, const RelHopfModule& target);

struct RelHopfMorphism {
  std::shared_ptr<const RelHopfModule> source;
  std::shared_ptr<const RelHopfModule> target;
  Matrix matrix;  // dim target x dim source
};

/// Left B-module over B = A^{coH}; action()[t] is the matrix of the t-th basis vector of B.
struct BModule {
  AlgebraPtr over;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  /// Matrix of p -> b p for b in B coordinates.
  Matrix act(const Matrix& b) const;
};

/// Unit and associativity of the B-action, on basis tuples.
Diagnostics check_bmodule(const BModule& p);
BModule regular_bmodule(const AlgebraPtr& a);
BModule free_bmodule(const AlgebraPtr& a, std::size_t r);
/// M^{coH} with the restricted action of B, in the coordinates of M.coinvariants().basis().
BModule coinvariant_bmodule(const RelHopfModule& m);
bool is_b_linear(const Matrix& f, const BModule& source, const BModule& target);

/// A vector space of linear maps rows x cols, held as the columns of their row-major vectorizations.
struct MapSpace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Matrix basis;  // (rows*cols) x dim

  std::size_t dim() const { return basis.cols(); }
  Matrix map(std::size_t s) const { return Matrix::unvectorize(basis.col(s), rows, cols); }
  /// Sum of coeffs[s] * map(s).
  Matrix combine(const Matrix& coeffs) const;
  /// Coordinates of f in the basis; nullopt if outside.
  std::optional<Matrix> coordinates(const Matrix& f) const;
  Subspace as_subspace() const { return Subspace::span(basis); }
};

/// Linear constraint rows on vec(f) expressing A-linearity f: source -> target.
Matrix a_linearity_constraints(const RelHopfModule& source, const RelHopfModule& target);
/// Linear constraint rows on vec(f) expressing colinearity f: source -> target.
Matrix colinearity_constraints(const Comodule& source, const Comodule& target);

/// _A Hom(M, N).
MapSpace a_linear_maps(const RelHopfModule& m, const RelHopfModule& n);
/// _A Hom^H(M, N), solved jointly from both constraint families.
MapSpace morphism_space(const RelHopfModule& m, const RelHopfModule& n);

/// _A Hom(M, N) with the coaction (pi f)(m) = f(m0)0 (x) S^{-1}(m1) f(m0)1.
struct HomSpace {
  MapSpace maps;
  Comodule comodule;  // coaction in the coordinates of maps
  /// Every component of pi(f) landed back in _A Hom(M, N).
  bool well_defined = true;
  /// pi passes the comodule axioms.
  bool coassociative = true;
};

HomSpace hom_space(const RelHopfModule& m, const RelHopfModule& n);

/// pi(f) as the map M -> N (x) H, evaluated from the defining formula.
Matrix hom_coaction_of(const Matrix& f, const RelHopfModule& m, const RelHopfModule& n);

/// pi-coinvariants of _A Hom(M, N) equal _A Hom^H(M, N) as subspaces of Hom(M, N).
bool hom_coinvariants_equal_colinear(const RelHopfModule& m, const RelHopfModule& n);

/// _A Hom(A, N) as a relative Hopf module, with (a f)(u) = f(u a) and coaction pi.
RelHopfModule hom_from_regular(const RelHopfModule& n, MapSpace* maps_out = nullptr);

struct EvalIso {
  std::shared_ptr<const RelHopfModule> hom;  // _A Hom(A, N)
  MapSpace maps;
  RelHopfMorphism psi;      // f -> f(1)
  RelHopfMorphism psi_inv;  // n -> (a -> a n)
};

EvalIso eval_iso_psi(const RelHopfModule& n);

/// N (x) V with action on the left factor and codiagonal coaction.
RelHopfModule tensor_with_comodule(const RelHopfModule& n, const Comodule& v);
/// V (x) N with action on the right factor; requires H commutative.
RelHopfModule tensor_commutative_H(const Comodule& v, const RelHopfModule& n);

/// V / R represented by a complement of R spanned by standard basis vectors in pivot order.
struct Quotient {
  Subspace relations;
  Matrix projection;  // dim x ambient; kills relations
  Matrix section;     // ambient x dim; projection * section = id
  std::size_t dim() const { return section.cols(); }
  std::size_t ambient() const { return relations.ambient(); }
  /// projection * op * section, after checking op preserves the relations.
  Matrix induced(const Matrix& op) const;
};

Quotient quotient_by(const Subspace& relations);

struct TensorProduct {
  RelHopfModule module;
  Quotient quotient;  // of the plain tensor product of the factors
};

/// M (x)_A N for commutative A, coaction m0 (x) n0 (x) m1 n1.
TensorProduct tensor_over_A(const RelHopfModule& m, const RelHopfModule& n);
/// A (x)_B P with action on A and coaction a0 (x) p (x) a1.
TensorProduct tensor_over_B(const AlgebraPtr& a, const BModule& p);

struct UnitMap {
  TensorProduct tensor;  // A (x)_B P
  Matrix map;            // P -> (A (x)_B P)^{coH}, in coinvariant coordinates
  bool b_linear = false;
  bool injective = false;
  bool bijective = false;
};

/// u_P(p) = 1 (x) p.
UnitMap unit_map(const BModule& p);

struct CounitMap {
  TensorProduct tensor;  // A (x)_B M^{coH}
  RelHopfMorphism morphism;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/// c_M(a (x) m) = a m.
CounitMap counit_map(const RelHopfModule& m);

struct MTensorH {
  RelHopfModule module;  // M (x) H
  Subspace coinvariants;
  Matrix f;  // M -> (M (x) H)^{coH}, coinvariant coordinates
  Matrix g;  // (M (x) H)^{coH} -> M
  bool inverse_pair = false;
  bool b_linear = false;
};

/// M (x) H with a(m (x) h) = am (x) h and rho(m (x) h) = m0 (x) h1 (x) m1 h2;
/// f(m) = m0 (x) S(m1), g(m (x) h) = eps(h) m.
MTensorH m_tensor_H(const RelHopfModule& m);

struct CurryIso {
  MapSpace left;   // _A Hom^H(M, _A Hom(N, P))
  MapSpace right;  // _A Hom^H(M (x)_A N, P)
  Matrix phi;      // coordinates left -> right
  Matrix phi_inv;  // coordinates right -> left
  bool mutually_inverse = false;
};

/// phi(f)(m (x) n) = f(m)(n). Requires A and H commutative.
CurryIso curry_iso(const RelHopfModule& m, const RelHopfModule& n, const RelHopfModule& p);

/// _A Hom(N, P) for commutative A, with (a f)(n) = a f(n) and coaction pi.
RelHopfModule hom_module_commutative(const RelHopfModule& n, const RelHopfModule& p, MapSpace* maps_out = nullptr);

}  // namespace hopfmod
