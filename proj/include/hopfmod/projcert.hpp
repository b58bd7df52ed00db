#pragma once

// Projectivity of coinvariants over B, total integrals, coinvariant generation, the
// projectivity implication chain, H-simplicity and the field test for B.

#include <optional>
#include <string>
#include <vector>

#include "hopfmod/polynomial.hpp"
#include "hopfmod/relhopf.hpp"

namespace hopfmod {

enum class SplitContext { over_B, in_category };

/// epi * section == identity, exactly.
struct SplitWitness {
  Matrix epi;
  Matrix section;
  SplitContext context = SplitContext::over_B;

  bool replays() const;
};

/// Canonical epi B^{(r)} -> P, r = dim P, sending the s-th copy of b to b p_s.
/// The free module is free_bmodule(P.over, r) with basis index s * dim B + t.
Matrix canonical_b_epi(const BModule& p);

/// B-linear section of the canonical epi, or nullopt when P is not projective over B.
std::optional<SplitWitness> is_projective_over_B(const BModule& p);

/// Replays a B-witness: split and B-linear on both maps between the given modules.
bool replays_over_B(const SplitWitness& w, const BModule& source, const BModule& target);

struct TotalIntegral {
  Matrix map;          // dim A x dim H
  MapSpace solutions;  // colinear maps H -> A with phi(1) = 0; map + solutions is the full solution set
};

std::optional<TotalIntegral> find_total_integral(const ComoduleAlgebra& a);
/// Colinear and unital.
bool is_total_integral(const ComoduleAlgebra& a, const Matrix& phi);

/// M = A M^{coH}.
bool is_coinvariantly_generated(const RelHopfModule& m);

/// Section of a category morphism, solved from f s = id with s A-linear and colinear.
std::optional<Matrix> split_section(const RelHopfModule& source, const RelHopfModule& target, const Matrix& f);
/// Retraction r of a category morphism, solved from r f = id with r A-linear and colinear.
std::optional<Matrix> split_retraction(const RelHopfModule& source, const RelHopfModule& target, const Matrix& f);

/// Replays an in-category witness epi: source -> target.
bool replays_in_category(const SplitWitness& w, const RelHopfModule& source, const RelHopfModule& target);

/// f^{coH} for a category morphism f: source -> target, in coinvariant coordinates.
Matrix coinvariant_restriction(const Matrix& f, const RelHopfModule& source, const RelHopfModule& target);

struct LiftedWitness {
  TensorProduct free;    // A (x)_B B^{(r)}
  TensorProduct target;  // A (x)_B P
  SplitWitness witness;  // 1 (x) p and 1 (x) section
};

/// Lifts a B-witness for the canonical epi onto P through A (x)_B -.
LiftedWitness lift_witness(const BModule& p, const SplitWitness& b_witness);

/// Applies (-)^{coH} to an in-category witness.
SplitWitness descend_witness(const SplitWitness& w, const RelHopfModule& source, const RelHopfModule& target);

struct ProjectivityCertificate {
  bool projective = false;
  BModule coinvariants;  // P = M^{coH}
  std::optional<SplitWitness> b_witness;
  std::optional<LiftedWitness> category_witness;
  std::optional<SplitWitness> descended_witness;
  bool category_witness_replays = false;
  bool descended_witness_replays = false;
  bool u_bijective = false;
  std::vector<std::string> notes;
};

ProjectivityCertificate certify_projectivity(const RelHopfModule& m);

struct ExactnessWitness {
  std::optional<Matrix> cosemisimple_integral;  // normalised integral on H
  std::optional<TotalIntegral> total_integral;
  bool empty() const { return !cosemisimple_integral && !total_integral; }
};

ExactnessWitness exactness_witness(const ComoduleAlgebra& a);

/// Free module A^{(r)} -> target sending the s-th copy of 1 to gens.col(s).
Matrix free_module_map(const RelHopfModule& target, const Matrix& gens);

struct ChainReport {
  BModule coinvariants;  // P = M^{coH}
  TensorProduct induced;  // A (x)_B P
  // (1): canonical epi A^{(dim P)} -> A (x)_B P splits in the category.
  bool item1 = false;
  std::optional<Matrix> item1_section;
  // (2): A (x)_B P is coinvariantly generated, u_P is bijective, and the epi from
  // A^{(coinvariants)} splits in the category.
  bool item2 = false;
  std::optional<Matrix> item2_section;
  // (3): P projective over B.
  bool item3 = false;
  std::optional<SplitWitness> item3_witness;
  ExactnessWitness exactness;
  bool implications_hold = false;
};

ChainReport prop25_chain(const RelHopfModule& m);

enum class Verdict { yes, no, unknown };

struct HSimplicity {
  Verdict simple = Verdict::unknown;
  std::optional<Subspace> ideal;  // proper nonzero H-ideal when not simple
  std::string certificate;        // how the verdict was reached
};

/// Coaction-stable two-sided ideal.
bool is_h_ideal(const ComoduleAlgebra& a, const Subspace& w);

HSimplicity is_H_simple(const ComoduleAlgebra& a, std::size_t exhaustive_budget = 1u << 16);

struct FieldVerdict {
  Verdict field = Verdict::unknown;
  std::optional<Matrix> element;  // theta in the basis of B
  Poly minimal_polynomial;
  std::optional<Poly> factor;  // proper factor of the minimal polynomial when reducible
  std::string reason;
};

/// Requires B commutative; throws PreconditionError otherwise.
FieldVerdict is_field(const FinAlgebra& b, std::size_t attempt_budget = 4096);

/// Replays a not-field witness: theta has a reducible (or x^k) minimal polynomial with
/// factors q, r such that q(theta) r(theta) = 0 and neither factor kills theta.
bool replays_not_field(const FinAlgebra& b, const FieldVerdict& v);

/// The algebra generated by ops equals all of End(k^n); then no proper invariant subspace exists.
bool generates_full_matrix_algebra(const std::vector<Matrix>& ops, Field field, std::size_t n);

}  // namespace hopfmod
