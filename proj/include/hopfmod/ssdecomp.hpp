#pragma once

// Finite generation by A (x) V, the H*-action on Hom spaces, the smash product A # H*,
// simplicity of relative Hopf modules and their semisimple decomposition.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfmod/projcert.hpp"

namespace hopfmod {

/// (h* f)(m) = h*(S^{-1}(m1) f(m0)1) f(m0)0, evaluated term by term. hstar is 1 x dim H.
Matrix hstar_action(const Matrix& hstar, const Matrix& f, const RelHopfModule& m, const RelHopfModule& n);

/// On the basis of _A Hom(M, N): the action of each coordinate functional of H equals the one
/// read off the Hom coaction, and stays A-linear.
bool rationality_check(const RelHopfModule& m, const RelHopfModule& n);

struct GeneratorEpi {
  Subspace v;             // subcomodule of M generated by the generators
  Comodule comodule;      // V in the coordinates of v.basis()
  RelHopfModule source;   // A (x) V
  Matrix pi;              // a (x) v -> a v
  bool surjective = false;
  bool a_linear = false;
  bool colinear = false;
};

/// generators: dim M x k. By default basis vectors are taken in order, each one only when it
/// lies outside the A-span of the subcomodule generated so far.
GeneratorEpi generator_epi(const RelHopfModule& m, std::optional<Matrix> generators = std::nullopt);

/// A # H* on the basis e_i (x) delta_r (index i * dim H + r), delta_r dual to the basis of H.
struct SmashAlgebra {
  AlgebraPtr base;
  FinAlgebra algebra;
  Matrix embed_a;      // (dim A * dim H) x dim A, a -> a (x) eps
  Matrix embed_hstar;  // (dim A * dim H) x dim H, f -> 1 (x) f
  Diagnostics diagnostics;

  /// Action matrix of a basis element on M: L_i composed with the r-th first leg.
  Matrix act(const RelHopfModule& m, std::size_t index) const;
  /// Action of an arbitrary element (coordinates in the smash basis).
  Matrix act_element(const RelHopfModule& m, const Matrix& x) const;
};

SmashAlgebra smash(const AlgebraPtr& a);

/// Operators whose common invariant subspaces are exactly the subobjects of M.
std::vector<Matrix> subobject_operators(const RelHopfModule& m);

/// {x : trace(L_x L_y) = 0 for all y}. Characteristic 0 only; throws PreconditionError otherwise.
Subspace radical_char0(const FinAlgebra& e);

struct SimplicityVerdict {
  Verdict simple = Verdict::unknown;
  std::optional<Subspace> subobject;  // proper nonzero subobject when not simple
  std::string certificate;
};

struct SeedOptions {
  std::uint64_t seed = 0;
  std::size_t random_seeds = 8;
  std::size_t exhaustive_budget = 1u << 16;
};

/// Throws std::invalid_argument for M = 0.
SimplicityVerdict is_simple_object(const RelHopfModule& m, const SeedOptions& opts = {});

struct Summand {
  Subspace space;
  bool certified = false;  // simple-certified; otherwise simple-probable
  std::string certificate;
};

struct Decomposition {
  std::vector<Summand> summands;
  bool complete = false;
  std::optional<Subspace> remainder;  // the part that could not be split off
  std::string diagnostic;
  bool a_semisimple = false;      // known only in characteristic 0
  bool h_cosemisimple = false;
};

Decomposition decompose_semisimple(const RelHopfModule& m, const SeedOptions& opts = {});

/// Summands independent, summing to M, each a subobject.
bool replays_decomposition(const RelHopfModule& m, const std::vector<Subspace>& summands);

struct DaggerWitness {
  bool a_semisimple = false;
  bool a_is_commutative_h = false;
  bool empty() const { return !a_semisimple && !a_is_commutative_h; }
};

DaggerWitness dagger_witness(const ComoduleAlgebra& a);

struct GeneratorSplitReport {
  bool applicable = false;
  DaggerWitness dagger;
  ExactnessWitness exactness;
  std::optional<GeneratorEpi> epi;
  std::optional<Matrix> section;
  bool split = false;
};

GeneratorSplitReport prop43_check(const RelHopfModule& m);

}  // namespace hopfmod
