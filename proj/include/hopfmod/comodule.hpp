#pragma once

#include <optional>

#include "hopfmod/hopf.hpp"
#include "hopfmod/subspace.hpp"

namespace hopfmod {

/// Right H-comodule. `coaction` is (dim * dim H) x dim; column i holds rho(e_i) in the
/// basis e_j (x) h_k at row j * dim H + k.
struct Comodule {
  HopfPtr hopf;
  std::size_t dim = 0;
  Matrix coaction;

  Field field() const { return hopf->field(); }
};

/// Coassociativity and counit law on every basis vector.
Diagnostics check_comodule(const Comodule& m);

/// H over itself via Delta.
Comodule regular_comodule(const HopfPtr& h);
/// rho(m) = m (x) 1.
Comodule trivial_comodule(const HopfPtr& h, std::size_t dim);
/// k_g: one-dimensional, rho(1) = 1 (x) h_index. Only a comodule when h_index is group-like.
Comodule one_dim_comodule(const HopfPtr& h, std::size_t h_index);
/// Codiagonal coaction m (x) n -> m0 (x) n0 (x) m1 n1.
Comodule tensor_comodules(const Comodule& m, const Comodule& n);

/// Matrix of v -> v (x) 1_H.
Matrix tensor_unit(const Comodule& m);
/// rho - (- (x) 1); its kernel is the coinvariant subspace.
Matrix coinvariance_map(const Comodule& m);
Subspace coinvariants(const Comodule& m);

/// Matrix of (id (x) h_k^*) o rho, with h_k^* the k-th coordinate functional on H.
Matrix first_leg(const Comodule& m, std::size_t k);
std::vector<Matrix> first_legs(const Comodule& m);

/// rho_N o f == (f (x) id_H) o rho_M. Throws DimensionError if f is not dim N x dim M.
bool is_colinear(const Matrix& f, const Comodule& m, const Comodule& n);

bool is_subcomodule(const Comodule& m, const Subspace& w);
/// Coaction restricted to a subcomodule, in the coordinates of w.basis().
Comodule restrict_comodule(const Comodule& m, const Subspace& w);

/// Smallest subcomodule containing v: first legs of rho, iterated to a fixed point.
Subspace generated_subcomodule(const Comodule& m, const Matrix& v);

struct CosemisimplicityResult {
  bool cosemisimple = false;
  /// lambda (1 x dim H) with lambda(1) = 1 and (id (x) lambda) Delta = 1 lambda.
  std::optional<Matrix> integral;
};

/// Dual Maschke criterion: a normalised integral on H exists.
CosemisimplicityResult is_cosemisimple(const HopfAlgebra& h);

/// Replays the defining identities of a candidate normalised integral.
bool is_normalized_integral(const HopfAlgebra& h, const Matrix& lambda);

/// True when every basis element of H is group-like (H is a group algebra in its given basis).
bool is_grouplike_basis(const HopfAlgebra& h);

}  // namespace hopfmod
