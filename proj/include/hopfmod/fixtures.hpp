#pragma once

// Shipped example instances, built in code and serialized to the instance format.

#include <string>
#include <vector>

#include "hopfmod/instance.hpp"

namespace hopfmod {

/// The one-dimensional Hopf algebra k.
HopfPtr trivial_hopf(Field f);
/// k[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
FinAlgebra truncated_polynomial(Field f, std::size_t n);
/// k[x]/(x^n) graded by C_2 through rho(x^i) = x^i (x) g^{i mod 2}; kc2 has basis {1, g}.
AlgebraPtr graded_truncated(const HopfPtr& kc2, std::size_t n);
/// A/(x^k) for a graded truncated polynomial algebra A, on the basis 1, x, ..., x^{k-1}.
RelHopfModule graded_quotient(const AlgebraPtr& a, std::size_t k);
/// One-dimensional B-module b -> (coefficient of the first basis vector of A in b); for
/// truncated polynomial algebras every coinvariant of positive degree acts by 0.
BModule augmentation_bmodule(const AlgebraPtr& a);
/// Over A = k with trivial coaction: the one-dimensional module with rho(1) = 1 (x) h_index.
RelHopfModule one_dim_module(const AlgebraPtr& k_algebra, std::size_t h_index);

/// Hopf data of h with the antipode replaced by 0.
RawHopfData zero_antipode(const HopfAlgebra& h);
/// The coaction of graded_truncated(kc2, n) with rho(x) = x (x) 1 instead of x (x) g.
Comodule broken_grading(const AlgebraPtr& graded);

struct NamedFixture {
  std::string name;
  std::string file;
  BlockKind kind;
  std::string object;
};

/// TRIV, KC2, KC2F2, HH, A4, M2, SW4, HH2 with the file and object each one lives in.
const std::vector<NamedFixture>& named_fixtures();
/// File names in emission order.
std::vector<std::string> fixture_files();
/// Throws std::invalid_argument for an unknown file.
RawInstance fixture_raw(const std::string& file);
std::string fixture_text(const std::string& file);

}  // namespace hopfmod
