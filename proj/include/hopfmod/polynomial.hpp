#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfmod/field.hpp"

namespace hopfmod {

/// Coefficients by ascending degree; trailing zeros are trimmed by every producer here.
using Poly = std::vector<Scalar>;

std::size_t degree(const Poly& p);
Poly trim(Poly p);
Poly multiply(const Poly& a, const Poly& b);
/// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b);
std::string to_string(const Poly& p);

enum class Irreducibility { irreducible, reducible, unknown };

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::unknown;
  /// A proper monic factor when reducible.
  std::optional<Poly> factor;
};

/// Over F_p: exhaustive search of monic factors up to half the degree.
/// Over Q: Kronecker's interpolation method. Both give up with `unknown` once `budget`
/// candidate factors have been tried.
IrreducibilityResult irreducibility(const Poly& p, std::size_t budget = 200000);

}  // namespace hopfmod
