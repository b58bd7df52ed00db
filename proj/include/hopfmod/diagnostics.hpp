#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfmod {

/// One failed axiom, named, with the basis indices (0-based) of the offending tuple.
struct Diagnostic {
  std::string axiom;
  std::vector<std::size_t> indices;

  std::string to_string() const;
};

using Diagnostics = std::vector<Diagnostic>;

bool has_axiom(const Diagnostics& ds, const std::string& axiom);

}  // namespace hopfmod
