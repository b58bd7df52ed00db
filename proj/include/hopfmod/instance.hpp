#pragma once

// Line-oriented instance files: a field header followed by hopf, algebra, module and bmodule
// blocks of sparse 1-based structure constants.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfmod/relhopf.hpp"

namespace hopfmod {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, bool semantic = false);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  bool semantic() const { return semantic_; }

 private:
  std::size_t line_;
  std::size_t column_;
  bool semantic_;
};

enum class BlockKind { hopf, algebra, module, bmodule };

const char* to_string(BlockKind k);

/// Entries keyed by table name then by 0-based index tuple; zero entries are never stored.
struct Block {
  BlockKind kind = BlockKind::hopf;
  std::string name;
  std::string over;  // empty for hopf blocks
  std::size_t dim = 0;
  std::size_t line = 0;
  std::map<std::string, std::map<std::vector<std::size_t>, Scalar>> entries;

  bool operator==(const Block& o) const {
    return kind == o.kind && name == o.name && over == o.over && dim == o.dim && entries == o.entries;
  }
};

struct RawInstance {
  Field field = Field::rationals();
  std::vector<Block> blocks;

  bool operator==(const RawInstance& o) const { return field == o.field && blocks == o.blocks; }
};

/// Throws ParseError with 1-based line and column.
RawInstance parse_instance(std::string_view text);
std::string serialize(const RawInstance& raw);

struct NamedHopf {
  std::string name;
  HopfPtr hopf;
};
struct NamedAlgebra {
  std::string name;
  std::string hopf;
  AlgebraPtr algebra;
};
struct NamedModule {
  std::string name;
  std::string algebra;
  RelHopfModule module;
};
struct NamedBModule {
  std::string name;
  std::string algebra;
  BModule module;
};

struct ObjectValidation {
  BlockKind kind;
  std::string name;
  std::vector<std::string> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Validated objects; objects that fail validation are listed in `validation` only.
struct Instance {
  Field field = Field::rationals();
  std::vector<NamedHopf> hopfs;
  std::vector<NamedAlgebra> algebras;
  std::vector<NamedModule> modules;
  std::vector<NamedBModule> bmodules;
  std::vector<ObjectValidation> validation;

  bool all_valid() const;
  const NamedHopf* find_hopf(std::string_view name) const;
  const NamedAlgebra* find_algebra(std::string_view name) const;
  const NamedModule* find_module(std::string_view name) const;
  const NamedBModule* find_bmodule(std::string_view name) const;
  /// Name of the algebra object a is registered under; throws if absent.
  const std::string& algebra_name(const ComoduleAlgebra& a) const;
};

/// Runs every validator in file order.
Instance build_instance(const RawInstance& raw);

/// Builder for serializing objects constructed in code.
class InstanceWriter {
 public:
  explicit InstanceWriter(Field field) { raw_.field = field; }
  InstanceWriter& hopf(const std::string& name, const HopfAlgebra& h);
  InstanceWriter& algebra(const std::string& name, const std::string& hopf, const ComoduleAlgebra& a);
  InstanceWriter& module(const std::string& name, const std::string& algebra, const RelHopfModule& m);
  InstanceWriter& bmodule(const std::string& name, const std::string& algebra, const BModule& p);
  const RawInstance& raw() const { return raw_; }

 private:
  RawInstance raw_;
};

}  // namespace hopfmod
