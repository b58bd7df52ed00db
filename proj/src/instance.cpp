#include "hopfmod/instance.hpp"

#include <set>
#include <sstream>

namespace hopfmod {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

struct TableShape {
  const char* key;
  std::size_t arity;
};

// Table names accepted in each kind of block, in serialization order.
const std::vector<TableShape>& tables_for(BlockKind k) {
  static const std::vector<TableShape> hopf{{"mult", 3}, {"unit", 1}, {"comult", 3}, {"counit", 1}, {"antipode", 2}};
  static const std::vector<TableShape> algebra{{"mult", 3}, {"unit", 1}, {"coaction", 3}};
  static const std::vector<TableShape> module{{"action", 3}, {"coaction", 3}};
  static const std::vector<TableShape> bmodule{{"action", 3}};
  switch (k) {
    case BlockKind::hopf: return hopf;
    case BlockKind::algebra: return algebra;
    case BlockKind::module: return module;
    case BlockKind::bmodule: return bmodule;
  }
  return hopf;
}

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  if (t.text.empty() || t.text.size() > 9) throw ParseError(line, t.column, std::string("expected ") + what);
  std::size_t v = 0;
  for (char c : t.text) {
    if (c < '0' || c > '9') throw ParseError(line, t.column, std::string("expected ") + what);
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

const Block* find_block(const std::vector<Block>& blocks, BlockKind kind, const std::string& name) {
  for (const auto& b : blocks)
    if (b.kind == kind && b.name == name) return &b;
  return nullptr;
}

void append_diagnostics(const Diagnostics& ds, std::vector<std::string>& out) {
  for (const auto& d : ds) out.push_back(d.to_string());
}

Matrix table3(const Block& b, const std::string& key, Field f, std::size_t rows, std::size_t cols,
              std::size_t (*row)(std::size_t, std::size_t, std::size_t, std::size_t),
              std::size_t (*col)(std::size_t, std::size_t, std::size_t, std::size_t), std::size_t inner) {
  Matrix m(f, rows, cols);
  auto it = b.entries.find(key);
  if (it == b.entries.end()) return m;
  for (const auto& [idx, v] : it->second) m(row(idx[0], idx[1], idx[2], inner), col(idx[0], idx[1], idx[2], inner)) = v;
  return m;
}

// mult i j k: e_i e_j has coefficient c at e_k.
Matrix mult_table(const Block& b, Field f) {
  return table3(
      b, "mult", f, b.dim, b.dim * b.dim, [](std::size_t, std::size_t, std::size_t k, std::size_t) { return k; },
      [](std::size_t i, std::size_t j, std::size_t, std::size_t n) { return i * n + j; }, b.dim);
}

// comult/coaction i j k: e_i -> c e_j (x) h_k.
Matrix coaction_table(const Block& b, const std::string& key, Field f, std::size_t right_dim) {
  return table3(
      b, key, f, b.dim * right_dim, b.dim,
      [](std::size_t, std::size_t j, std::size_t k, std::size_t d) { return j * d + k; },
      [](std::size_t i, std::size_t, std::size_t, std::size_t) { return i; }, right_dim);
}

Matrix vector_table(const Block& b, const std::string& key, Field f, bool row) {
  Matrix m = row ? Matrix(f, 1, b.dim) : Matrix(f, b.dim, 1);
  auto it = b.entries.find(key);
  if (it == b.entries.end()) return m;
  for (const auto& [idx, v] : it->second) (row ? m(0, idx[0]) : m(idx[0], 0)) = v;
  return m;
}

std::vector<Matrix> action_tables(const Block& b, Field f, std::size_t count) {
  std::vector<Matrix> out(count, Matrix(f, b.dim, b.dim));
  auto it = b.entries.find("action");
  if (it == b.entries.end()) return out;
  for (const auto& [idx, v] : it->second) {
    if (idx[0] >= count) throw DimensionError("action index " + std::to_string(idx[0] + 1) + " exceeds the acting dimension " + std::to_string(count));
    out[idx[0]](idx[2], idx[1]) = v;
  }
  return out;
}

void put(Block& b, const std::string& key, std::vector<std::size_t> idx, const Scalar& v) {
  if (!v.is_zero()) b.entries[key][std::move(idx)] = v;
}

void put_mult(Block& b, const Matrix& mult) {
  const std::size_t n = b.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) put(b, "mult", {i, j, k}, mult(k, i * n + j));
}

void put_coaction(Block& b, const std::string& key, const Matrix& co, std::size_t right_dim) {
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < right_dim; ++k) put(b, key, {i, j, k}, co(j * right_dim + k, i));
}

void put_action(Block& b, const std::vector<Matrix>& action) {
  for (std::size_t i = 0; i < action.size(); ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) put(b, "action", {i, j, k}, action[i](k, j));
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message, bool semantic)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      semantic_(semantic) {}

const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::hopf: return "hopf";
    case BlockKind::algebra: return "algebra";
    case BlockKind::module: return "module";
    case BlockKind::bmodule: return "bmodule";
  }
  return "?";
}

RawInstance parse_instance(std::string_view text) {
  RawInstance raw;
  bool have_field = false;
  std::set<std::string> names;
  std::set<std::pair<std::string, std::vector<std::size_t>>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0].text;

    if (!have_field) {
      if (head != "field") throw ParseError(line_no, tok[0].column, "expected 'field Q' or 'field F <p>'");
      if (tok.size() == 2 && tok[1].text == "Q") {
        raw.field = Field::rationals();
      } else if (tok.size() == 3 && tok[1].text == "F") {
        const std::size_t p = parse_count(tok[2], line_no, "a prime");
        try {
          raw.field = Field::prime(p);
        } catch (const std::exception& e) {
          throw ParseError(line_no, tok[2].column, e.what());
        }
      } else {
        throw ParseError(line_no, tok[0].column, "expected 'field Q' or 'field F <p>'");
      }
      have_field = true;
      continue;
    }

    if (head == "field") throw ParseError(line_no, tok[0].column, "field declared twice");
    if (head == "hopf" || head == "algebra" || head == "module" || head == "bmodule") {
      Block b;
      b.line = line_no;
      b.kind = head == "hopf" ? BlockKind::hopf
               : head == "algebra" ? BlockKind::algebra
               : head == "module"  ? BlockKind::module
                                   : BlockKind::bmodule;
      const bool has_over = b.kind != BlockKind::hopf;
      const std::size_t expected = has_over ? 6 : 4;
      if (tok.size() != expected)
        throw ParseError(line_no, tok[0].column,
                         has_over ? head + " header is '" + head + " <name> over <name> dim <n>'"
                                  : std::string("hopf header is 'hopf <name> dim <n>'"));
      b.name = tok[1].text;
      std::size_t pos = 2;
      if (has_over) {
        if (tok[2].text != "over") throw ParseError(line_no, tok[2].column, "expected 'over'");
        b.over = tok[3].text;
        const BlockKind parent = b.kind == BlockKind::algebra ? BlockKind::hopf : BlockKind::algebra;
        if (!find_block(raw.blocks, parent, b.over))
          throw ParseError(line_no, tok[3].column,
                           std::string("unknown ") + to_string(parent) + " '" + b.over + "'", true);
        pos = 4;
      }
      if (tok[pos].text != "dim") throw ParseError(line_no, tok[pos].column, "expected 'dim'");
      b.dim = parse_count(tok[pos + 1], line_no, "a dimension");
      if (!names.insert(b.name).second)
        throw ParseError(line_no, tok[1].column, "duplicate name '" + b.name + "'", true);
      raw.blocks.push_back(std::move(b));
      seen.clear();
      continue;
    }

    if (raw.blocks.empty()) throw ParseError(line_no, tok[0].column, "entry '" + head + "' outside any block");
    Block& b = raw.blocks.back();
    const auto& shapes = tables_for(b.kind);
    const TableShape* shape = nullptr;
    for (const auto& s : shapes)
      if (head == s.key) shape = &s;
    if (!shape) throw ParseError(line_no, tok[0].column, "'" + head + "' is not allowed in a " + to_string(b.kind) + " block");
    if (tok.size() != shape->arity + 2)
      throw ParseError(line_no, tok[0].column,
                       "'" + head + "' takes " + std::to_string(shape->arity) + " indices and a scalar");

    // Bounds per index position; 0 means checked later against dim B.
    std::vector<std::size_t> bounds(shape->arity, b.dim);
    const bool coaction = head == "coaction" || head == "comult";
    if (coaction && b.kind != BlockKind::hopf) {
      const Block* hopf = nullptr;
      if (b.kind == BlockKind::algebra) {
        hopf = find_block(raw.blocks, BlockKind::hopf, b.over);
      } else {
        const Block* alg = find_block(raw.blocks, BlockKind::algebra, b.over);
        hopf = find_block(raw.blocks, BlockKind::hopf, alg->over);
      }
      bounds[2] = hopf->dim;
    }
    if (head == "action") {
      const Block* alg = find_block(raw.blocks, BlockKind::algebra, b.over);
      bounds[0] = b.kind == BlockKind::module ? alg->dim : 0;
    }
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < shape->arity; ++a) {
      const Token& t = tok[1 + a];
      const std::size_t v = parse_count(t, line_no, "a 1-based index");
      if (v == 0 || (bounds[a] != 0 && v > bounds[a]))
        throw ParseError(line_no, t.column, "index " + t.text + " out of range");
      idx.push_back(v - 1);
    }
    const Token& st = tok.back();
    Scalar value = Scalar::zero(raw.field);
    try {
      value = Scalar::parse(raw.field, st.text);
    } catch (const std::exception& e) {
      throw ParseError(line_no, st.column, e.what());
    }
    if (!seen.insert({head, idx}).second) throw ParseError(line_no, tok[0].column, "duplicate entry");
    put(b, head, idx, value);
  }
  if (!have_field) throw ParseError(line_no == 0 ? 1 : line_no, 1, "empty instance: missing field header");
  return raw;
}

std::string serialize(const RawInstance& raw) {
  std::ostringstream out;
  out << "field " << (raw.field.is_rational() ? std::string("Q") : "F " + std::to_string(raw.field.characteristic()))
      << "\n";
  for (const auto& b : raw.blocks) {
    out << "\n" << to_string(b.kind) << " " << b.name;
    if (b.kind != BlockKind::hopf) out << " over " << b.over;
    out << " dim " << b.dim << "\n";
    for (const auto& shape : tables_for(b.kind)) {
      auto it = b.entries.find(shape.key);
      if (it == b.entries.end()) continue;
      for (const auto& [idx, v] : it->second) {
        out << shape.key;
        for (std::size_t i : idx) out << " " << i + 1;
        out << " " << v.to_string() << "\n";
      }
    }
  }
  return out.str();
}

bool Instance::all_valid() const {
  for (const auto& v : validation)
    if (!v.ok()) return false;
  return true;
}

const NamedHopf* Instance::find_hopf(std::string_view name) const {
  for (const auto& h : hopfs)
    if (h.name == name) return &h;
  return nullptr;
}
const NamedAlgebra* Instance::find_algebra(std::string_view name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  return nullptr;
}
const NamedModule* Instance::find_module(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}
const NamedBModule* Instance::find_bmodule(std::string_view name) const {
  for (const auto& m : bmodules)
    if (m.name == name) return &m;
  return nullptr;
}
const std::string& Instance::algebra_name(const ComoduleAlgebra& a) const {
  for (const auto& n : algebras)
    if (n.algebra.get() == &a) return n.name;
  throw std::logic_error("algebra not registered in this instance");
}

Instance build_instance(const RawInstance& raw) {
  Instance inst;
  inst.field = raw.field;
  const Field f = raw.field;
  for (const auto& b : raw.blocks) {
    ObjectValidation v{b.kind, b.name, {}};
    try {
      switch (b.kind) {
        case BlockKind::hopf: {
          RawHopfData data{f, b.dim, mult_table(b, f), std::nullopt, coaction_table(b, "comult", f, b.dim),
                           vector_table(b, "counit", f, true), Matrix(f, b.dim, b.dim)};
          if (b.entries.count("unit")) data.unit = vector_table(b, "unit", f, false);
          if (auto it = b.entries.find("antipode"); it != b.entries.end())
            for (const auto& [idx, s] : it->second) data.antipode(idx[1], idx[0]) = s;
          auto hv = validate_hopf(data);
          append_diagnostics(hv.diagnostics, v.diagnostics);
          if (hv.ok()) inst.hopfs.push_back({b.name, hv.hopf});
          break;
        }
        case BlockKind::algebra: {
          const NamedHopf* h = inst.find_hopf(b.over);
          if (!h) {
            v.diagnostics.push_back("depends on invalid hopf '" + b.over + "'");
            break;
          }
          const Matrix mult = mult_table(b, f);
          std::optional<Matrix> unit;
          if (b.entries.count("unit"))
            unit = vector_table(b, "unit", f, false);
          else
            unit = find_unit(f, b.dim, mult);
          if (!unit) {
            v.diagnostics.push_back("multiplication has no unit");
            break;
          }
          auto av = validate_comodule_algebra(FinAlgebra{f, b.dim, mult, *unit},
                                              Comodule{h->hopf, b.dim, coaction_table(b, "coaction", f, h->hopf->dim())});
          append_diagnostics(av.diagnostics, v.diagnostics);
          if (av.ok()) inst.algebras.push_back({b.name, b.over, av.algebra});
          break;
        }
        case BlockKind::module: {
          const NamedAlgebra* a = inst.find_algebra(b.over);
          if (!a) {
            v.diagnostics.push_back("depends on invalid algebra '" + b.over + "'");
            break;
          }
          auto mv = validate_relhopf(a->algebra, action_tables(b, f, a->algebra->dim()),
                                     coaction_table(b, "coaction", f, a->algebra->hopf()->dim()));
          append_diagnostics(mv.diagnostics, v.diagnostics);
          if (mv.ok()) inst.modules.push_back({b.name, b.over, std::move(*mv.module)});
          break;
        }
        case BlockKind::bmodule: {
          const NamedAlgebra* a = inst.find_algebra(b.over);
          if (!a) {
            v.diagnostics.push_back("depends on invalid algebra '" + b.over + "'");
            break;
          }
          BModule p{a->algebra, b.dim, action_tables(b, f, a->algebra->coinvariants().dim())};
          append_diagnostics(check_bmodule(p), v.diagnostics);
          if (v.diagnostics.empty()) inst.bmodules.push_back({b.name, b.over, std::move(p)});
          break;
        }
      }
    } catch (const std::exception& e) {
      v.diagnostics.push_back(e.what());
    }
    inst.validation.push_back(std::move(v));
  }
  return inst;
}

InstanceWriter& InstanceWriter::hopf(const std::string& name, const HopfAlgebra& h) {
  Block b{BlockKind::hopf, name, "", h.dim(), 0, {}};
  put_mult(b, h.mult());
  for (std::size_t i = 0; i < b.dim; ++i) put(b, "unit", {i}, h.unit()[i]);
  put_coaction(b, "comult", h.comult(), b.dim);
  for (std::size_t i = 0; i < b.dim; ++i) put(b, "counit", {i}, h.counit()(0, i));
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) put(b, "antipode", {i, j}, h.antipode()(j, i));
  raw_.blocks.push_back(std::move(b));
  return *this;
}

InstanceWriter& InstanceWriter::algebra(const std::string& name, const std::string& hopf, const ComoduleAlgebra& a) {
  Block b{BlockKind::algebra, name, hopf, a.dim(), 0, {}};
  put_mult(b, a.algebra().mult);
  for (std::size_t i = 0; i < b.dim; ++i) put(b, "unit", {i}, a.algebra().unit[i]);
  put_coaction(b, "coaction", a.coaction().coaction, a.hopf()->dim());
  raw_.blocks.push_back(std::move(b));
  return *this;
}

InstanceWriter& InstanceWriter::module(const std::string& name, const std::string& algebra, const RelHopfModule& m) {
  Block b{BlockKind::module, name, algebra, m.dim(), 0, {}};
  put_action(b, m.action());
  put_coaction(b, "coaction", m.coaction().coaction, m.hopf()->dim());
  raw_.blocks.push_back(std::move(b));
  return *this;
}

InstanceWriter& InstanceWriter::bmodule(const std::string& name, const std::string& algebra, const BModule& p) {
  Block b{BlockKind::bmodule, name, algebra, p.dim, 0, {}};
  put_action(b, p.action);
  raw_.blocks.push_back(std::move(b));
  return *this;
}

}  // namespace hopfmod
