#include "hopfmod/report.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "hopfmod/linalg.hpp"
#include "hopfmod/ssdecomp.hpp"

namespace hopfmod {

namespace {

using Evaluated = std::pair<Json, Outcome>;

struct SelectionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Outcome worse(Outcome a, Outcome b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

Poly poly_from_json(const Json& j, Field f) {
  Poly p;
  for (const auto& c : j) p.push_back(Scalar::parse(f, c.get<std::string>()));
  return p;
}

Json optional_matrix(const std::optional<Matrix>& m) { return m ? matrix_json(*m) : Json(nullptr); }

Json split_json(const SplitWitness& w) { return Json{{"epi", matrix_json(w.epi)}, {"section", matrix_json(w.section)}}; }

SplitWitness split_from_json(const Json& j, Field f, SplitContext ctx) {
  return {matrix_from_json(j.at("epi"), f), matrix_from_json(j.at("section"), f), ctx};
}

Json exactness_json(const ExactnessWitness& w) {
  return Json{{"cosemisimple_integral", optional_matrix(w.cosemisimple_integral)},
              {"total_integral", w.total_integral ? matrix_json(w.total_integral->map) : Json(nullptr)}};
}

const char* verdict_word(Verdict v, const char* yes, const char* no) {
  return v == Verdict::yes ? yes : v == Verdict::no ? no : "unknown";
}

Outcome outcome_of(Verdict v) {
  return v == Verdict::yes ? Outcome::ok : v == Verdict::no ? Outcome::negative : Outcome::unknown;
}

// Evaluates f on every item, on up to `jobs` threads; results keep the item order.
template <typename T, typename F>
std::vector<Evaluated> evaluate_all(const std::vector<T>& items, std::size_t jobs, F f) {
  std::vector<Evaluated> out(items.size());
  auto one = [&](std::size_t i) {
    try {
      out[i] = f(items[i]);
    } catch (const std::exception& e) {
      out[i] = {Json{{"error", e.what()}}, Outcome::unknown};
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max<std::size_t>(jobs, 1), items.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) one(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < items.size(); i += threads) one(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::vector<const NamedModule*> select_modules(const Instance& inst, const RunOptions& opts) {
  std::vector<const NamedModule*> out;
  if (opts.module) {
    const NamedModule* m = inst.find_module(*opts.module);
    if (!m) throw SelectionError("unknown module '" + *opts.module + "'");
    out.push_back(m);
  } else {
    if (opts.algebra && !inst.find_algebra(*opts.algebra)) throw SelectionError("unknown algebra '" + *opts.algebra + "'");
    for (const auto& m : inst.modules)
      if (!opts.algebra || m.algebra == *opts.algebra) out.push_back(&m);
  }
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return out;
}

std::vector<const NamedAlgebra*> select_algebras(const Instance& inst, const RunOptions& opts) {
  std::vector<const NamedAlgebra*> out;
  if (opts.algebra) {
    const NamedAlgebra* a = inst.find_algebra(*opts.algebra);
    if (!a) throw SelectionError("unknown algebra '" + *opts.algebra + "'");
    out.push_back(a);
  } else {
    for (const auto& a : inst.algebras) out.push_back(&a);
  }
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return out;
}

Evaluated eval_certify(const NamedModule& nm) {
  const ProjectivityCertificate c = certify_projectivity(nm.module);
  Json j{{"module", nm.name}, {"algebra", nm.algebra}, {"verdict", c.projective ? "projective" : "not-projective"},
         {"u_bijective", c.u_bijective}};
  j["b_witness"] = c.b_witness ? split_json(*c.b_witness) : Json(nullptr);
  j["category_witness"] = c.category_witness ? split_json(c.category_witness->witness) : Json(nullptr);
  j["category_witness_replays"] = c.category_witness_replays;
  j["descended_witness"] = c.descended_witness ? split_json(*c.descended_witness) : Json(nullptr);
  j["descended_witness_replays"] = c.descended_witness_replays;
  j["notes"] = c.notes;
  Outcome o = c.projective ? Outcome::ok : Outcome::negative;
  if (c.projective && !(c.category_witness_replays && c.descended_witness_replays && c.u_bijective)) o = Outcome::unknown;
  return {j, o};
}

Evaluated eval_total_integral(const NamedAlgebra& na) {
  const auto ti = find_total_integral(*na.algebra);
  Json j{{"algebra", na.name}, {"verdict", ti ? "exists" : "none"}};
  j["map"] = ti ? matrix_json(ti->map) : Json(nullptr);
  Json family = Json::array();
  if (ti)
    for (std::size_t s = 0; s < ti->solutions.dim(); ++s) family.push_back(matrix_json(ti->solutions.map(s)));
  j["solution_family"] = family;
  return {j, ti ? Outcome::ok : Outcome::negative};
}

Evaluated eval_h_simple(const NamedAlgebra& na) {
  const HSimplicity h = is_H_simple(*na.algebra);
  Json j{{"algebra", na.name}, {"verdict", verdict_word(h.simple, "simple", "not-simple")}, {"certificate", h.certificate}};
  j["ideal"] = h.ideal ? matrix_json(h.ideal->basis()) : Json(nullptr);
  return {j, outcome_of(h.simple)};
}

Evaluated eval_is_field(const NamedAlgebra& na) {
  const FinAlgebra& b = na.algebra->coinvariant_algebra();
  Json j{{"algebra", na.name}, {"b_dim", b.dim}, {"b_basis", matrix_json(na.algebra->coinvariants().basis())}};
  if (!b.is_commutative()) {
    j["verdict"] = "error";
    j["error"] = "B is not commutative";
    return {j, Outcome::unknown};
  }
  const FieldVerdict v = is_field(b);
  j["verdict"] = verdict_word(v.field, "field", "not-field");
  j["reason"] = v.reason;
  j["element"] = optional_matrix(v.element);
  j["minimal_polynomial"] = poly_json(v.minimal_polynomial);
  j["factor"] = v.factor ? poly_json(*v.factor) : Json(nullptr);
  return {j, outcome_of(v.field)};
}

Evaluated eval_decompose(const NamedModule& nm, const SeedOptions& seeds) {
  const Decomposition d = decompose_semisimple(nm.module, seeds);
  Json j{{"module", nm.name}, {"algebra", nm.algebra}, {"complete", d.complete}, {"a_semisimple", d.a_semisimple},
         {"h_cosemisimple", d.h_cosemisimple}};
  Json summands = Json::array();
  bool all_certified = true;
  for (const auto& s : d.summands) {
    summands.push_back(Json{{"basis", matrix_json(s.space.basis())},
                            {"flag", s.certified ? "simple-certified" : "simple-probable"},
                            {"certificate", s.certificate}});
    all_certified = all_certified && s.certified;
  }
  j["summand_count"] = d.summands.size();
  j["summands"] = summands;
  j["remainder"] = d.remainder ? matrix_json(d.remainder->basis()) : Json(nullptr);
  j["diagnostic"] = d.diagnostic;
  return {j, !d.complete ? Outcome::negative : all_certified ? Outcome::ok : Outcome::unknown};
}

Evaluated eval_prop25(const NamedModule& nm) {
  const ChainReport c = prop25_chain(nm.module);
  Json j{{"module", nm.name}, {"algebra", nm.algebra}, {"coinvariant_dim", c.coinvariants.dim}};
  j["items"] = Json{{"1", c.item1}, {"2", c.item2}, {"3", c.item3}};
  j["item1_section"] = optional_matrix(c.item1_section);
  j["item2_section"] = optional_matrix(c.item2_section);
  j["item3_witness"] = c.item3_witness ? split_json(*c.item3_witness) : Json(nullptr);
  j["exactness"] = exactness_json(c.exactness);
  j["implications_hold"] = c.implications_hold;
  return {j, c.implications_hold ? Outcome::ok : Outcome::negative};
}

Evaluated eval_prop43(const NamedModule& nm) {
  const GeneratorSplitReport r = prop43_check(nm.module);
  Json j{{"module", nm.name}, {"algebra", nm.algebra}, {"verdict", !r.applicable ? "inapplicable" : r.split ? "split" : "no-split"}};
  j["dagger"] = Json{{"a_semisimple", r.dagger.a_semisimple}, {"a_is_commutative_h", r.dagger.a_is_commutative_h}};
  j["exactness"] = exactness_json(r.exactness);
  j["generator_dim"] = r.epi ? Json(r.epi->v.dim()) : Json(nullptr);
  j["generators"] = r.epi ? matrix_json(r.epi->v.basis()) : Json(nullptr);
  j["pi"] = r.epi ? matrix_json(r.epi->pi) : Json(nullptr);
  j["section"] = optional_matrix(r.section);
  return {j, !r.applicable ? Outcome::unknown : r.split ? Outcome::ok : Outcome::negative};
}

Json validation_json(const Instance& inst) {
  Json out = Json::array();
  for (const auto& v : inst.validation)
    out.push_back(Json{{"kind", to_string(v.kind)}, {"name", v.name}, {"ok", v.ok()}, {"diagnostics", v.diagnostics}});
  return out;
}

Json coinvariants_json(const Instance& inst, const RunOptions& opts) {
  Json out = Json::array();
  for (const NamedAlgebra* a : select_algebras(inst, opts))
    out.push_back(Json{{"object", a->name}, {"kind", "algebra"}, {"dim", a->algebra->coinvariants().dim()},
                       {"basis", matrix_json(a->algebra->coinvariants().basis())}});
  for (const NamedModule* m : select_modules(inst, opts))
    out.push_back(Json{{"object", m->name}, {"kind", "module"}, {"dim", m->module.coinvariants().dim()},
                       {"basis", matrix_json(m->module.coinvariants().basis())}});
  return out;
}

void render(std::ostringstream& out, const Json& j, const std::string& indent);

bool is_matrix(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("shape") && j.contains("rows"); }

std::string inline_value(const Json& j) {
  if (is_matrix(j)) {
    std::string s = j["shape"][0].dump() + "x" + j["shape"][1].dump() + " [";
    for (std::size_t r = 0; r < j["rows"].size(); ++r) {
      if (r) s += ", ";
      s += "[";
      for (std::size_t c = 0; c < j["rows"][r].size(); ++c) s += (c ? " " : "") + j["rows"][r][c].get<std::string>();
      s += "]";
    }
    return s + "]";
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void render(std::ostringstream& out, const Json& j, const std::string& indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
        out << indent << it.key() << ": |\n";
        std::istringstream lines(v.get<std::string>());
        for (std::string line; std::getline(lines, line);) out << indent << "  " << line << "\n";
      } else if ((v.is_object() && !is_matrix(v)) || (v.is_array() && !is_scalar_array(v))) {
        out << indent << it.key() << ":\n";
        render(out, v, indent + "  ");
      } else if (v.is_array()) {
        out << indent << it.key() << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << inline_value(v[i]);
        out << "]\n";
      } else {
        out << indent << it.key() << ": " << inline_value(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << indent << "- [" << i << "]\n";
      if (j[i].is_object() && !is_matrix(j[i]))
        render(out, j[i], indent + "  ");
      else
        out << indent << "  " << inline_value(j[i]) << "\n";
    }
  } else {
    out << indent << inline_value(j) << "\n";
  }
}

// ---- replay ----

struct ReplayContext {
  Instance inst;
  Field field;
};

const NamedModule& module_of(const ReplayContext& ctx, const Json& r) {
  const NamedModule* m = ctx.inst.find_module(r.at("module").get<std::string>());
  if (!m) throw std::invalid_argument("report names an unknown module");
  return *m;
}

const NamedAlgebra& algebra_of(const ReplayContext& ctx, const Json& r) {
  const NamedAlgebra* a = ctx.inst.find_algebra(r.at("algebra").get<std::string>());
  if (!a) throw std::invalid_argument("report names an unknown algebra");
  return *a;
}

std::vector<ReplayLine> replay_certify(const ReplayContext& ctx, const Json& r) {
  const NamedModule& nm = module_of(ctx, r);
  const std::string item = "certify-projective " + nm.name;
  const BModule p = coinvariant_bmodule(nm.module);
  std::vector<ReplayLine> out;
  if (r.at("verdict") == "not-projective") {
    out.push_back({item, !is_projective_over_B(p).has_value(), "section system for the canonical epi is inconsistent"});
    return out;
  }
  const SplitWitness b = split_from_json(r.at("b_witness"), ctx.field, SplitContext::over_B);
  out.push_back({item + " b_witness", replays_over_B(b, free_bmodule(p.over, p.dim), p), "B-linear split of B^(r) -> P"});
  const TensorProduct free = tensor_over_B(p.over, free_bmodule(p.over, p.dim));
  const TensorProduct target = tensor_over_B(p.over, p);
  const SplitWitness cat = split_from_json(r.at("category_witness"), ctx.field, SplitContext::in_category);
  out.push_back({item + " category_witness", replays_in_category(cat, free.module, target.module),
                 "split epi A (x)_B B^(r) -> A (x)_B P in the category"});
  const SplitWitness down = split_from_json(r.at("descended_witness"), ctx.field, SplitContext::over_B);
  out.push_back({item + " descended_witness",
                 replays_over_B(down, coinvariant_bmodule(free.module), coinvariant_bmodule(target.module)),
                 "coinvariants of the category witness split over B"});
  out.push_back({item + " u_bijective", unit_map(p).bijective == r.at("u_bijective").get<bool>(), "unit map recomputed"});
  return out;
}

std::vector<ReplayLine> replay_total_integral(const ReplayContext& ctx, const Json& r) {
  const NamedAlgebra& na = algebra_of(ctx, r);
  const std::string item = "total-integral " + na.name;
  if (r.at("verdict") == "none") return {{item, !find_total_integral(*na.algebra).has_value(), "affine system inconsistent"}};
  const Matrix phi = matrix_from_json(r.at("map"), ctx.field);
  bool family_ok = true;
  for (const auto& f : r.at("solution_family")) {
    const Matrix psi = matrix_from_json(f, ctx.field);
    family_ok = family_ok && is_total_integral(*na.algebra, phi + psi);
  }
  return {{item, is_total_integral(*na.algebra, phi), "colinear and unital"},
          {item + " family", family_ok, "every listed direction stays a total integral"}};
}

std::vector<ReplayLine> replay_h_simple(const ReplayContext& ctx, const Json& r) {
  const NamedAlgebra& na = algebra_of(ctx, r);
  const std::string item = "h-simple " + na.name;
  const std::string v = r.at("verdict");
  if (v == "not-simple") {
    const Subspace w = Subspace::span(matrix_from_json(r.at("ideal"), ctx.field));
    return {{item, !w.is_zero() && !w.is_whole() && is_h_ideal(*na.algebra, w), "proper nonzero H-ideal"}};
  }
  return {{item, verdict_word(is_H_simple(*na.algebra).simple, "simple", "not-simple") == v, "verdict recomputed"}};
}

std::vector<ReplayLine> replay_is_field(const ReplayContext& ctx, const Json& r) {
  const NamedAlgebra& na = algebra_of(ctx, r);
  const std::string item = "is-field " + na.name;
  const std::string v = r.at("verdict");
  const FinAlgebra& b = na.algebra->coinvariant_algebra();
  if (v == "not-field") {
    FieldVerdict fv;
    fv.field = Verdict::no;
    fv.element = matrix_from_json(r.at("element"), ctx.field);
    fv.minimal_polynomial = poly_from_json(r.at("minimal_polynomial"), ctx.field);
    fv.factor = poly_from_json(r.at("factor"), ctx.field);
    return {{item, replays_not_field(b, fv), "factors of the minimal polynomial give zero divisors"}};
  }
  if (v == "field") {
    const Matrix theta = matrix_from_json(r.at("element"), ctx.field);
    const Poly mp = minimal_polynomial(b.left_mult(theta));
    const bool ok = degree(mp) == b.dim && irreducibility(mp).verdict == Irreducibility::irreducible;
    return {{item, ok, "primitive element with irreducible minimal polynomial"}};
  }
  return {{item, verdict_word(is_field(b).field, "field", "not-field") == v, "verdict recomputed"}};
}

std::vector<ReplayLine> replay_decompose(const ReplayContext& ctx, const Json& r) {
  const NamedModule& nm = module_of(ctx, r);
  const std::string item = "decompose " + nm.name;
  std::vector<Subspace> spaces;
  std::vector<ReplayLine> out;
  for (const auto& s : r.at("summands")) {
    spaces.push_back(Subspace::span(matrix_from_json(s.at("basis"), ctx.field)));
    if (s.at("flag") == "simple-certified") {
      const auto v = is_simple_object(restrict_module(nm.module, spaces.back()));
      out.push_back({item + " summand " + std::to_string(spaces.size()), v.simple == Verdict::yes, "simplicity recomputed"});
    }
  }
  if (r.at("complete").get<bool>()) {
    out.push_back({item, replays_decomposition(nm.module, spaces), "independent subobjects summing to M"});
  } else {
    Subspace sum(ctx.field, nm.module.dim());
    bool ok = true;
    for (const auto& s : spaces) {
      ok = ok && is_subobject(nm.module, s);
      sum = sum + s;
    }
    out.push_back({item + " partial", ok, "split-off summands are subobjects"});
  }
  return out;
}

bool section_replays(const RelHopfModule& source, const RelHopfModule& target, const Matrix& epi, const Matrix& s) {
  return replays_in_category(SplitWitness{epi, s, SplitContext::in_category}, source, target);
}

std::vector<ReplayLine> replay_prop25(const ReplayContext& ctx, const Json& r) {
  const NamedModule& nm = module_of(ctx, r);
  const std::string item = "prop25 " + nm.name;
  const AlgebraPtr& a = nm.module.over();
  const BModule p = coinvariant_bmodule(nm.module);
  const TensorProduct t = tensor_over_B(a, p);
  std::vector<ReplayLine> out;
  const Json& items = r.at("items");
  if (items.at("1").get<bool>()) {
    Matrix gens(ctx.field, t.module.dim(), p.dim);
    for (std::size_t s = 0; s < p.dim; ++s)
      gens.set_col(s, t.quotient.projection * kronecker(a->algebra().unit, Matrix::unit_vector(ctx.field, p.dim, s)));
    out.push_back({item + " item1", section_replays(free_module(a, p.dim), t.module, free_module_map(t.module, gens),
                                                    matrix_from_json(r.at("item1_section"), ctx.field)),
                   "split of A^(r) -> A (x)_B P"});
  }
  if (items.at("2").get<bool>()) {
    const Matrix& w = t.module.coinvariants().basis();
    out.push_back({item + " item2",
                   is_coinvariantly_generated(t.module) && unit_map(p).bijective &&
                       section_replays(free_module(a, w.cols()), t.module, free_module_map(t.module, w),
                                       matrix_from_json(r.at("item2_section"), ctx.field)),
                   "coinvariantly generated, u bijective, split epi from coinvariants"});
  }
  if (items.at("3").get<bool>()) {
    const SplitWitness b = split_from_json(r.at("item3_witness"), ctx.field, SplitContext::over_B);
    out.push_back({item + " item3", replays_over_B(b, free_bmodule(a, p.dim), p), "B-linear split"});
  }
  const bool i1 = items.at("1"), i2 = items.at("2"), i3 = items.at("3");
  const bool exact = !r.at("exactness").at("cosemisimple_integral").is_null() || !r.at("exactness").at("total_integral").is_null();
  out.push_back({item + " chain", (!i1 || i2) && (!i2 || i3) && (!exact || !i3 || i1), "implications between items"});
  return out;
}

std::vector<ReplayLine> replay_prop43(const ReplayContext& ctx, const Json& r) {
  const NamedModule& nm = module_of(ctx, r);
  const std::string item = "prop43 " + nm.name;
  const std::string v = r.at("verdict");
  if (v != "split") return {{item, prop43_check(nm.module).applicable == (v != "inapplicable"), "applicability recomputed"}};
  const GeneratorEpi e = generator_epi(nm.module);
  return {{item, section_replays(e.source, nm.module, matrix_from_json(r.at("pi"), ctx.field),
                                 matrix_from_json(r.at("section"), ctx.field)),
           "split of A (x) V -> M"}};
}

}  // namespace

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return Json{{"shape", {m.rows(), m.cols()}}, {"rows", rows}};
}

Matrix matrix_from_json(const Json& j, Field f) {
  if (!is_matrix(j)) throw std::invalid_argument("malformed matrix in report");
  const std::size_t rows = j["shape"][0], cols = j["shape"][1];
  if (j["rows"].size() != rows) throw std::invalid_argument("matrix rows do not match the shape");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j["rows"][r].size() != cols) throw std::invalid_argument("matrix columns do not match the shape");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::parse(f, j["rows"][r][c].get<std::string>());
  }
  return m;
}

const std::vector<std::string>& report_commands() {
  static const std::vector<std::string> all{"validate", "coinvariants", "certify-projective", "total-integral", "h-simple",
                                            "is-field", "decompose",    "prop25",             "prop43"};
  return all;
}

RunResult run_command(const RunOptions& opts, const std::string& instance_text) {
  Json report{{"tool", "hopfmod"}, {"command", opts.command}, {"file", opts.file}};
  Json options = Json::object();
  if (opts.module) options["module"] = *opts.module;
  if (opts.algebra) options["algebra"] = *opts.algebra;
  options["seed"] = opts.seed;
  report["options"] = options;
  report["instance"] = instance_text;
  auto fail = [&](const std::string& msg) {
    report["status"] = "error";
    report["error"] = msg;
    report["exit_code"] = 2;
    return RunResult{report, 2};
  };
  if (std::find(report_commands().begin(), report_commands().end(), opts.command) == report_commands().end())
    return fail("unknown command '" + opts.command + "'");

  Instance inst;
  try {
    inst = build_instance(parse_instance(instance_text));
  } catch (const ParseError& e) {
    return fail(std::string(e.semantic() ? "semantic error: " : "syntax error: ") + e.what());
  }
  report["field"] = inst.field.to_string();
  report["validation"] = validation_json(inst);

  Outcome overall = Outcome::ok;
  Json results = Json::array();
  const SeedOptions seeds{opts.seed};
  try {
    std::vector<Evaluated> evaluated;
    const std::string& c = opts.command;
    if (c == "validate") {
      overall = inst.all_valid() ? Outcome::ok : Outcome::negative;
    } else if (c == "coinvariants") {
      results = coinvariants_json(inst, opts);
    } else if (c == "certify-projective") {
      evaluated = evaluate_all(select_modules(inst, opts), opts.jobs, [](const NamedModule* m) { return eval_certify(*m); });
    } else if (c == "total-integral") {
      evaluated = evaluate_all(select_algebras(inst, opts), opts.jobs, [](const NamedAlgebra* a) { return eval_total_integral(*a); });
    } else if (c == "h-simple") {
      evaluated = evaluate_all(select_algebras(inst, opts), opts.jobs, [](const NamedAlgebra* a) { return eval_h_simple(*a); });
    } else if (c == "is-field") {
      evaluated = evaluate_all(select_algebras(inst, opts), opts.jobs, [](const NamedAlgebra* a) { return eval_is_field(*a); });
    } else if (c == "decompose") {
      evaluated = evaluate_all(select_modules(inst, opts), opts.jobs,
                               [&](const NamedModule* m) { return eval_decompose(*m, seeds); });
    } else if (c == "prop25") {
      evaluated = evaluate_all(select_modules(inst, opts), opts.jobs, [](const NamedModule* m) { return eval_prop25(*m); });
    } else if (c == "prop43") {
      evaluated = evaluate_all(select_modules(inst, opts), opts.jobs, [](const NamedModule* m) { return eval_prop43(*m); });
    }
    for (auto& [j, o] : evaluated) {
      results.push_back(std::move(j));
      overall = worse(overall, o);
    }
  } catch (const SelectionError& e) {
    return fail(e.what());
  }
  if (!inst.all_valid() && opts.command != "validate") overall = worse(overall, Outcome::unknown);
  static const char* names[] = {"ok", "negative", "unknown"};
  report["results"] = results;
  report["status"] = names[static_cast<int>(overall)];
  report["exit_code"] = static_cast<int>(overall);
  return {report, static_cast<int>(overall)};
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, "");
  return out.str();
}

std::vector<ReplayLine> verify_report(const Json& report) {
  std::vector<ReplayLine> out;
  try {
    if (report.contains("error")) return {{"report", false, "error report: " + report.at("error").get<std::string>()}};
    const std::string command = report.at("command");
    ReplayContext ctx{build_instance(parse_instance(report.at("instance").get<std::string>())), Field::rationals()};
    ctx.field = ctx.inst.field;
    out.push_back({"validation", validation_json(ctx.inst) == report.at("validation"), "validators recomputed"});
    const RunOptions opts{command, "", report.at("options").contains("module")
                                           ? std::optional<std::string>(report["options"]["module"].get<std::string>())
                                           : std::nullopt,
                          report.at("options").contains("algebra")
                              ? std::optional<std::string>(report["options"]["algebra"].get<std::string>())
                              : std::nullopt,
                          report.at("options").at("seed").get<std::uint64_t>(), 1};
    if (command == "coinvariants") out.push_back({"coinvariants", coinvariants_json(ctx.inst, opts) == report.at("results"), "recomputed"});
    for (const auto& r : report.at("results")) {
      if (r.contains("error")) {
        out.push_back({command, false, "result carries an error: " + r.at("error").get<std::string>()});
        continue;
      }
      std::vector<ReplayLine> lines;
      if (command == "certify-projective") lines = replay_certify(ctx, r);
      else if (command == "total-integral") lines = replay_total_integral(ctx, r);
      else if (command == "h-simple") lines = replay_h_simple(ctx, r);
      else if (command == "is-field") lines = replay_is_field(ctx, r);
      else if (command == "decompose") lines = replay_decompose(ctx, r);
      else if (command == "prop25") lines = replay_prop25(ctx, r);
      else if (command == "prop43") lines = replay_prop43(ctx, r);
      out.insert(out.end(), lines.begin(), lines.end());
    }
  } catch (const std::exception& e) {
    out.push_back({"report", false, std::string("malformed report: ") + e.what()});
  }
  return out;
}

}  // namespace hopfmod
