#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hopfmod/fixtures.hpp"
#include "hopfmod/report.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int run_evaluation(const hopfmod::RunOptions& opts, bool json, bool timing) {
  std::string text;
  if (!read_file(opts.file, text)) {
    std::cerr << "hopfmod: cannot read '" << opts.file << "'\n";
    return 2;
  }
  const auto start = std::chrono::steady_clock::now();
  const hopfmod::RunResult result = hopfmod::run_command(opts, text);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (json)
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << hopfmod::render_text(result.report);
  if (timing) std::cerr << "elapsed: " << elapsed << " s\n";
  return result.exit_code;
}

int run_verify(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "hopfmod: cannot read '" << path << "'\n";
    return 2;
  }
  hopfmod::Json report;
  try {
    report = hopfmod::Json::parse(text);
  } catch (const std::exception& e) {
    std::cerr << "hopfmod: report is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  bool all = true;
  for (const auto& line : hopfmod::verify_report(report)) {
    std::cout << (line.pass ? "PASS " : "FAIL ") << line.item << ": " << line.detail << "\n";
    all = all && line.pass;
  }
  return all ? 0 : 1;
}

int run_fixtures_list() {
  for (const auto& f : hopfmod::named_fixtures())
    std::cout << f.name << " " << f.file << " " << hopfmod::to_string(f.kind) << " " << f.object << "\n";
  return 0;
}

// name may be a fixture name (A4) or a file name (a4.hm).
int run_fixtures_emit(const std::string& name, const std::string& dir) {
  std::vector<std::string> files;
  if (name.empty()) {
    files = hopfmod::fixture_files();
  } else {
    for (const auto& f : hopfmod::named_fixtures())
      if (f.name == name) files = {f.file};
    for (const auto& f : hopfmod::fixture_files())
      if (f == name) files = {f};
    if (files.empty()) {
      std::cerr << "hopfmod: unknown fixture '" << name << "'\n";
      return 2;
    }
  }
  if (dir.empty()) {
    if (files.size() != 1) {
      std::cerr << "hopfmod: emitting every fixture requires --dir\n";
      return 2;
    }
    std::cout << hopfmod::fixture_text(files.front());
    return 0;
  }
  std::filesystem::create_directories(dir);
  for (const auto& file : files) {
    const auto path = std::filesystem::path(dir) / file;
    std::ofstream out(path, std::ios::binary);
    out << hopfmod::fixture_text(file);
    if (!out) {
      std::cerr << "hopfmod: cannot write '" << path.string() << "'\n";
      return 2;
    }
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for relative Hopf modules over finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  hopfmod::RunOptions opts;
  std::string module, algebra;
  bool json = false, timing = false;
  std::vector<CLI::App*> evaluators;
  const std::map<std::string, std::string> about{
      {"validate", "check every object against its axioms"},
      {"coinvariants", "coinvariant subspaces of algebras and modules"},
      {"certify-projective", "decide whether M^coH is projective over B, with split witnesses"},
      {"total-integral", "find a colinear unital map H -> A"},
      {"h-simple", "decide whether A has a proper nonzero coaction-stable ideal"},
      {"is-field", "decide whether the coinvariant subalgebra B is a field"},
      {"decompose", "split a module into simple summands"},
      {"prop25", "projectivity chain: category splitting, induced modules, projectivity over B"},
      {"prop43", "split the generator epi A (x) V -> M when A is semisimple or H is commutative"},
  };
  for (const auto& name : hopfmod::report_commands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("file", opts.file, "instance file")->required();
    sub->add_option("--module", module, "restrict to one module");
    sub->add_option("--algebra", algebra, "restrict to one algebra");
    sub->add_option("--seed", opts.seed, "seed for probabilistic simplicity checks");
    sub->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--json", json, "print the JSON report");
    sub->add_flag("--timing", timing, "print elapsed time to stderr");
    evaluators.push_back(sub);
  }

  std::string report_path;
  CLI::App* verify = app.add_subcommand("verify", "replay the witnesses in a JSON report");
  verify->add_option("report", report_path, "report file")->required();

  std::string emit_name, emit_dir;
  CLI::App* fixtures = app.add_subcommand("fixtures", "list the shipped fixtures");
  CLI::App* emit = fixtures->add_subcommand("emit", "print one fixture file, or write fixture files to --dir");
  emit->add_option("name", emit_name, "fixture or file name; all files when omitted");
  emit->add_option("--dir", emit_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (verify->parsed()) return run_verify(report_path);
  if (emit->parsed()) return run_fixtures_emit(emit_name, emit_dir);
  if (fixtures->parsed()) return run_fixtures_list();
  for (CLI::App* sub : evaluators) {
    if (!sub->parsed()) continue;
    opts.command = sub->get_name();
    if (!module.empty()) opts.module = module;
    if (!algebra.empty()) opts.algebra = algebra;
    return run_evaluation(opts, json, timing);
  }
  return 2;
}
