// conjcat: check, compute and export definition documents.
//
//   conjcat check <file> [--select <name>]
//   conjcat compute <file> --op <name> --args <a,b,...> [--name <result>] [--out <file>]
//   conjcat export-ek <file> --term <name>
//   conjcat fmt <file>
//
// Exit status: 0 all pass, 1 a check failed, 2 parse or structural error.
// Reports go to standard output, one JSON object per line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "conj/cli/checks.hpp"
#include "conj/cli/compute.hpp"

namespace {

using json = nlohmann::json;
using namespace conjlib;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int report_error(const std::exception& e) {
  json j{{"status", "error"}, {"message", e.what()}};
  if (auto p = dynamic_cast<const cli::ParseError*>(&e)) {
    j["line"] = p->line;
    j["column"] = p->column;
    j["name"] = p->name;
  }
  std::cout << j.dump() << "\n";
  std::cerr << "conjcat: " << e.what() << "\n";
  return 2;
}

int run_check(const std::string& file, const std::string& selector) {
  auto model = cli::resolve(cli::parse_document(read_file(file)));
  auto records = cli::run_checks(model, selector);
  std::size_t failed = 0;
  for (const auto& r : records) {
    json j{{"check", r.check}, {"subject", r.subject}, {"status", r.pass ? "pass" : "fail"}};
    if (!r.pass) {
      ++failed;
      j["violations"] = r.violations;
      j["witness"] = r.witness;
    }
    std::cout << j.dump() << "\n";
  }
  std::cout << json{{"summary", {{"selector", selector}, {"checks", records.size()}, {"failed", failed}}}}.dump()
            << "\n";
  return failed ? 1 : 0;
}

int run_compute(const std::string& file, const std::string& op, const std::vector<std::string>& args,
                const std::string& name, const std::string& out) {
  auto doc = cli::parse_document(read_file(file));
  auto model = cli::resolve(doc);
  auto extra = cli::compute(model, op, args, name);
  auto text = cli::serialize(cli::with_declarations(doc, extra));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out, std::ios::binary);
    if (!o) throw StructuralError("cannot write " + out);
    o << text;
    std::cerr << "conjcat: wrote " << out << "\n";
  }
  return 0;
}

int run_export(const std::string& file, const std::string& term) {
  auto model = cli::resolve(cli::parse_document(read_file(file)));
  for (const auto& line : ek::export_arcs(ek::ek_graph(model.diagram(term, nullptr)))) std::cout << line << "\n";
  return 0;
}

int run_fmt(const std::string& file) {
  auto doc = cli::parse_document(read_file(file));
  cli::resolve(doc);
  std::cout << cli::serialize(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjcat: finite categories, adjunctions and conjugates from definition documents"};
  app.require_subcommand(1);

  std::string file, selector = "all", op, name, out, term;
  std::vector<std::string> args;

  auto* check = app.add_subcommand("check", "run checks and print one JSON record per check");
  check->add_option("file", file, "definition document")->required();
  check->add_option("--select", selector, "all, category, functor, natural, zigzag, twovar, closed, monoidal, ek");

  auto* comp = app.add_subcommand("compute", "emit the result of an operation as new declarations");
  comp->add_option("file", file, "definition document")->required();
  comp->add_option("--op", op, "operation name")->required();
  comp->add_option("--args", args, "argument names, space or comma separated")->required()->delimiter(',');
  comp->add_option("--name", name, "name of the result declaration");
  comp->add_option("--out", out, "output document (default: standard output)");

  auto* exp = app.add_subcommand("export-ek", "print the EK graph of a term as a sorted arc list");
  exp->add_option("file", file, "definition document")->required();
  exp->add_option("--term", term, "term or cell name")->required();

  auto* fmt = app.add_subcommand("fmt", "print the document in normal form");
  fmt->add_option("file", file, "definition document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(file, selector);
    if (*comp) return run_compute(file, op, args, name, out);
    if (*exp) return run_export(file, term);
    if (*fmt) return run_fmt(file);
  } catch (const std::exception& e) {
    return report_error(e);
  }
  return 2;
}
