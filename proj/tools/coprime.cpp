// Command-line front end: build groups from spec expressions, export their
// coprime graphs, run the invariant checks, and verify classification
// tables against a group catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "coprime/catalog.hpp"
#include "coprime/checks.hpp"
#include "coprime/classify.hpp"
#include "coprime/constructions.hpp"
#include "coprime/errors.hpp"
#include "coprime/graph.hpp"
#include "coprime/numtheory.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes, stable for scripting: 0 success / all checks hold,
// 1 check or verification failure, 2 input or parse error,
// 3 realization failure.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitRealizeError = 3;

std::string default_catalog_path() {
  if (const char* env = std::getenv("COPRIME_CATALOG")) return env;
  return "data/catalog.txt";
}

// Spec arguments are accepted inline or, with a leading '@', from a file.
std::string read_spec_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw coprime::error("cannot open spec file '" + arg.substr(1) + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::string order_histogram(const coprime::FiniteGroup& g) {
  std::map<uint64_t, size_t> hist;
  for (uint64_t o : g.element_orders()) hist[o]++;
  std::string out;
  for (auto [o, count] : hist) {
    if (!out.empty()) out += "  ";
    out += std::to_string(o) + "^" + std::to_string(count);
  }
  return out;
}

int cmd_info(const std::string& spec_text) {
  coprime::FiniteGroup g = coprime::build_group(read_spec_argument(spec_text));
  coprime::CoprimeGraph graph = coprime::CoprimeGraph::build(g);
  auto p = g.p_group_prime();
  std::cout << "group:          " << g.label() << "\n";
  std::cout << "order:          " << g.order() << "\n";
  std::cout << "rad(|G|):       " << coprime::rad(g.order()) << "\n";
  std::cout << "p-group:        " << (p ? "yes (p = " + std::to_string(*p) + ")" : "no") << "\n";
  std::cout << "order multiset: " << order_histogram(g) << "\n";
  std::cout << "end vertices:   " << graph.end_vertices().count << "\n";
  return kExitOk;
}

int cmd_graph(const std::string& spec_text, const std::string& format,
              const std::string& output) {
  coprime::FiniteGroup g = coprime::build_group(read_spec_argument(spec_text));
  coprime::CoprimeGraph graph = coprime::CoprimeGraph::build(g);
  std::string text = format == "json" ? graph.to_json() + "\n" : graph.to_dot();
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw coprime::error("cannot write '" + output + "'");
    out << text;
  }
  std::cerr << "end vertices: " << graph.end_vertices().count << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& spec_text) {
  coprime::FiniteGroup g = coprime::build_group(read_spec_argument(spec_text));
  bool any_failed = false;
  for (const coprime::CheckResult& r : coprime::run_full_suite(g)) {
    any_failed = any_failed || !r.ok();
    std::string tag = r.status == coprime::CheckStatus::holds
                          ? "[ OK ]"
                          : (r.status == coprime::CheckStatus::fails ? "[FAIL]" : "[SKIP]");
    std::cout << tag << " " << r.name;
    for (size_t pad = r.name.size(); pad < 28; ++pad) std::cout << ' ';
    bool first = true;
    for (const auto& [key, value] : r.details) {
      std::cout << (first ? " " : ", ") << key << "=" << value;
      first = false;
    }
    if (!r.witness.empty()) std::cout << "  <- " << r.witness;
    std::cout << "\n";
  }
  std::cout << "group " << g.label() << ": " << (any_failed ? "CHECKS FAILED" : "all checks hold")
            << "\n";
  return any_failed ? kExitCheckFailed : kExitOk;
}

json report_to_json(const coprime::ClassificationReport& report) {
  json j;
  j["target"] = report.target;
  j["constraints"] = report.constraints.note;
  j["confidence"] = report.confidence == coprime::Confidence::proven_complete
                        ? "PROVEN-COMPLETE"
                        : "CATALOG-RELATIVE";
  j["searched_orders"] = report.searched_orders;
  j["complete_orders_searched"] = report.searched_complete_orders;
  j["matches"] = json::array();
  for (const auto& m : report.matches) {
    j["matches"].push_back({{"label", m.label},
                            {"order", m.order},
                            {"end_vertices", m.end_vertex_count},
                            {"expected", m.expected},
                            {"order_is_complete", m.at_complete_order}});
  }
  j["expected"] = json::array();
  for (const auto& v : report.expected) {
    json item = {{"label", v.label}, {"found", v.found}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    j["expected"].push_back(item);
  }
  j["pruned"] = report.pruned;
  j["failures"] = json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"label", f.label}, {"message", f.message}});
  }
  j["pass"] = report.passes();
  return j;
}

void print_report(const coprime::ClassificationReport& report) {
  std::cout << "target |E_G| = " << report.target << "\n";
  std::cout << "constraints:   " << report.constraints.note << "\n";
  std::cout << "confidence:    "
            << (report.confidence == coprime::Confidence::proven_complete ? "PROVEN-COMPLETE"
                                                                          : "CATALOG-RELATIVE")
            << "\n";
  std::cout << "matches (" << report.matches.size() << "):\n";
  for (const auto& m : report.matches) {
    std::cout << "  " << m.label;
    for (size_t pad = m.label.size(); pad < 12; ++pad) std::cout << ' ';
    std::cout << " order " << m.order << (m.expected ? "" : "  [extra]")
              << (m.at_complete_order ? "" : "  (order not catalog-complete)") << "\n";
  }
  size_t found = 0;
  for (const auto& v : report.expected) found += v.found;
  std::cout << "expected coverage: " << found << "/" << report.expected.size() << "\n";
  for (const auto& v : report.expected) {
    if (!v.found) std::cout << "  MISSING " << v.label << ": " << v.detail << "\n";
  }
  for (const auto& f : report.failures) {
    std::cout << "  entry failed: " << f.label << ": " << f.message << "\n";
  }
}

int cmd_classify(uint64_t n, const std::string& catalog_path, bool as_json, unsigned jobs) {
  coprime::RealizedCatalog realized(coprime::load_catalog(catalog_path));
  coprime::ClassificationReport report = coprime::classify(n, realized, jobs);
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    print_report(report);
  }
  return report.passes() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_paper(const std::string& catalog_path, bool as_json, unsigned jobs) {
  coprime::RealizedCatalog realized(coprime::load_catalog(catalog_path));
  coprime::PaperVerification verification = coprime::verify_paper_tables(realized, jobs);
  if (as_json) {
    json j;
    j["reports"] = json::array();
    for (const auto& report : verification.reports) j["reports"].push_back(report_to_json(report));
    j["pass"] = verification.all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& report : verification.reports) {
      size_t found = 0;
      for (const auto& v : report.expected) found += v.found;
      std::cout << "n=" << report.target;
      for (size_t pad = std::to_string(report.target).size(); pad < 2; ++pad) std::cout << ' ';
      std::cout << "  " << (report.confidence == coprime::Confidence::proven_complete
                                ? "PROVEN-COMPLETE  "
                                : "CATALOG-RELATIVE ")
                << " matches " << report.matches.size() << "  expected " << found << "/"
                << report.expected.size() << "  extras-at-complete "
                << (report.has_extras_at_complete_orders() ? "YES" : "no") << "  "
                << (report.passes() ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "overall: " << (verification.all_pass ? "PASS" : "FAIL") << "\n";
  }
  return verification.all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_catalog(const std::string& catalog_path, unsigned jobs) {
  coprime::RealizedCatalog realized(coprime::load_catalog(catalog_path));
  realized.ensure_all(jobs);
  const coprime::Catalog& catalog = realized.catalog();
  size_t bad = 0;
  for (size_t i = 0; i < catalog.entries.size(); ++i) {
    const coprime::CatalogEntry& entry = catalog.entries[i];
    const auto& slot = realized.realization(i);
    if (!slot.group) {
      ++bad;
      std::cout << "  BAD " << entry.label << ": " << slot.error << "\n";
      continue;
    }
    bool expect_ok = !entry.expected_end_vertices ||
                     *entry.expected_end_vertices == slot.end_vertex_count;
    if (!expect_ok) {
      ++bad;
      std::cout << "  BAD " << entry.label << ": expect=" << *entry.expected_end_vertices
                << " but computed |E_G| = " << slot.end_vertex_count << "\n";
      continue;
    }
    std::cout << "   ok " << entry.label;
    for (size_t pad = entry.label.size(); pad < 12; ++pad) std::cout << ' ';
    std::cout << " order " << entry.declared_order << "  |E_G| = " << slot.end_vertex_count
              << "\n";
  }
  std::cout << catalog.entries.size() << " entries, " << bad << " problems, "
            << catalog.complete_orders.size() << " catalog-complete orders\n";
  return bad == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coprime graphs of finite groups: construction, analysis, classification"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string format = "dot";
  std::string output;
  std::string catalog_path = default_catalog_path();
  bool as_json = false;
  uint64_t target = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  CLI::App* info = app.add_subcommand("info", "order and element-order facts for a group spec");
  info->add_option("spec", spec_text, "group spec, e.g. 'Cyclic(6)' (or @file)")->required();

  CLI::App* graph = app.add_subcommand("graph", "export the coprime graph");
  graph->add_option("spec", spec_text)->required();
  graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("-o,--output", output, "write to a file instead of stdout");

  CLI::App* analyze = app.add_subcommand("analyze", "run the invariant checks on one group");
  analyze->add_option("spec", spec_text)->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "find catalog groups with |E_G| = n");
  classify_cmd->add_option("n", target, "end-vertex count")
      ->required()
      ->check(CLI::Range(uint64_t{0}, uint64_t{512}));
  classify_cmd->add_option("--catalog", catalog_path, "catalog file");
  classify_cmd->add_flag("--json", as_json, "machine-readable output");
  classify_cmd->add_option("--jobs", jobs, "max concurrent realizations");

  CLI::App* verify = app.add_subcommand("verify-paper",
                                        "verify the classification tables for n = 1..10");
  verify->add_option("--catalog", catalog_path, "catalog file");
  verify->add_flag("--json", as_json, "machine-readable output");
  verify->add_option("--jobs", jobs, "max concurrent realizations");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "realize and validate every catalog entry");
  catalog_cmd->add_option("--catalog", catalog_path, "catalog file");
  catalog_cmd->add_option("--jobs", jobs, "max concurrent realizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (info->parsed()) return cmd_info(spec_text);
    if (graph->parsed()) return cmd_graph(spec_text, format, output);
    if (analyze->parsed()) return cmd_analyze(spec_text);
    if (classify_cmd->parsed()) return cmd_classify(target, catalog_path, as_json, jobs);
    if (verify->parsed()) return cmd_verify_paper(catalog_path, as_json, jobs);
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_path, jobs);
  } catch (const coprime::syntax_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const coprime::catalog_parse_error& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const coprime::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRealizeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRealizeError;
  }
  return kExitOk;
}
