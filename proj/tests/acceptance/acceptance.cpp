// Acceptance suite: end-to-end verification of the classification data and
// engine guarantees over the bundled catalog. Each numbered criterion
// prints exactly one [PASS]/[FAIL] line; the process exits nonzero if any
// criterion fails. All comparisons are exact.

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coprime/catalog.hpp"
#include "coprime/checks.hpp"
#include "coprime/classify.hpp"
#include "coprime/coset_enum.hpp"
#include "coprime/graph.hpp"
#include "coprime/numtheory.hpp"
#include "coprime/presentation.hpp"

using namespace coprime;

namespace {

int failures = 0;

void report(int criterion, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << title;
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

// The published end-vertex counts, keyed by catalog label.
const std::vector<std::pair<std::string, uint64_t>> kGoldenCounts = {
    {"Z2", 1},
    {"Z3", 2}, {"Z6", 2}, {"D12", 2}, {"Dic12", 2},
    {"Z4", 3}, {"Z2xZ2", 3},
    {"Z5", 4}, {"Z10", 4}, {"D20", 4}, {"Dic20", 4}, {"GA(1,5)xZ2", 4}, {"C5:C8", 4},
    {"Z7", 6}, {"Z12", 6}, {"Z2xZ6", 6}, {"Z14", 6}, {"S3xZ3", 6},
    {"D24", 6}, {"Dic24", 6}, {"S3xZ4", 6}, {"Dic12xZ2", 6}, {"D12xZ2", 6},
    {"C3:C8", 6}, {"C3:D8", 6},
    {"D28", 6}, {"Dic28", 6},
    {"Z3xA4", 6}, {"V4:C9", 6},
    {"G72a", 6}, {"G72b", 6},
    {"Z11", 10}, {"Z22", 10}, {"D44", 10}, {"Dic44", 10},
    {"Z8", 7}, {"Z4xZ2", 7}, {"Z2xZ2xZ2", 7}, {"D8", 7}, {"Q8", 7},
    {"Z9", 8}, {"Z3xZ3", 8}, {"Z15", 8}, {"Z30", 8},
    {"Z18", 8}, {"Z3xZ6", 8}, {"SL(2,3)", 8}, {"Z2xA4", 8},
    {"D36", 8}, {"Dic36", 8}, {"C3xC3:C4", 8}, {"Z2xDih9", 8},
};

// The published classification lists for 1 <= n <= 7 (n = 5 empty); used
// for the exclusion check at catalog-complete orders.
const std::map<uint64_t, std::set<std::string>> kGoldenLists = {
    {1, {"Z2"}},
    {2, {"Z3", "Z6", "D12", "Dic12"}},
    {3, {"Z4", "Z2xZ2"}},
    {4, {"Z5", "Z10", "D20", "Dic20", "GA(1,5)xZ2", "C5:C8"}},
    {5, {}},
    {6, {"Z7", "Z12", "Z2xZ6", "Z14", "S3xZ3", "D24", "Dic24", "S3xZ4", "Dic12xZ2", "D12xZ2",
         "C3:C8", "C3:D8", "D28", "Dic28", "Z3xA4", "V4:C9", "G72a", "G72b"}},
    {7, {"Z8", "Z4xZ2", "Z2xZ2xZ2", "D8", "Q8"}},
};

struct RealizedEntry {
  const CatalogEntry* entry;
  FiniteGroup group;
  uint64_t end_count;
};

uint64_t brute_force_phi(uint64_t n) {
  uint64_t count = 0;
  for (uint64_t k = 1; k <= n; ++k) {
    if (gcd(k, n) == 1) ++count;
  }
  return count;
}

void criterion_1(const std::vector<RealizedEntry>& realized) {
  size_t checked = 0;
  std::string detail;
  bool pass = true;
  for (const auto& [label, expected] : kGoldenCounts) {
    auto it = std::find_if(realized.begin(), realized.end(),
                           [&](const RealizedEntry& r) { return r.entry->label == label; });
    if (it == realized.end()) {
      pass = false;
      detail = "catalog is missing '" + label + "'";
      break;
    }
    if (it->end_count != expected) {
      pass = false;
      detail = label + " has |E_G| = " + std::to_string(it->end_count) + ", published value " +
               std::to_string(expected);
      break;
    }
    ++checked;
  }
  if (pass) detail = std::to_string(checked) + " golden counts exact";
  report(1, "golden end-vertex counts", pass, detail);
}

void criterion_2(const std::vector<RealizedEntry>& realized, const Catalog& catalog) {
  bool pass = true;
  std::string detail;

  // No group at a catalog-complete order may carry a small count outside
  // the published lists.
  for (const RealizedEntry& r : realized) {
    if (!catalog.order_is_complete(r.entry->declared_order)) continue;
    if (r.end_count < 1 || r.end_count > 7) continue;
    const std::set<std::string>& allowed = kGoldenLists.at(r.end_count);
    if (!allowed.count(r.entry->label)) {
      pass = false;
      detail = r.entry->label + " (order " + std::to_string(r.entry->declared_order) +
               ") has unlisted |E_G| = " + std::to_string(r.end_count);
      break;
    }
  }

  // Among the order-12 groups, exactly D12 and Dic12 have two end vertices.
  if (pass) {
    std::set<std::string> two_at_12;
    for (const RealizedEntry& r : realized) {
      if (r.entry->declared_order == 12 && r.end_count == 2) two_at_12.insert(r.entry->label);
    }
    if (two_at_12 != std::set<std::string>{"D12", "Dic12"}) {
      pass = false;
      detail = "order-12 groups with |E_G| = 2 are not exactly {D12, Dic12}";
    }
  }

  // No group of order 6, 12, 18, or 24 has exactly four elements of order 6.
  if (pass) {
    for (const RealizedEntry& r : realized) {
      uint64_t order = r.entry->declared_order;
      if (order != 6 && order != 12 && order != 18 && order != 24) continue;
      size_t sixes = std::count(r.group.element_orders().begin(),
                                r.group.element_orders().end(), uint64_t{6});
      if (sixes == 4) {
        pass = false;
        detail = r.entry->label + " has exactly four order-6 elements";
        break;
      }
    }
  }

  if (pass) detail = "complete orders 1-24, 28, 36, 44 contradict nothing";
  report(2, "exclusion at complete orders", pass, detail);
}

void criterion_3(const std::vector<RealizedEntry>& realized) {
  size_t executed = 0;
  bool pass = true;
  std::string detail;
  for (const RealizedEntry& r : realized) {
    for (const CheckResult& result : run_full_suite(r.group)) {
      ++executed;
      if (!result.ok()) {
        pass = false;
        detail = r.entry->label + " / " + result.name + ": " + result.witness;
        break;
      }
    }
    if (!pass) break;
  }

  // Sharpness of the cyclic-containment bound must be detected for D12 and
  // Dic12.
  if (pass) {
    for (const char* label : {"D12", "Dic12"}) {
      auto it = std::find_if(realized.begin(), realized.end(),
                             [&](const RealizedEntry& r) { return r.entry->label == label; });
      CoprimeGraph graph = CoprimeGraph::build(it->group);
      CheckResult result = check_cyclic_containment_bound(it->group, graph);
      if (result.status != CheckStatus::holds || result.details.at("sharp") != "yes") {
        pass = false;
        detail = std::string(label) + " does not meet the cyclic-containment bound sharply";
        break;
      }
    }
  }

  if (pass) detail = std::to_string(executed) + " checks hold across the catalog";
  report(3, "invariant suite over every catalog group", pass, detail);
}

void criterion_4(const std::vector<RealizedEntry>& realized) {
  size_t verified = 0;
  bool pass = true;
  std::string detail;
  for (const RealizedEntry& r : realized) {
    if (r.group.order() > 256) continue;
    CoprimeGraph graph = CoprimeGraph::build(r.group);
    if (graph.edge_list() != brute_force_edges(r.group)) {
      pass = false;
      detail = r.entry->label + ": compressed adjacency differs from the pairwise-gcd oracle";
      break;
    }
    if (graph.degree(0) != r.group.order() - 1) {
      pass = false;
      detail = r.entry->label + ": identity is not universal";
      break;
    }
    if (r.group.order() >= 2) {
      if (graph.diameter() > 2) {
        pass = false;
        detail = r.entry->label + ": diameter exceeds 2";
        break;
      }
      if (graph.is_star() != r.group.p_group_prime().has_value()) {
        pass = false;
        detail = r.entry->label + ": star shape and p-group status disagree";
        break;
      }
    }
    ++verified;
  }
  if (pass) detail = std::to_string(verified) + " groups verified against the quadratic oracle";
  report(4, "graph engine vs. brute-force oracle", pass, detail);
}

void criterion_5(const std::vector<RealizedEntry>& realized) {
  bool pass = true;
  std::string detail;

  // Exhaustive-scan oracle with brute-force phi, independent of the library
  // implementation.
  auto oracle_max_phi_inverse = [](uint64_t k) {
    uint64_t best = 1;
    for (uint64_t m = 1; m <= 2 * k * k + 1; ++m) {
      if (brute_force_phi(m) <= k) best = m;
    }
    return best;
  };
  const std::pair<uint64_t, uint64_t> expectations[] = {{2, 6}, {4, 12}, {10, 30}};
  for (auto [k, expected] : expectations) {
    if (max_phi_inverse(k) != expected || oracle_max_phi_inverse(k) != expected) {
      pass = false;
      detail = "max_phi_inverse(" + std::to_string(k) + ") != " + std::to_string(expected);
    }
  }

  if (pass && general_order_bound(1) != 12) {
    pass = false;
    detail = "general_order_bound(1) != 12";
  }
  if (pass) {
    for (const RealizedEntry& r : realized) {
      if (r.end_count == 2 && r.group.order() > 12) {
        pass = false;
        detail = r.entry->label + " has |E_G| = 2 with order > 12";
        break;
      }
    }
  }
  if (pass) detail = "max_phi_inverse(2,4,10) = 6,12,30; bound(1) = 12 respected";
  report(5, "derived bound values", pass, detail);
}

void criterion_6() {
  // The quoted presentations with their published orders.
  const std::vector<std::pair<std::string, size_t>> presentations = {
      {"< a, b | a^5 = b^8 = e, b a b^-1 = a^2 >", 40},
      {"< a, b | a^3 = b^8 = e, b a b^-1 = a^-1 >", 24},
      {"< a, b, c | a^2 = b^2 = c^3 = (a c)^2 = (b a)^4 = e, b c = c b >", 24},
      {"< a, b | a^9 = b^2 = e, (a^-1 b)^2 = b a^-2 >", 36},
      {"< a, b, c | a^2 = b^2 = c^9 = (a c)^2 = e, b a c^-1 = c a b, a b c b = b a c, b c^3 = c^3 b >",
       72},
      {"< a, b, c, d | a^2 = b^2 = c^3 = d^3 = (b c)^3 = (a b c)^2 = e, a d = d^2 a, a c = c^2 a, c d = d c, b d = d b >",
       72},
  };
  bool pass = true;
  std::string detail;
  for (const auto& [text, published_order] : presentations) {
    try {
      Presentation p = parse_presentation(text);
      Presentation reparsed = parse_presentation(p.to_string());
      if (!(p == reparsed)) {
        pass = false;
        detail = "print/parse round trip changed: " + text;
        break;
      }
      FiniteGroup g = realize(p);
      if (g.order() != published_order) {
        pass = false;
        detail = "enumerated order " + std::to_string(g.order()) + " (stated " +
                 std::to_string(published_order) + ") for " + text;
        break;
      }
      std::vector<Perm> gens;
      for (size_t k = 0; k < p.generators.size(); ++k) {
        gens.push_back(g.element(g.generator_element(k)));
      }
      for (const GroupWord& relator : p.relators) {
        if (!evaluate_word(relator, gens).is_identity()) {
          pass = false;
          detail = "relator fails to evaluate to identity in " + text;
          break;
        }
      }
      if (!pass) break;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string(e.what()) + " for " + text;
      break;
    }
  }
  if (pass) detail = "6 presentations enumerate to 40/24/24/36/72/72 with identity relators";
  report(6, "presentation parse and enumeration round trips", pass, detail);
}

void criterion_7(const Catalog& catalog) {
  RealizedCatalog realized(catalog);
  PaperVerification verification = verify_paper_tables(realized, 4);
  bool pass = verification.all_pass;
  std::string detail;
  for (const ClassificationReport& r : verification.reports) {
    if (!r.all_expected_found()) {
      pass = false;
      detail = "missing expected matches at n = " + std::to_string(r.target);
    }
    if ((r.target == 5 || r.target == 9) && !r.matches.empty()) {
      pass = false;
      detail = "unexpected matches at n = " + std::to_string(r.target);
    }
  }
  if (pass) {
    detail = "all expected labels found for n = 1..10; n = 5 and n = 9 empty";
  }
  report(7, "classification table reproduction", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string catalog_path = argc > 1 ? argv[1] : "data/catalog.txt";
  Catalog catalog;
  try {
    catalog = load_catalog(catalog_path);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] cannot load catalog: " << e.what() << "\n";
    return 1;
  }

  std::vector<RealizedEntry> realized;
  for (const CatalogEntry& entry : catalog.entries) {
    try {
      FiniteGroup group = realize_entry(entry);
      uint64_t count = CoprimeGraph::build(group).end_vertices().count;
      realized.push_back({&entry, std::move(group), count});
    } catch (const std::exception& e) {
      std::cout << "[FAIL] catalog entry '" << entry.label << "': " << e.what() << "\n";
      return 1;
    }
  }

  criterion_1(realized);
  criterion_2(realized, catalog);
  criterion_3(realized);
  criterion_4(realized);
  criterion_5(realized);
  criterion_6();
  criterion_7(catalog);

  std::cout << "[INFO] exclusion completeness at orders 30, 40, 42, 48, 54, 56, 60, 72, 96, "
               "120, 144, 240 is catalog-relative: those orders are not bundled in full\n";
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
