#include "coprime/checks.hpp"

#include <algorithm>

#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

namespace {

CheckResult make(const std::string& name, const FiniteGroup& g) {
  CheckResult r;
  r.name = name;
  r.group = g.label();
  return r;
}

void require_order(const FiniteGroup& g, size_t min_order) {
  if (g.order() < min_order) {
    throw degenerate_group("check needs |G| >= " + std::to_string(min_order) +
                           " (|" + g.label() + "| = " + std::to_string(g.order()) + ")");
  }
}

std::string describe_element(const FiniteGroup& g, size_t x) {
  return "element #" + std::to_string(x) + " of order " +
         std::to_string(g.element_order(x));
}

std::vector<size_t> sorted_union_of_cyclic(const FiniteGroup& g,
                                           const std::vector<size_t>& generators) {
  std::vector<bool> in(g.order(), false);
  for (size_t y : generators) {
    for (size_t z : g.cyclic_subgroup(y)) in[z] = true;
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < g.order(); ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

const char* CheckResult::status_text() const {
  switch (status) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "FAILS";
    case CheckStatus::not_applicable: return "n/a";
  }
  return "?";
}

CheckResult check_rad_characterization(const FiniteGroup& g, const CoprimeGraph& graph) {
  require_order(g, 3);
  CheckResult r = make("rad_characterization", g);
  EndVertexReport report = graph.end_vertices();
  uint64_t group_rad = rad(g.order());

  std::vector<size_t> rad_set;
  for (size_t x = 1; x < g.order(); ++x) {
    if (rad(g.element_order(x)) == group_rad) rad_set.push_back(x);
  }
  r.details["|E_G|"] = std::to_string(report.count);
  r.details["rad(|G|)"] = std::to_string(group_rad);
  if (rad_set != report.end_vertices) {
    r.status = CheckStatus::fails;
    std::vector<size_t> diff;
    std::set_symmetric_difference(rad_set.begin(), rad_set.end(),
                                  report.end_vertices.begin(), report.end_vertices.end(),
                                  std::back_inserter(diff));
    r.witness = "degree-1 set and rad set differ at " + describe_element(g, diff.front());
  }
  return r;
}

CheckResult check_phi_bound(const FiniteGroup& g, const CoprimeGraph& graph) {
  require_order(g, 3);
  CheckResult r = make("phi_bound", g);
  EndVertexReport report = graph.end_vertices();
  r.details["|E_G|"] = std::to_string(report.count);
  for (size_t x : report.end_vertices) {
    uint64_t value = phi(g.element_order(x));
    if (value > report.count) {
      r.status = CheckStatus::fails;
      r.witness = describe_element(g, x) + " has phi(|x|) = " + std::to_string(value) +
                  " > |E_G| = " + std::to_string(report.count);
      return r;
    }
  }
  return r;
}

CheckResult check_unique_cyclic(const FiniteGroup& g, const CoprimeGraph& graph) {
  require_order(g, 3);
  CheckResult r = make("unique_cyclic_subgroup", g);
  EndVertexReport report = graph.end_vertices();
  size_t equality_cases = 0;
  for (size_t x : report.end_vertices) {
    uint64_t order_x = g.element_order(x);
    if (phi(order_x) != report.count) continue;
    ++equality_cases;
    if (rad(order_x) != order_x) {
      r.status = CheckStatus::fails;
      r.witness = describe_element(g, x) + " reaches phi(|x|) = |E_G| but |x| is not squarefree";
      return r;
    }
    std::vector<size_t> subgroup_x = g.cyclic_subgroup(x);
    for (size_t y = 1; y < g.order(); ++y) {
      if (g.element_order(y) != order_x) continue;
      if (g.cyclic_subgroup(y) != subgroup_x) {
        r.status = CheckStatus::fails;
        r.witness = describe_element(g, y) + " generates a second cyclic subgroup of order " +
                    std::to_string(order_x);
        return r;
      }
    }
  }
  r.details["equality_cases"] = std::to_string(equality_cases);
  return r;
}

CheckResult check_prime_power_equivalence(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("prime_power_end_vertex", g);
  EndVertexReport report = graph.end_vertices();
  std::optional<size_t> prime_power_vertex;
  for (size_t x : report.end_vertices) {
    if (prime_power_base(g.element_order(x))) {
      prime_power_vertex = x;
      break;
    }
  }
  bool p_group = g.p_group_prime().has_value();
  r.details["p_group"] = p_group ? "yes" : "no";
  if (prime_power_vertex.has_value() != p_group) {
    r.status = CheckStatus::fails;
    r.witness = prime_power_vertex
                    ? describe_element(g, *prime_power_vertex) +
                          " has prime-power order but G is not a p-group"
                    : "G is a p-group but no end vertex has prime-power order";
    return r;
  }
  if (p_group && g.order() != report.count + 1) {
    r.status = CheckStatus::fails;
    r.witness = "p-group with |E_G| = " + std::to_string(report.count) +
                " != |G| - 1 = " + std::to_string(g.order() - 1);
  }
  return r;
}

CheckResult check_parity(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("end_vertex_parity", g);
  EndVertexReport report = graph.end_vertices();
  bool odd = report.count % 2 == 1;
  auto p = g.p_group_prime();
  bool two_group = p.has_value() && *p == 2;
  r.details["|E_G|"] = std::to_string(report.count);
  if (odd != two_group) {
    r.status = CheckStatus::fails;
    r.witness = odd ? "odd |E_G| in a group that is not a 2-group"
                    : "2-group with even |E_G|";
    return r;
  }
  if (odd && !is_power_of_two(report.count + 1)) {
    r.status = CheckStatus::fails;
    r.witness = "odd |E_G| = " + std::to_string(report.count) + " is not of the form 2^n - 1";
  }
  return r;
}

CheckResult check_centralizer_union(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("centralizer_union", g);
  EndVertexReport report = graph.end_vertices();
  r.details["end_vertices"] = std::to_string(report.count);
  for (size_t x : report.end_vertices) {
    std::vector<size_t> centralizer = g.centralizer(x);
    std::vector<size_t> inside;
    for (size_t y : report.end_vertices) {
      if (std::binary_search(centralizer.begin(), centralizer.end(), y)) inside.push_back(y);
    }
    std::vector<size_t> unioned = sorted_union_of_cyclic(g, inside);
    if (unioned != centralizer) {
      r.status = CheckStatus::fails;
      r.witness = "centralizer of " + describe_element(g, x) + " has size " +
                  std::to_string(centralizer.size()) + " but the end-vertex cyclic union has " +
                  std::to_string(unioned.size());
      return r;
    }
  }
  return r;
}

uint64_t general_order_bound(uint64_t n) {
  if (n == 0) throw invalid_parameter("general_order_bound needs n >= 1");
  uint64_t m = max_phi_inverse(2 * n);
  return 2 * n * (m * n - n + 1);
}

CheckResult check_order_bound_even(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("order_bound_even", g);
  EndVertexReport report = graph.end_vertices();
  if (report.count == 0 || report.count % 2 != 0) {
    r.status = CheckStatus::not_applicable;
    r.details["reason"] = report.count == 0 ? "E_G is empty" : "|E_G| is odd";
    return r;
  }
  uint64_t n = report.count / 2;
  uint64_t bound = general_order_bound(n);
  r.details["bound"] = std::to_string(bound);
  r.details["M"] = std::to_string(max_phi_inverse(2 * n));
  if (g.order() > bound) {
    r.status = CheckStatus::fails;
    r.witness = "|G| = " + std::to_string(g.order()) + " exceeds the bound " +
                std::to_string(bound);
  }
  return r;
}

CheckResult check_cyclic_containment_bound(const FiniteGroup& g, const CoprimeGraph& graph) {
  require_order(g, 3);
  CheckResult r = make("cyclic_containment_bound", g);
  EndVertexReport report = graph.end_vertices();
  if (report.count == 0) {
    r.status = CheckStatus::not_applicable;
    r.details["reason"] = "E_G is empty";
    return r;
  }
  // If E_G sits inside any cyclic subgroup, it sits inside <x> for some end
  // vertex x, so scanning the end vertices is enough.
  for (size_t x : report.end_vertices) {
    std::vector<size_t> subgroup = g.cyclic_subgroup(x);
    if (!std::includes(subgroup.begin(), subgroup.end(), report.end_vertices.begin(),
                       report.end_vertices.end())) {
      continue;
    }
    uint64_t order_x = g.element_order(x);
    uint64_t bound = order_x * phi(order_x);
    r.details["|x|"] = std::to_string(order_x);
    r.details["bound"] = std::to_string(bound);
    r.details["sharp"] = g.order() == bound ? "yes" : "no";
    if (g.order() > bound) {
      r.status = CheckStatus::fails;
      r.witness = "E_G lies in <" + describe_element(g, x) + "> but |G| = " +
                  std::to_string(g.order()) + " > " + std::to_string(bound);
    }
    return r;
  }
  r.status = CheckStatus::not_applicable;
  r.details["reason"] = "E_G is not contained in a cyclic subgroup";
  return r;
}

std::vector<std::pair<uint32_t, uint32_t>> brute_force_edges(const FiniteGroup& g) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  const auto& orders = g.element_orders();
  for (size_t i = 0; i < orders.size(); ++i) {
    for (size_t j = i + 1; j < orders.size(); ++j) {
      if (gcd(orders[i], orders[j]) == 1) {
        edges.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
      }
    }
  }
  return edges;
}

CheckResult check_graph_oracle(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("graph_oracle", g);
  if (g.order() > 256) {
    r.status = CheckStatus::not_applicable;
    r.details["reason"] = "|G| > 256";
    return r;
  }
  auto expanded = graph.edge_list();
  auto brute = brute_force_edges(g);
  r.details["edges"] = std::to_string(brute.size());
  if (expanded != brute) {
    r.status = CheckStatus::fails;
    r.witness = "class-compressed edge set (" + std::to_string(expanded.size()) +
                " edges) differs from pairwise-gcd edges (" + std::to_string(brute.size()) + ")";
  }
  return r;
}

CheckResult check_graph_diameter(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("graph_diameter", g);
  if (g.order() < 2) {
    r.status = CheckStatus::not_applicable;
    r.details["reason"] = "|G| = 1";
    return r;
  }
  size_t d = graph.diameter();
  r.details["diameter"] = std::to_string(d);
  if (d > 2) {
    r.status = CheckStatus::fails;
    r.witness = "diameter " + std::to_string(d) + " > 2";
  }
  return r;
}

CheckResult check_identity_universal(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("identity_universal", g);
  size_t d = graph.degree(0);
  r.details["identity_degree"] = std::to_string(d);
  if (d != g.order() - 1) {
    r.status = CheckStatus::fails;
    r.witness = "identity degree " + std::to_string(d) + " != |G| - 1";
  }
  return r;
}

CheckResult check_star_iff_p_group(const FiniteGroup& g, const CoprimeGraph& graph) {
  CheckResult r = make("star_iff_p_group", g);
  if (g.order() < 2) {
    r.status = CheckStatus::not_applicable;
    r.details["reason"] = "|G| = 1";
    return r;
  }
  bool star = graph.is_star();
  bool p_group = g.p_group_prime().has_value();
  r.details["star"] = star ? "yes" : "no";
  if (star != p_group) {
    r.status = CheckStatus::fails;
    r.witness = star ? "star graph but not a p-group" : "p-group without a star graph";
    return r;
  }
  if (star) {
    uint64_t count = graph.end_vertices().count;
    if (count != g.order() - 1) {
      r.status = CheckStatus::fails;
      r.witness = "star graph with |E_G| = " + std::to_string(count) + " != |G| - 1";
    }
  }
  return r;
}

std::vector<CheckResult> run_full_suite(const FiniteGroup& g) {
  CoprimeGraph graph = CoprimeGraph::build(g);
  using Check = CheckResult (*)(const FiniteGroup&, const CoprimeGraph&);
  const std::pair<const char*, Check> checks[] = {
      {"rad_characterization", &check_rad_characterization},
      {"phi_bound", &check_phi_bound},
      {"unique_cyclic_subgroup", &check_unique_cyclic},
      {"prime_power_end_vertex", &check_prime_power_equivalence},
      {"end_vertex_parity", &check_parity},
      {"centralizer_union", &check_centralizer_union},
      {"order_bound_even", &check_order_bound_even},
      {"cyclic_containment_bound", &check_cyclic_containment_bound},
      {"graph_oracle", &check_graph_oracle},
      {"graph_diameter", &check_graph_diameter},
      {"identity_universal", &check_identity_universal},
      {"star_iff_p_group", &check_star_iff_p_group},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    try {
      results.push_back(check(g, graph));
    } catch (const degenerate_group& e) {
      CheckResult r = make(name, g);
      r.status = CheckStatus::not_applicable;
      r.details["reason"] = e.what();
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace coprime
