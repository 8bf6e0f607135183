#include "coprime/graph.hpp"

#include <algorithm>

#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

CoprimeGraph CoprimeGraph::build(const FiniteGroup& group) {
  CoprimeGraph g;
  g.label_ = group.label();
  g.orders_ = group.element_orders();
  for (uint64_t o : g.orders_) g.classes_[o]++;
  g.group_rad_ = rad(group.order());
  return g;
}

bool CoprimeGraph::classes_adjacent(uint64_t order_a, uint64_t order_b) const {
  return gcd(order_a, order_b) == 1;
}

bool CoprimeGraph::adjacent(size_t u, size_t v) const {
  if (u == v) return false;
  return classes_adjacent(orders_[u], orders_[v]);
}

size_t CoprimeGraph::degree(size_t v) const {
  uint64_t m = orders_[v];
  size_t sum = 0;
  for (const auto& [n, count] : classes_) {
    if (classes_adjacent(m, n)) sum += count;
  }
  // A coprime same-order class only happens for the identity (gcd(1,1) = 1),
  // where the count included the vertex itself.
  if (classes_adjacent(m, m)) --sum;
  return sum;
}

EndVertexReport CoprimeGraph::end_vertices() const {
  EndVertexReport report;
  report.group_label = label_;
  report.group_rad = group_rad_;

  // Degree is a function of the order class; evaluate it once per class.
  std::map<uint64_t, size_t> class_degree;
  std::map<uint64_t, size_t> representative;
  for (size_t v = 0; v < orders_.size(); ++v) {
    if (!representative.count(orders_[v])) {
      representative[orders_[v]] = v;
      class_degree[orders_[v]] = degree(v);
    }
  }
  for (size_t v = 1; v < orders_.size(); ++v) {
    if (class_degree[orders_[v]] == 1) report.end_vertices.push_back(v);
  }
  report.count = report.end_vertices.size();
  for (size_t v : report.end_vertices) report.end_vertex_orders[orders_[v]]++;
  report.star = orders_.size() >= 2 && is_star();
  return report;
}

bool CoprimeGraph::is_star() const {
  if (orders_.size() < 2) throw degenerate_group("star shape needs at least two vertices");
  std::map<uint64_t, size_t> seen;
  for (size_t v = 1; v < orders_.size(); ++v) {
    if (!seen.count(orders_[v])) seen[orders_[v]] = degree(v);
    if (seen[orders_[v]] != 1) return false;
  }
  return true;
}

size_t CoprimeGraph::diameter() const {
  if (orders_.size() < 2) throw degenerate_group("diameter needs at least two vertices");

  // Distances are computed on the order classes: a BFS over classes gives
  // the distance between vertices in distinct classes, and two same-order
  // vertices (order >= 2) are non-adjacent, so their distance goes through
  // a neighbouring class.
  std::vector<uint64_t> class_orders;
  for (const auto& [o, count] : classes_) class_orders.push_back(o);
  size_t k = class_orders.size();

  auto bfs = [&](size_t src) {
    std::vector<size_t> dist(k, static_cast<size_t>(-1));
    std::vector<size_t> queue{src};
    dist[src] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      size_t cur = queue[head];
      for (size_t next = 0; next < k; ++next) {
        if (dist[next] != static_cast<size_t>(-1)) continue;
        if (next == cur) continue;
        if (classes_adjacent(class_orders[cur], class_orders[next])) {
          dist[next] = dist[cur] + 1;
          queue.push_back(next);
        }
      }
    }
    return dist;
  };

  size_t diameter = 0;
  for (size_t i = 0; i < k; ++i) {
    std::vector<size_t> dist = bfs(i);
    for (size_t j = 0; j < k; ++j) {
      if (i != j) diameter = std::max(diameter, dist[j]);
    }
    // Two distinct vertices in one class: shortest path leaves the class
    // and comes back (the identity class is always adjacent).
    if (classes_.at(class_orders[i]) >= 2 && class_orders[i] >= 2) {
      size_t best = static_cast<size_t>(-1);
      for (size_t j = 0; j < k; ++j) {
        if (j != i && classes_adjacent(class_orders[i], class_orders[j])) {
          best = std::min(best, size_t{2});
        }
      }
      diameter = std::max(diameter, best);
    }
  }
  return diameter;
}

std::vector<std::pair<uint32_t, uint32_t>> CoprimeGraph::edge_list() const {
  // Expand the class adjacency: group vertices by class, then emit all
  // cross pairs of adjacent classes.
  std::map<uint64_t, std::vector<uint32_t>> members;
  for (size_t v = 0; v < orders_.size(); ++v) {
    members[orders_[v]].push_back(static_cast<uint32_t>(v));
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (auto it_a = members.begin(); it_a != members.end(); ++it_a) {
    for (auto it_b = it_a; it_b != members.end(); ++it_b) {
      if (it_a == it_b) continue;  // same-order vertices are never adjacent
      if (!classes_adjacent(it_a->first, it_b->first)) continue;
      for (uint32_t u : it_a->second) {
        for (uint32_t v : it_b->second) {
          edges.emplace_back(std::min(u, v), std::max(u, v));
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string CoprimeGraph::to_dot() const {
  std::vector<bool> is_end(orders_.size(), false);
  if (orders_.size() >= 2) {
    for (size_t v : end_vertices().end_vertices) is_end[v] = true;
  }
  std::string out = "graph coprime {\n";
  out += "  label=\"" + label_ + "\";\n";
  out += "  node [shape=circle];\n";
  for (size_t v = 0; v < orders_.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(orders_[v]) + "\"";
    if (is_end[v]) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (auto [u, v] : edge_list()) {
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string CoprimeGraph::to_json() const {
  std::string out = "{\"label\":\"";
  for (char c : label_) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\",\"orders\":[";
  for (size_t v = 0; v < orders_.size(); ++v) {
    if (v) out += ',';
    out += std::to_string(orders_[v]);
  }
  out += "],\"edges\":[";
  auto edges = edge_list();
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(edges[i].first) + ',' + std::to_string(edges[i].second) + ']';
  }
  out += "]}";
  return out;
}

}  // namespace coprime
