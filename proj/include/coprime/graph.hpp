#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coprime/group.hpp"

namespace coprime {

// End vertices of a coprime graph, identity excluded.
struct EndVertexReport {
  std::string group_label;
  std::vector<size_t> end_vertices;             // element indices, ascending
  uint64_t count = 0;                           // |E_G|
  std::map<uint64_t, size_t> end_vertex_orders; // order -> how many end vertices
  bool star = false;                            // graph is K_{1,|G|-1} (false for |G| = 1)
  uint64_t group_rad = 1;                       // rad(|G|)
};

// The coprime graph of a finite group: vertices are group elements, two
// vertices are adjacent when their element orders are coprime. Adjacency
// depends only on the element orders, so the graph is stored compressed by
// order class; the explicit edge list is expanded on demand.
class CoprimeGraph {
 public:
  static CoprimeGraph build(const FiniteGroup& group);

  const std::string& group_label() const { return label_; }
  size_t vertex_count() const { return orders_.size(); }
  uint64_t vertex_order(size_t v) const { return orders_[v]; }
  const std::vector<uint64_t>& vertex_orders() const { return orders_; }

  // order -> number of vertices of that order.
  const std::map<uint64_t, size_t>& order_classes() const { return classes_; }

  bool classes_adjacent(uint64_t order_a, uint64_t order_b) const;
  bool adjacent(size_t u, size_t v) const;

  size_t degree(size_t v) const;

  EndVertexReport end_vertices() const;

  // Whether the graph is the star K_{1,|G|-1}. Throws degenerate_group for
  // a one-vertex graph, as does diameter().
  bool is_star() const;

  // Longest shortest path, computed on the order-class quotient.
  size_t diameter() const;

  // Explicit edges (u < v), lexicographically sorted, expanded from the
  // class structure.
  std::vector<std::pair<uint32_t, uint32_t>> edge_list() const;

  // DOT text: one node per vertex labeled with its element order; end
  // vertices drawn as double circles.
  std::string to_dot() const;

  // Fixed schema {"label", "orders", "edges"} with sorted edges; output is
  // byte-stable for identical inputs.
  std::string to_json() const;

 private:
  std::string label_;
  std::vector<uint64_t> orders_;
  std::map<uint64_t, size_t> classes_;
  uint64_t group_rad_ = 1;
};

}  // namespace coprime
