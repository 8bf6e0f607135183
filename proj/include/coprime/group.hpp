#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coprime/perm.hpp"

namespace coprime {

// Hard ceiling on enumerated group size. The largest groups this tool works
// with are well under 1000 elements; the cap catches runaway closures from
// bad generator sets or presentations.
inline constexpr size_t kDefaultElementLimit = 10'000;

// A finite permutation group with its elements fully enumerated.
//
// Elements are indexed in breadth-first discovery order from the generators,
// with the identity forced to index 0, so indices are stable across runs.
// Immutable after construction; concurrent readers need no locking.
class FiniteGroup {
 public:
  // Breadth-first closure of the generators under composition.
  // Throws degree_mismatch if the generators disagree on degree and
  // limit_exceeded if the closure grows past `limit`.
  static FiniteGroup generate(std::string label, std::vector<Perm> generators,
                              size_t limit = kDefaultElementLimit);

  static FiniteGroup trivial(std::string label = "1");

  // Product acting on the disjoint union of the two point sets.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    size_t limit = kDefaultElementLimit);

  size_t order() const { return elements_.size(); }
  size_t degree() const { return degree_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const Perm& element(size_t i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }

  // Index of a permutation that must belong to the group.
  size_t index_of(const Perm& p) const;
  std::optional<size_t> find(const Perm& p) const;

  size_t mul(size_t i, size_t j) const;  // index of element(i) * element(j)
  size_t inverse_of(size_t i) const;

  uint64_t element_order(size_t i) const { return orders_[i]; }
  const std::vector<uint64_t>& element_orders() const { return orders_; }

  // Indices of the generators inside the element list (deduplicated,
  // identity dropped unless the group is trivial).
  const std::vector<size_t>& generator_indices() const { return generator_indices_; }

  // The generator list as passed to generate(), by element index.
  size_t num_generators() const { return generator_elements_.size(); }
  size_t generator_element(size_t k) const { return generator_elements_[k]; }

  // BFS provenance: element i (i > 0) equals element(parent[i]) * generator
  // number via_generator[i]. Used to extend generator maps to homomorphisms.
  size_t bfs_parent(size_t i) const { return parent_[i]; }
  size_t bfs_generator(size_t i) const { return via_generator_[i]; }

  std::vector<size_t> centralizer(size_t x) const;
  std::vector<size_t> conjugacy_class(size_t x) const;
  std::vector<size_t> cyclic_subgroup(size_t x) const;

  // p if |G| = p^k (k >= 1), nullopt otherwise (including |G| = 1).
  std::optional<uint64_t> p_group_prime() const;

  // Sorted multiset of element orders.
  std::vector<uint64_t> order_multiset() const;

 private:
  FiniteGroup() = default;

  std::string label_;
  size_t degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<uint64_t> orders_;
  std::vector<size_t> generator_indices_;
  std::vector<size_t> generator_elements_;
  std::vector<size_t> parent_;
  std::vector<size_t> via_generator_;
  std::unordered_map<Perm, size_t, PermHash> index_;
};

}  // namespace coprime
