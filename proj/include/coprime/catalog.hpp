#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coprime/constructions.hpp"
#include "coprime/group.hpp"

namespace coprime {

// One catalog line: a labeled group construction with its declared order
// and optional reference data.
struct CatalogEntry {
  std::string label;
  GroupSpec spec;
  uint64_t declared_order = 0;
  std::optional<uint64_t> expected_end_vertices;
  std::optional<std::pair<uint64_t, uint64_t>> small_group_id;
  std::string note;
  size_t line = 0;
};

// A parsed catalog file. `complete_orders` lists the group orders for which
// the file documents a complete set of isomorphism-class representatives;
// exclusion claims are only sound at those orders.
struct Catalog {
  std::vector<CatalogEntry> entries;
  std::set<uint64_t> complete_orders;

  const CatalogEntry* find(const std::string& label) const;
  bool order_is_complete(uint64_t order) const { return complete_orders.count(order) > 0; }
};

// Line-oriented catalog format:
//
//   # comment
//   !complete 1-24 28 36
//   Z6 | Cyclic(6) | order=6 | expect=2 | sgid=(6,2) | note=cyclic
//
// Fields after the spec may appear in any order; order= is required.
// Throws catalog_parse_error (with line number) and duplicate_label.
Catalog parse_catalog(std::istream& in);
Catalog load_catalog(const std::string& path);

// Builds the entry's group, checks the realized order against the declared
// one (throwing on mismatch), and relabels it with the entry label.
FiniteGroup realize_entry(const CatalogEntry& entry, size_t limit = kDefaultElementLimit);

}  // namespace coprime
