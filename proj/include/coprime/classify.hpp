#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coprime/catalog.hpp"
#include "coprime/group.hpp"

namespace coprime {

// Which group orders can carry exactly n end vertices, before looking at
// any concrete group. Odd n forces a 2-group of order n + 1 (which must be
// a power of two); even n >= 2 is bounded by general_order_bound(n / 2),
// with |G| = n + 1 available when n + 1 is an odd prime power. n = 0 is an
// open-ended query.
struct AdmissibleOrders {
  uint64_t target = 0;
  bool possible = true;
  std::optional<uint64_t> exact_order;    // odd n: the only admissible order
  std::optional<uint64_t> p_group_order;  // even n: n + 1 when a prime power
  std::optional<uint64_t> even_bound;     // even n >= 2: order ceiling
  std::string note;

  bool admits(uint64_t order) const;
};

AdmissibleOrders admissible_orders(uint64_t n);

// Shared realization cache over one catalog: each entry is built at most
// once; `ensure` fans work across a small thread pool. Results are stored
// per entry index, so reports do not depend on scheduling.
class RealizedCatalog {
 public:
  struct Realization {
    bool attempted = false;
    std::optional<FiniteGroup> group;  // nullopt after a failed attempt
    std::string error;
    uint64_t end_vertex_count = 0;
  };

  explicit RealizedCatalog(Catalog catalog);

  const Catalog& catalog() const { return catalog_; }
  const Realization& realization(size_t index) const { return slots_[index]; }

  void ensure(const std::vector<size_t>& indices, unsigned jobs);
  void ensure_all(unsigned jobs);

 private:
  Catalog catalog_;
  std::vector<Realization> slots_;
};

enum class Confidence { proven_complete, catalog_relative };

struct ClassifyMatch {
  std::string label;
  uint64_t order = 0;
  uint64_t end_vertex_count = 0;
  bool expected = false;           // entry carries expect == target
  bool at_complete_order = false;  // declared order is catalog-complete
};

struct ExpectedVerdict {
  std::string label;
  bool found = false;
  std::string detail;  // why not, when missing
};

struct EntryFailure {
  std::string label;
  std::string message;
};

struct ClassificationReport {
  uint64_t target = 0;
  AdmissibleOrders constraints;
  std::vector<std::string> pruned;                 // labels skipped by order constraints
  std::vector<uint64_t> searched_orders;           // distinct declared orders realized
  std::vector<uint64_t> searched_complete_orders;  // searched & documented complete
  std::vector<ClassifyMatch> matches;              // catalog order
  std::vector<ExpectedVerdict> expected;           // entries with expect == target
  std::vector<EntryFailure> failures;
  Confidence confidence = Confidence::catalog_relative;

  bool all_expected_found() const;
  bool has_extras_at_complete_orders() const;
  std::vector<const ClassifyMatch*> extras() const;
  bool passes() const { return all_expected_found() && !has_extras_at_complete_orders(); }
};

ClassificationReport classify(uint64_t n, RealizedCatalog& realized, unsigned jobs = 1);

struct PaperVerification {
  std::vector<ClassificationReport> reports;  // n = 1..10
  bool all_pass = false;
};

// Runs classify for n = 1..10 and folds the verdicts; all_pass requires
// every expected label found and no extra matches at catalog-complete
// orders.
PaperVerification verify_paper_tables(RealizedCatalog& realized, unsigned jobs = 1);

}  // namespace coprime
