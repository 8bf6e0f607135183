#include <doctest.h>

#include <map>
#include <sstream>

#include "coprime/catalog.hpp"
#include "coprime/errors.hpp"

using namespace coprime;

namespace {

Catalog from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

}  // namespace

TEST_CASE("parse a small catalog") {
  Catalog cat = from_text(
      "# comment\n"
      "!complete 1-6 9\n"
      "\n"
      "Z6 | Cyclic(6) | order=6 | expect=2 | sgid=(6,2) | note=cyclic\n"
      "S3 | Symmetric(3) | order=6\n");
  REQUIRE(cat.entries.size() == 2);
  CHECK(cat.entries[0].label == "Z6");
  CHECK(cat.entries[0].declared_order == 6);
  CHECK(cat.entries[0].expected_end_vertices == 2);
  CHECK(cat.entries[0].small_group_id == std::pair<uint64_t, uint64_t>{6, 2});
  CHECK(cat.entries[0].note == "cyclic");
  CHECK(!cat.entries[1].expected_end_vertices);
  CHECK(cat.complete_orders == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 9});
  CHECK(cat.order_is_complete(6));
  CHECK(!cat.order_is_complete(7));
  CHECK(cat.find("S3") != nullptr);
  CHECK(cat.find("nope") == nullptr);
}

TEST_CASE("empty catalog") {
  CHECK(from_text("").entries.empty());
  CHECK(from_text("# nothing\n\n").entries.empty());
}

TEST_CASE("catalog errors carry line numbers") {
  CHECK_THROWS_AS(from_text("Z6 | Cyclic(6)\n"), catalog_parse_error);          // no order
  CHECK_THROWS_AS(from_text("Z6 | Cyclic(6) | order=abc\n"), catalog_parse_error);
  CHECK_THROWS_AS(from_text("Z6 | Cyclic( | order=6\n"), catalog_parse_error);  // bad spec
  CHECK_THROWS_AS(from_text("!bogus 3\n"), catalog_parse_error);
  CHECK_THROWS_AS(from_text("Z6 | Cyclic(6) | order=6 | zzz=1\n"), catalog_parse_error);
  CHECK_THROWS_AS(from_text("Z6 | Cyclic(6) | order=6 | sgid=6,2\n"), catalog_parse_error);
  try {
    from_text("Z1 | Cyclic(1) | order=1\nZ6 | Cyclic(6)\n");
    FAIL("expected catalog_parse_error");
  } catch (const catalog_parse_error& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_AS(from_text("A | Cyclic(2) | order=2\nA | Cyclic(3) | order=3\n"),
                  duplicate_label);
}

TEST_CASE("quoted presentation specs may contain pipes") {
  Catalog cat = from_text(
      "P | Presented(\"< a, b | a^3 = b^2 = e, b a b^-1 = a^-1 >\") | order=6\n");
  CHECK(realize_entry(cat.entries[0]).order() == 6);
}

TEST_CASE("declared order mismatches are flagged on realization") {
  Catalog cat = from_text("X | Cyclic(12) | order=10\n");
  CHECK_THROWS_WITH_AS(realize_entry(cat.entries[0]),
                       doctest::Contains("declared order 10 but realized order 12"), error);
}

TEST_CASE("realized entries take the catalog label") {
  Catalog cat = from_text("MyZ6 | Cyclic(6) | order=6\n");
  CHECK(realize_entry(cat.entries[0]).label() == "MyZ6");
}

TEST_CASE("bundled catalog loads and is complete where documented") {
  Catalog cat = load_catalog(COPRIME_TEST_CATALOG);
  CHECK(cat.entries.size() >= 100);
  for (uint64_t order = 1; order <= 24; ++order) CHECK(cat.order_is_complete(order));
  CHECK(cat.order_is_complete(28));
  CHECK(cat.order_is_complete(36));
  CHECK(!cat.order_is_complete(40));
  CHECK(!cat.order_is_complete(72));

  // The documented-complete orders carry the full classification counts.
  std::map<uint64_t, size_t> per_order;
  for (const CatalogEntry& e : cat.entries) per_order[e.declared_order]++;
  CHECK(per_order[8] == 5);
  CHECK(per_order[12] == 5);
  CHECK(per_order[16] == 14);
  CHECK(per_order[18] == 5);
  CHECK(per_order[20] == 5);
  CHECK(per_order[24] == 15);
  CHECK(per_order[28] == 4);
  CHECK(per_order[36] == 14);

  const CatalogEntry* d12 = cat.find("D12");
  REQUIRE(d12 != nullptr);
  CHECK(realize_entry(*d12).order() == 12);
}
