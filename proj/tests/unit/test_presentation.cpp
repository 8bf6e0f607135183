#include <algorithm>
#include <doctest.h>

#include "coprime/constructions.hpp"
#include "coprime/coset_enum.hpp"
#include "coprime/errors.hpp"
#include "coprime/presentation.hpp"

using namespace coprime;

namespace {

GroupWord word(std::initializer_list<WordLetter> letters) {
  GroupWord w;
  for (const WordLetter& l : letters) w.append(l.generator, l.exponent);
  return w;
}

}  // namespace

TEST_CASE("parse a one-relator presentation") {
  Presentation p = parse_presentation("< a | a^5 = e >");
  REQUIRE(p.generators == std::vector<std::string>{"a"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == word({{0, 5}}));
}

TEST_CASE("parse equation chains and two-sided equations") {
  Presentation p = parse_presentation("< a, b | a^5 = b^8 = e, b a b^-1 = a^2 >");
  REQUIRE(p.generators.size() == 2);
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == word({{0, 5}}));
  CHECK(p.relators[1] == word({{1, 8}}));
  CHECK(p.relators[2] == word({{1, 1}, {0, 1}, {1, -1}, {0, -2}}));
}

TEST_CASE("single-letter names may run together") {
  Presentation spaced = parse_presentation("< a, b | b a b^-1 = a^2 >");
  Presentation packed = parse_presentation("<a,b|bab^-1=a^2>");
  CHECK(spaced == packed);
}

TEST_CASE("parenthesized subwords with exponents") {
  Presentation p = parse_presentation("< a, c | (a c)^2 = e >");
  CHECK(p.relators[0] == word({{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  Presentation q = parse_presentation("< a, c | (a c)^-2 = e >");
  CHECK(q.relators[0] == word({{1, -1}, {0, -1}, {1, -1}, {0, -1}}));
}

TEST_CASE("words normalize: adjacent powers merge, zero exponents vanish") {
  Presentation p = parse_presentation("< a | a^2 a^3 = e, a^0 a^2 = a^-1 >");
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == word({{0, 5}}));
  CHECK(p.relators[1] == word({{0, 3}}));  // a^2 * (a^-1)^-1

  // A relation whose two sides normalize to the same word contributes no
  // relator at all.
  Presentation q = parse_presentation("< a | a a = a^2 >");
  CHECK(q.relators.empty());
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("< a, b | a^2 = >"), syntax_error);
  CHECK_THROWS_AS(parse_presentation("< a | a^ >"), syntax_error);
  CHECK_THROWS_AS(parse_presentation("< | a >"), syntax_error);
  CHECK_THROWS_AS(parse_presentation("< a | (a >"), syntax_error);
  CHECK_THROWS_AS(parse_presentation("< a | a > trailing"), syntax_error);
  CHECK_THROWS_AS(parse_presentation("< e | e^2 >"), syntax_error);
  try {
    parse_presentation("< a, b | a^2 = >");
    FAIL("expected syntax_error");
  } catch (const syntax_error& e) {
    CHECK(e.position == 15);  // points at '>'
  }
}

TEST_CASE("undeclared generators are rejected with their name") {
  CHECK_THROWS_AS(parse_presentation("< a | a c = e >"), undeclared_generator);
  try {
    parse_presentation("< a | a cd2 = e >");
    FAIL("expected undeclared_generator");
  } catch (const undeclared_generator& e) {
    CHECK(std::string(e.what()).find("cd2") != std::string::npos);
  }
}

TEST_CASE("print/parse round trip is the identity") {
  const char* texts[] = {
      "< a | a^5 = e >",
      "< a, b | a^5 = b^8 = e, b a b^-1 = a^2 >",
      "< a, b | a^3 = b^3 = (a b)^2 >",
      "< a, b, c | a^2 = b^2 = c^3 = (a c)^2 = (b a)^4 = e, b c = c b >",
      "< a, b | a^9 = b^2 = e, (a^-1 b)^2 = b a^-2 >",
      "< a, b, c, d | a^2 = b^2 = c^3 = d^3 = (b c)^3 = (a b c)^2 = e, a d = d^2 a, a c = c^2 a, c d = d c, b d = d b >",
      "< r1, r2 | r1^4 = e, r2^2 = e, r2 r1 r2^-1 = r1^-1 >",  // multi-char names
  };
  for (const char* text : texts) {
    CAPTURE(text);
    Presentation once = parse_presentation(text);
    Presentation twice = parse_presentation(once.to_string());
    REQUIRE(once == twice);
  }
}

TEST_CASE("coset enumeration: cyclic and trivial groups") {
  CHECK(coset_enumerate(parse_presentation("< a | a^5 = e >")).num_cosets() == 5);
  CHECK(coset_enumerate(parse_presentation("< a | a^1 = e >")).num_cosets() == 1);
  CHECK(realize(parse_presentation("< a | a^1 = e >")).order() == 1);
}

TEST_CASE("coset enumeration: metacyclic group of order 40") {
  Presentation p = parse_presentation("< a, b | a^5 = b^8 = e, b a b^-1 = a^2 >");
  CHECK(coset_enumerate(p).num_cosets() == 40);
}

TEST_CASE("coset enumeration overflows on a free group") {
  Presentation p = parse_presentation("< a, b | >");
  CHECK_THROWS_AS(coset_enumerate(p, 500), table_overflow);
}

TEST_CASE("realize: presented groups hit their known orders") {
  CHECK(realize(parse_presentation("< a, b | a^3 = b^8 = e, b a b^-1 = a^-1 >")).order() == 24);
  CHECK(realize(parse_presentation("< a, b | a^9 = b^2 = e, (a^-1 b)^2 = b a^-2 >")).order() == 36);
}

TEST_CASE("every relator evaluates to the identity in the realized group") {
  const char* texts[] = {
      "< a, b | a^5 = b^8 = e, b a b^-1 = a^2 >",
      "< a, b | a^3 = b^3 = (a b)^2 >",
      "< a, b, c | a^2 = b^2 = c^9 = (a c)^2 = e, b a c^-1 = c a b, a b c b = b a c, b c^3 = c^3 b >",
  };
  for (const char* text : texts) {
    CAPTURE(text);
    Presentation p = parse_presentation(text);
    FiniteGroup g = realize(p);
    std::vector<Perm> gens;
    for (size_t k = 0; k < p.generators.size(); ++k) {
      gens.push_back(g.element(g.generator_element(k)));
    }
    for (const GroupWord& relator : p.relators) {
      REQUIRE(evaluate_word(relator, gens).is_identity());
    }
  }
}

TEST_CASE("generator actions of a complete table are permutations") {
  CosetTable table = coset_enumerate(parse_presentation("< a, b | a^4 = b^2 = e, b a b^-1 = a^-1 >"));
  CHECK(table.num_cosets() == 8);
  for (size_t g = 0; g < table.num_generators(); ++g) {
    Perm perm = table.generator_permutation(g);  // from_images validates bijectivity
    for (size_t c = 0; c < table.num_cosets(); ++c) {
      CHECK(table.act_inverse(perm[c], g) == c);
    }
  }
}

TEST_CASE("standard family presentations match the direct realizations") {
  for (uint64_t n : {2, 5, 9}) {
    FiniteGroup presented =
        realize(parse_presentation("< a | a^" + std::to_string(n) + " = e >"));
    REQUIRE(presented.order() == n);
    REQUIRE(presented.order_multiset() == cyclic_group(n).order_multiset());
  }
  for (uint64_t k : {3, 6, 10}) {
    FiniteGroup presented = realize(parse_presentation(
        "< a, b | a^" + std::to_string(k) + " = b^2 = e, b a b^-1 = a^-1 >"));
    REQUIRE(presented.order() == 2 * k);
    REQUIRE(presented.order_multiset() == dihedral_group(2 * k).order_multiset());
  }
  for (uint64_t k : {2, 3, 5}) {
    FiniteGroup presented = realize(parse_presentation(
        "< a, b | a^" + std::to_string(2 * k) + " = e, b^2 = a^" + std::to_string(k) +
        ", b a b^-1 = a^-1 >"));
    REQUIRE(presented.order() == 4 * k);
    REQUIRE(presented.order_multiset() == dicyclic_group(4 * k).order_multiset());
  }
}

TEST_CASE("a two-generator word with b^2 = e collapses to the dihedral group") {
  // <a,b | a^k = b^2 = e, bab^-1 = a^-1> presents D_2k, not the dicyclic
  // group of order 4k; the dicyclic presentation needs b^2 = a^(k/2).
  FiniteGroup g = realize(parse_presentation("< a, b | a^6 = b^2 = e, b a b^-1 = a^-1 >"));
  CHECK(g.order() == 12);
  std::vector<uint64_t> multiset = g.order_multiset();
  CHECK(std::count(multiset.begin(), multiset.end(), 2) == 7);  // dihedral: 7 involutions
}
