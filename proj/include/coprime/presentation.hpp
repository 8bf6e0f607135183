#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coprime {

// One letter of a word in the generators: generator index with a nonzero
// integer exponent.
struct WordLetter {
  size_t generator;
  int exponent;
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

// A word in the generators of a presentation, normalized so that adjacent
// letters use distinct generators and no exponent is zero.
class GroupWord {
 public:
  GroupWord() = default;

  void append(size_t generator, int exponent);
  void append(const GroupWord& other);

  GroupWord inverse() const;
  bool empty() const { return letters_.empty(); }
  const std::vector<WordLetter>& letters() const { return letters_; }

  // Expansion into single-step letters: 2*g for generator g, 2*g+1 for its
  // inverse. "a^-2 b" becomes [2g_a+1, 2g_a+1, 2g_b].
  std::vector<uint32_t> flat_letters() const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<WordLetter> letters_;
};

// A finitely presented group: named generators and relator words (each
// relator is taken to equal the identity).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Parses the presentation language:
//
//   < a, b | a^5 = b^8 = e, b a b^-1 = a^2 >
//
// Juxtaposition is composition, `e` is the identity, `^` takes integer
// exponents, parenthesized subwords may carry exponents, and equation chains
// expand pairwise against the last term. A bare word is a relator on its
// own. Whitespace between letters is optional when generator names are
// single characters.
//
// Throws syntax_error (with byte position) on malformed input and
// undeclared_generator for unknown symbols.
Presentation parse_presentation(const std::string& text);

}  // namespace coprime
