#include "coprime/presentation.hpp"

#include <cctype>

#include "coprime/errors.hpp"

namespace coprime {

void GroupWord::append(size_t generator, int exponent) {
  if (exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == generator) {
    letters_.back().exponent += exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({generator, exponent});
}

void GroupWord::append(const GroupWord& other) {
  for (const WordLetter& l : other.letters_) append(l.generator, l.exponent);
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.append(it->generator, -it->exponent);
  }
  return w;
}

std::vector<uint32_t> GroupWord::flat_letters() const {
  std::vector<uint32_t> out;
  for (const WordLetter& l : letters_) {
    uint32_t letter = static_cast<uint32_t>(2 * l.generator + (l.exponent < 0 ? 1 : 0));
    int count = l.exponent < 0 ? -l.exponent : l.exponent;
    for (int i = 0; i < count; ++i) out.push_back(letter);
  }
  return out;
}

std::string GroupWord::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const WordLetter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += names[l.generator];
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += " | ";
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += relators[i].to_string(generators);
  }
  out += " >";
  return out;
}

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(const std::string& text) : text_(text) {}

  Presentation parse() {
    skip_ws();
    expect('<');
    parse_generator_list();
    expect('|');
    parse_relation_list();
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) {
      throw syntax_error("trailing input after '>'", pos_);
    }
    return std::move(result_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      throw syntax_error(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) throw syntax_error("expected a generator name", pos_);
    return text_.substr(start, pos_ - start);
  }

  void parse_generator_list() {
    while (true) {
      size_t at = pos_;
      std::string name = read_name();
      if (name == "e") {
        throw syntax_error("'e' is reserved for the identity", at);
      }
      for (const std::string& g : result_.generators) {
        if (g == name) throw syntax_error("generator '" + name + "' declared twice", at);
      }
      result_.generators.push_back(name);
      if (peek() != ',') break;
      ++pos_;
    }
  }

  void parse_relation_list() {
    if (peek() == '>') return;  // empty relation list
    while (true) {
      parse_relation();
      if (peek() != ',') break;
      ++pos_;
    }
  }

  // relation := word ('=' word)*; chains expand pairwise against the last
  // term, so "x = y = e" yields relators x and y.
  void parse_relation() {
    std::vector<GroupWord> sides;
    sides.push_back(parse_word());
    while (peek() == '=') {
      ++pos_;
      sides.push_back(parse_word());
    }
    if (sides.size() == 1) {
      add_relator(std::move(sides.front()));
      return;
    }
    GroupWord last_inverse = sides.back().inverse();
    for (size_t i = 0; i + 1 < sides.size(); ++i) {
      GroupWord relator = sides[i];
      relator.append(last_inverse);
      add_relator(std::move(relator));
    }
  }

  void add_relator(GroupWord w) {
    if (!w.empty()) result_.relators.push_back(std::move(w));
  }

  bool at_word_start() {
    char c = peek();
    return c == '(' || name_char(c);
  }

  GroupWord parse_word() {
    if (!at_word_start()) throw syntax_error("expected a word", pos_);
    GroupWord word;
    while (at_word_start()) {
      parse_factor(word);
    }
    return word;
  }

  void parse_factor(GroupWord& word) {
    skip_ws();
    GroupWord base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = parse_word();
      expect(')');
    } else {
      size_t at = pos_;
      size_t gen = match_symbol();
      if (gen == kIdentity) {
        base = GroupWord{};
      } else if (gen == kUnknown) {
        size_t end = at;
        while (end < text_.size() && name_char(text_[end])) ++end;
        throw undeclared_generator(text_.substr(at, end - at), at);
      } else {
        base.append(gen, 1);
      }
    }
    int exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exp = parse_int();
    }
    append_power(word, base, exp);
  }

  static constexpr size_t kIdentity = static_cast<size_t>(-1);
  static constexpr size_t kUnknown = static_cast<size_t>(-2);

  // Longest match among declared generator names and 'e' at the current
  // position. This is what lets single-letter words run together ("bab")
  // while multi-character names still work when separated by spaces.
  size_t match_symbol() {
    size_t best_len = 0;
    size_t best = kUnknown;
    for (size_t g = 0; g < result_.generators.size(); ++g) {
      const std::string& name = result_.generators[g];
      if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0) {
        best_len = name.size();
        best = g;
      }
    }
    if (best_len < 1 && text_.compare(pos_, 1, "e") == 0) {
      best_len = 1;
      best = kIdentity;
    }
    if (best == kUnknown) return kUnknown;
    pos_ += best_len;
    return best;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    long value = 0;
    size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw syntax_error("exponent too large", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw syntax_error("expected an integer exponent", pos_);
    return static_cast<int>(negative ? -value : value);
  }

  void append_power(GroupWord& word, const GroupWord& base, int exp) {
    if (exp == 0 || base.empty()) return;
    const GroupWord powered = exp < 0 ? base.inverse() : base;
    int count = exp < 0 ? -exp : exp;
    for (int i = 0; i < count; ++i) word.append(powered);
  }

  const std::string& text_;
  size_t pos_ = 0;
  Presentation result_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  return PresentationParser(text).parse();
}

}  // namespace coprime
