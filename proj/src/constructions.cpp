#include "coprime/constructions.hpp"

#include <cctype>

#include "coprime/coset_enum.hpp"
#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"
#include "coprime/presentation.hpp"

namespace coprime {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic:
      return "Cyclic(" + std::to_string(param) + ")";
    case Kind::dihedral:
      return "Dihedral(" + std::to_string(param) + ")";
    case Kind::dicyclic:
      return "Dicyclic(" + std::to_string(param) + ")";
    case Kind::symmetric:
      return "Symmetric(" + std::to_string(param) + ")";
    case Kind::alternating:
      return "Alternating(" + std::to_string(param) + ")";
    case Kind::affine:
      return "Affine(1," + std::to_string(param) + ")";
    case Kind::direct_product: {
      std::string out;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        bool nested = factors[i].kind == Kind::direct_product;
        out += nested ? "(" + factors[i].to_string() + ")" : factors[i].to_string();
      }
      return out;
    }
    case Kind::semidirect:
      return "Semidirect(" + factors[0].to_string() + ", " + factors[1].to_string() +
             ", " + quote(text) + ")";
    case Kind::presented:
      return "Presented(" + quote(text) + ")";
  }
  return "?";
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_product();
    skip_ws();
    if (pos_ != text_.size()) throw syntax_error("trailing input in group spec", pos_);
    return spec;
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
    if (peek() != c) throw syntax_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool try_keyword(const std::string& kw) {
    skip_ws();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    size_t end = pos_ + kw.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  GroupSpec parse_product() {
    GroupSpec first = parse_primary();
    if (!try_keyword("x")) return first;
    GroupSpec product;
    product.kind = GroupSpec::Kind::direct_product;
    product.factors.push_back(std::move(first));
    do {
      product.factors.push_back(parse_primary());
    } while (try_keyword("x"));
    return product;
  }

  GroupSpec parse_primary() {
    if (peek() == '(') {
      ++pos_;
      GroupSpec inner = parse_product();
      expect(')');
      return inner;
    }
    size_t at = pos_;
    if (try_keyword("Cyclic")) return parse_family(GroupSpec::Kind::cyclic);
    if (try_keyword("Dihedral")) return parse_family(GroupSpec::Kind::dihedral);
    if (try_keyword("Dicyclic")) return parse_family(GroupSpec::Kind::dicyclic);
    if (try_keyword("Symmetric")) return parse_family(GroupSpec::Kind::symmetric);
    if (try_keyword("Alternating")) return parse_family(GroupSpec::Kind::alternating);
    if (try_keyword("Affine")) return parse_affine();
    if (try_keyword("Presented")) return parse_presented();
    if (try_keyword("Semidirect")) return parse_semidirect();
    throw syntax_error("expected a group constructor", at);
  }

  GroupSpec parse_family(GroupSpec::Kind kind) {
    expect('(');
    GroupSpec spec;
    spec.kind = kind;
    spec.param = parse_number();
    expect(')');
    return spec;
  }

  GroupSpec parse_affine() {
    expect('(');
    uint64_t degree = parse_number();
    if (degree != 1) throw syntax_error("only Affine(1,q) is supported", pos_);
    expect(',');
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::affine;
    spec.param = parse_number();
    expect(')');
    return spec;
  }

  GroupSpec parse_presented() {
    expect('(');
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::presented;
    spec.text = parse_string();
    expect(')');
    return spec;
  }

  GroupSpec parse_semidirect() {
    expect('(');
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::semidirect;
    spec.factors.push_back(parse_product());
    expect(',');
    spec.factors.push_back(parse_product());
    expect(',');
    spec.text = parse_string();
    expect(')');
    return spec;
  }

  uint64_t parse_number() {
    skip_ws();
    size_t start = pos_;
    uint64_t value = 0;
    size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw syntax_error("parameter too large", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw syntax_error("expected a number", pos_);
    return value;
  }

  std::string parse_string() {
    if (peek() != '"') throw syntax_error("expected a quoted string", pos_);
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ == text_.size()) throw syntax_error("unterminated string", pos_);
    ++pos_;  // closing quote
    return out;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

// Action descriptors for Semidirect(N, H, "..."): one clause per H
// generator, clauses separated by ';', each clause a comma-separated list
// of `gen -> word` entries naming N's generators a, b, c, ... in order.
// A clause must cover every N generator exactly once.
std::vector<std::vector<size_t>> parse_action(const std::string& text,
                                              const FiniteGroup& normal,
                                              const FiniteGroup& acting) {
  std::vector<std::string> names;
  for (size_t k = 0; k < normal.num_generators(); ++k) {
    names.push_back(std::string(1, static_cast<char>('a' + k)));
  }
  std::vector<Perm> gen_perms;
  for (size_t k = 0; k < normal.num_generators(); ++k) {
    gen_perms.push_back(normal.element(normal.generator_element(k)));
  }

  std::vector<std::string> clauses;
  {
    std::string current;
    for (char c : text) {
      if (c == ';') {
        clauses.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    clauses.push_back(current);
  }
  if (clauses.size() != acting.num_generators()) {
    throw invalid_parameter("action lists " + std::to_string(clauses.size()) +
                            " clauses for " + std::to_string(acting.num_generators()) +
                            " acting generators");
  }

  std::vector<std::vector<size_t>> action;
  for (const std::string& clause : clauses) {
    std::vector<bool> covered(names.size(), false);
    std::vector<size_t> images(names.size(), 0);
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < clause.size() && std::isspace(static_cast<unsigned char>(clause[pos]))) ++pos;
    };
    while (true) {
      skip_ws();
      if (pos == clause.size()) break;
      size_t start = pos;
      while (pos < clause.size() && clause[pos] != '-') ++pos;
      std::string lhs = clause.substr(start, pos - start);
      while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
      if (pos + 1 >= clause.size() || clause[pos + 1] != '>') {
        throw syntax_error("expected '->' in action clause", start);
      }
      pos += 2;
      size_t word_start = pos;
      while (pos < clause.size() && clause[pos] != ',') ++pos;
      std::string rhs = clause.substr(word_start, pos - word_start);
      if (pos < clause.size()) ++pos;  // consume ','

      size_t gen = names.size();
      for (size_t k = 0; k < names.size(); ++k) {
        if (names[k] == lhs) gen = k;
      }
      if (gen == names.size()) throw undeclared_generator(lhs, start);
      if (covered[gen]) throw syntax_error("generator mapped twice in action", start);
      covered[gen] = true;

      // Reuse the presentation word grammar to read the image word.
      std::string gens_decl;
      for (size_t k = 0; k < names.size(); ++k) {
        if (k) gens_decl += ", ";
        gens_decl += names[k];
      }
      Presentation p = parse_presentation("< " + gens_decl + " | " + rhs + " >");
      if (p.relators.size() > 1) {
        throw syntax_error("action image must be a single word", word_start);
      }
      Perm image = p.relators.empty() ? Perm(normal.degree())
                                      : evaluate_word(p.relators.front(), gen_perms);
      auto idx = normal.find(image);
      if (!idx) throw invalid_parameter("action image is not an element of the base group");
      images[gen] = *idx;
    }
    for (size_t k = 0; k < names.size(); ++k) {
      if (!covered[k]) {
        throw invalid_parameter("action clause missing image for generator '" + names[k] + "'");
      }
    }
    action.push_back(std::move(images));
  }
  return action;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

FiniteGroup cyclic_group(uint64_t n) {
  if (n < 1) throw invalid_parameter("Cyclic(n) needs n >= 1");
  std::string label = "Cyclic(" + std::to_string(n) + ")";
  if (n == 1) return FiniteGroup::trivial(label);
  std::vector<uint32_t> cycle(n);
  for (uint64_t i = 0; i < n; ++i) cycle[i] = static_cast<uint32_t>(i);
  return FiniteGroup::generate(label, {Perm::from_cycle(n, cycle)});
}

FiniteGroup dihedral_group(uint64_t order) {
  if (order < 4 || order % 2 != 0) {
    throw invalid_parameter("Dihedral(order) needs an even order >= 4");
  }
  uint64_t k = order / 2;
  std::string label = "Dihedral(" + std::to_string(order) + ")";
  if (k == 2) {
    // The 2-gon action is not faithful; use two disjoint transpositions.
    return FiniteGroup::generate(label, {Perm::from_cycle(4, {0, 1}), Perm::from_cycle(4, {2, 3})});
  }
  std::vector<uint32_t> rotation(k);
  for (uint64_t i = 0; i < k; ++i) rotation[i] = static_cast<uint32_t>(i);
  std::vector<uint32_t> reflection(k);
  for (uint64_t i = 0; i < k; ++i) reflection[i] = static_cast<uint32_t>((k - i) % k);
  return FiniteGroup::generate(label,
                               {Perm::from_cycle(k, rotation), Perm::from_images(reflection)});
}

FiniteGroup dicyclic_group(uint64_t order) {
  if (order < 8 || order % 4 != 0) {
    throw invalid_parameter("Dicyclic(order) needs an order divisible by 4, >= 8");
  }
  uint64_t k = order / 4;
  std::string text = "< a, b | a^" + std::to_string(2 * k) + " = e, b^2 = a^" +
                     std::to_string(k) + ", b a b^-1 = a^-1 >";
  return realize(parse_presentation(text), "Dicyclic(" + std::to_string(order) + ")");
}

FiniteGroup symmetric_group(uint64_t n) {
  if (n < 1) throw invalid_parameter("Symmetric(n) needs n >= 1");
  std::string label = "Symmetric(" + std::to_string(n) + ")";
  if (n == 1) return FiniteGroup::trivial(label);
  if (n == 2) return FiniteGroup::generate(label, {Perm::from_cycle(2, {0, 1})});
  std::vector<uint32_t> cycle(n);
  for (uint64_t i = 0; i < n; ++i) cycle[i] = static_cast<uint32_t>(i);
  return FiniteGroup::generate(label, {Perm::from_cycle(n, {0, 1}), Perm::from_cycle(n, cycle)});
}

FiniteGroup alternating_group(uint64_t n) {
  if (n < 1) throw invalid_parameter("Alternating(n) needs n >= 1");
  std::string label = "Alternating(" + std::to_string(n) + ")";
  if (n <= 2) return FiniteGroup::trivial(label);
  if (n == 3) return FiniteGroup::generate(label, {Perm::from_cycle(3, {0, 1, 2})});
  std::vector<uint32_t> cycle;
  for (uint64_t i = n % 2 == 0 ? 1 : 0; i < n; ++i) cycle.push_back(static_cast<uint32_t>(i));
  return FiniteGroup::generate(label,
                               {Perm::from_cycle(n, {0, 1, 2}), Perm::from_cycle(n, cycle)});
}

FiniteGroup affine_group(uint64_t q) {
  if (!is_prime(q)) throw invalid_parameter("Affine(1,q) needs a prime q");
  std::string label = "Affine(1," + std::to_string(q) + ")";
  std::vector<uint32_t> shift(q);
  for (uint64_t i = 0; i < q; ++i) shift[i] = static_cast<uint32_t>((i + 1) % q);
  std::vector<Perm> gens{Perm::from_images(shift)};
  if (q > 2) {
    // Multiplication by the smallest primitive root generates the point
    // stabilizer of 0.
    uint64_t root = 2;
    for (;; ++root) {
      uint64_t pow = root % q, steps = 1;
      while (pow != 1) {
        pow = pow * root % q;
        ++steps;
      }
      if (steps == q - 1) break;
    }
    std::vector<uint32_t> mult(q);
    for (uint64_t i = 0; i < q; ++i) mult[i] = static_cast<uint32_t>(i * root % q);
    gens.push_back(Perm::from_images(mult));
  }
  return FiniteGroup::generate(label, std::move(gens));
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<std::vector<size_t>>& action,
                               size_t limit) {
  if (action.size() != acting.num_generators()) {
    throw invalid_parameter("need one action row per acting generator");
  }
  for (const auto& row : action) {
    if (row.size() != normal.num_generators()) {
      throw invalid_parameter("need one image per base generator");
    }
    for (size_t img : row) {
      if (img >= normal.order()) throw invalid_parameter("action image out of range");
    }
  }
  size_t n = normal.order(), h = acting.order();
  if (n * h > limit) {
    throw limit_exceeded("semidirect product order " + std::to_string(n * h) +
                         " exceeds limit");
  }

  // Extend each prescribed generator map over all of N along the BFS tree,
  // then check it really is an automorphism.
  std::vector<std::vector<size_t>> gen_maps;
  for (const auto& row : action) {
    std::vector<size_t> map(n);
    map[0] = 0;
    for (size_t i = 1; i < n; ++i) {
      map[i] = normal.mul(map[normal.bfs_parent(i)], row[normal.bfs_generator(i)]);
    }
    std::vector<bool> hit(n, false);
    for (size_t img : map) {
      if (hit[img]) throw not_an_automorphism("prescribed map is not a bijection");
      hit[img] = true;
    }
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        if (map[normal.mul(x, y)] != normal.mul(map[x], map[y])) {
          throw not_an_automorphism("prescribed map does not respect multiplication");
        }
      }
    }
    gen_maps.push_back(std::move(map));
  }

  // Extend over H: phi[h * g_j] = phi[h] o phi[g_j], then verify the
  // extension is word-independent, i.e. the action is a homomorphism.
  std::vector<std::vector<size_t>> phi(h);
  phi[0].resize(n);
  for (size_t x = 0; x < n; ++x) phi[0][x] = x;
  for (size_t i = 1; i < h; ++i) {
    const auto& parent = phi[acting.bfs_parent(i)];
    const auto& step = gen_maps[acting.bfs_generator(i)];
    phi[i].resize(n);
    for (size_t x = 0; x < n; ++x) phi[i][x] = parent[step[x]];
  }
  for (size_t i = 0; i < h; ++i) {
    for (size_t j = 0; j < acting.num_generators(); ++j) {
      size_t target = acting.mul(i, acting.generator_element(j));
      for (size_t x = 0; x < n; ++x) {
        if (phi[target][x] != phi[i][gen_maps[j][x]]) {
          throw not_an_automorphism("action does not define a homomorphism into Aut(N)");
        }
      }
    }
  }

  // Right regular action on pairs (n, h), point id = n * |H| + h.
  auto point = [h](size_t x, size_t y) { return static_cast<uint32_t>(x * h + y); };
  std::vector<Perm> gens;
  for (size_t k = 0; k < normal.num_generators(); ++k) {
    size_t g = normal.generator_element(k);
    std::vector<uint32_t> images(n * h);
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < h; ++y) {
        images[point(x, y)] = point(normal.mul(x, phi[y][g]), y);
      }
    }
    gens.push_back(Perm::from_images(std::move(images)));
  }
  for (size_t k = 0; k < acting.num_generators(); ++k) {
    size_t g = acting.generator_element(k);
    std::vector<uint32_t> images(n * h);
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < h; ++y) {
        images[point(x, y)] = point(x, acting.mul(y, g));
      }
    }
    gens.push_back(Perm::from_images(std::move(images)));
  }

  FiniteGroup result = FiniteGroup::generate(normal.label() + " : " + acting.label(),
                                             std::move(gens), n * h + 1);
  if (result.order() != n * h) {
    throw error("semidirect closure has wrong order");  // unreachable
  }
  return result;
}

FiniteGroup build_group(const GroupSpec& spec, size_t limit) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return cyclic_group(spec.param);
    case GroupSpec::Kind::dihedral:
      return dihedral_group(spec.param);
    case GroupSpec::Kind::dicyclic:
      return dicyclic_group(spec.param);
    case GroupSpec::Kind::symmetric:
      return symmetric_group(spec.param);
    case GroupSpec::Kind::alternating:
      return alternating_group(spec.param);
    case GroupSpec::Kind::affine:
      return affine_group(spec.param);
    case GroupSpec::Kind::presented:
      return realize(parse_presentation(spec.text), spec.to_string());
    case GroupSpec::Kind::direct_product: {
      FiniteGroup result = build_group(spec.factors.front(), limit);
      for (size_t i = 1; i < spec.factors.size(); ++i) {
        result = FiniteGroup::direct_product(result, build_group(spec.factors[i], limit), limit);
      }
      result.set_label(spec.to_string());
      return result;
    }
    case GroupSpec::Kind::semidirect: {
      FiniteGroup n = build_group(spec.factors[0], limit);
      FiniteGroup h = build_group(spec.factors[1], limit);
      auto action = parse_action(spec.text, n, h);
      FiniteGroup result = semidirect_product(n, h, action, limit);
      result.set_label(spec.to_string());
      return result;
    }
  }
  throw invalid_parameter("unknown group spec");
}

FiniteGroup build_group(const std::string& spec_text, size_t limit) {
  return build_group(parse_group_spec(spec_text), limit);
}

}  // namespace coprime
