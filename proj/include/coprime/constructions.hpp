#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coprime/group.hpp"

namespace coprime {

// An unevaluated group construction expression. Parsed from text such as
//
//   Cyclic(6)
//   Dihedral(12) x Cyclic(2)
//   Affine(1,5)
//   Presented("< a, b | a^5 = b^8 = e, b a b^-1 = a^2 >")
//   Semidirect(Cyclic(5), Cyclic(4), "a -> a^2")
//
// Family parameters are the group ORDER for Dihedral and Dicyclic, the
// point count for Symmetric/Alternating, and the (prime) field size for
// Affine(1,q). `x` is direct product and binds left-associatively.
struct GroupSpec {
  enum class Kind {
    cyclic,
    dihedral,
    dicyclic,
    symmetric,
    alternating,
    affine,
    direct_product,
    semidirect,
    presented,
  };

  Kind kind = Kind::cyclic;
  uint64_t param = 0;              // family parameter
  std::vector<GroupSpec> factors;  // direct_product: 2+; semidirect: exactly 2 (N, H)
  std::string text;                // presented: presentation; semidirect: action map

  std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

// Realizes a spec as a permutation group. The label is the canonical spec
// string; callers may relabel. Throws invalid_parameter for bad family
// parameters and limit_exceeded past the element cap.
FiniteGroup build_group(const GroupSpec& spec, size_t limit = kDefaultElementLimit);

FiniteGroup build_group(const std::string& spec_text, size_t limit = kDefaultElementLimit);

// Named families.
FiniteGroup cyclic_group(uint64_t n);
FiniteGroup dihedral_group(uint64_t order);             // order = 2k, k >= 2
FiniteGroup dicyclic_group(uint64_t order);             // order = 4k, k >= 2
FiniteGroup symmetric_group(uint64_t n);
FiniteGroup alternating_group(uint64_t n);
FiniteGroup affine_group(uint64_t q);                   // GA(1,q), q prime

// Semidirect product N x| H for a prescribed action of H's generators on
// N's generators: action[j][k] is the N-element index of the image of N's
// k-th generator under H's j-th generator. The prescription is verified to
// extend to automorphisms of N and a homomorphism H -> Aut(N); throws
// not_an_automorphism otherwise. The result acts regularly on |N|*|H|
// points.
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<std::vector<size_t>>& action,
                               size_t limit = kDefaultElementLimit);

}  // namespace coprime
