#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coprime/group.hpp"
#include "coprime/presentation.hpp"

namespace coprime {

inline constexpr size_t kDefaultMaxCosets = 50'000;

// Completed coset table for a presentation, enumerated over the trivial
// subgroup: one coset per group element, cosets numbered by first
// definition. Every entry is defined and each generator acts as a
// permutation of the cosets (the right regular action).
class CosetTable {
 public:
  CosetTable(size_t num_cosets, size_t num_generators, std::vector<uint32_t> table);

  size_t num_cosets() const { return num_cosets_; }
  size_t num_generators() const { return num_generators_; }

  // Image of coset c under right multiplication by generator g (or its
  // inverse).
  uint32_t act(size_t coset, size_t generator) const;
  uint32_t act_inverse(size_t coset, size_t generator) const;

  Perm generator_permutation(size_t generator) const;

 private:
  size_t num_cosets_;
  size_t num_generators_;
  std::vector<uint32_t> table_;  // row-major, stride 2 * num_generators
};

// HLT-style coset enumeration with coincidence handling over the trivial
// subgroup. Relator scans fill undefined entries as they go; after the main
// pass, verification sweeps rerun every scan until none produces new
// information. Throws table_overflow when the live-coset count passes
// max_cosets.
CosetTable coset_enumerate(const Presentation& pres, size_t max_cosets = kDefaultMaxCosets);

// Realizes the presented group as the permutation group generated by the
// coset actions of its generators. The regular action is faithful, so the
// group order equals the coset count.
FiniteGroup realize(const Presentation& pres, std::string label = "",
                    size_t max_cosets = kDefaultMaxCosets);

// Evaluates a word at the given generator permutations (all of one degree).
Perm evaluate_word(const GroupWord& word, const std::vector<Perm>& generator_images);

}  // namespace coprime
