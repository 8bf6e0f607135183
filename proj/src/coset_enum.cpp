#include "coprime/coset_enum.hpp"

#include <deque>

#include "coprime/errors.hpp"

namespace coprime {

CosetTable::CosetTable(size_t num_cosets, size_t num_generators, std::vector<uint32_t> table)
    : num_cosets_(num_cosets), num_generators_(num_generators), table_(std::move(table)) {}

uint32_t CosetTable::act(size_t coset, size_t generator) const {
  return table_[coset * 2 * num_generators_ + 2 * generator];
}

uint32_t CosetTable::act_inverse(size_t coset, size_t generator) const {
  return table_[coset * 2 * num_generators_ + 2 * generator + 1];
}

Perm CosetTable::generator_permutation(size_t generator) const {
  std::vector<uint32_t> images(num_cosets_);
  for (size_t c = 0; c < num_cosets_; ++c) images[c] = act(c, generator);
  return Perm::from_images(std::move(images));
}

namespace {

constexpr int32_t kUndef = -1;

// Working state for one enumeration. Letters are 2g / 2g+1 for generator g
// and its inverse; rows are never reused, dead cosets point at their
// surviving representative through `parent`.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, size_t max_cosets)
      : num_gens_(pres.generators.size()),
        width_(2 * pres.generators.size()),
        max_cosets_(max_cosets) {
    for (const GroupWord& relator : pres.relators) {
      std::vector<uint32_t> letters = relator.flat_letters();
      if (!letters.empty()) relators_.push_back(std::move(letters));
    }
    new_coset();
  }

  CosetTable run() {
    for (size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!live(alpha)) continue;
      for (const auto& relator : relators_) {
        scan_and_fill(alpha, relator);
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (size_t letter = 0; letter < width_; ++letter) {
        if (entry(alpha, letter) == kUndef) define(alpha, letter);
      }
    }
    verify();
    return compress();
  }

 private:
  bool live(size_t c) const { return parent_[c] == static_cast<int32_t>(c); }

  int32_t& entry(size_t coset, size_t letter) { return table_[coset * width_ + letter]; }

  static size_t inverse_letter(size_t letter) { return letter ^ 1u; }

  size_t new_coset() {
    if (live_count_ >= max_cosets_) {
      throw table_overflow("coset enumeration exceeded " + std::to_string(max_cosets_) +
                           " live cosets");
    }
    if (parent_.size() >= 8 * max_cosets_ + 1024) {
      throw table_overflow("coset enumeration churned through too many definitions");
    }
    size_t c = parent_.size();
    parent_.push_back(static_cast<int32_t>(c));
    table_.resize(table_.size() + width_, kUndef);
    ++live_count_;
    return c;
  }

  size_t rep(size_t c) {
    while (parent_[c] != static_cast<int32_t>(c)) {
      parent_[c] = parent_[parent_[c]];  // path halving
      c = parent_[c];
    }
    return c;
  }

  void merge(size_t a, size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = static_cast<int32_t>(a);
    queue_.push_back(b);
    --live_count_;
    coincidence_seen_ = true;
  }

  // Standard coincidence processing: drain the queue of dead cosets, moving
  // each table entry of a dead row onto the surviving representatives. The
  // paired entries tau[a][x] = b, tau[b][x^-1] = a keep every link into a
  // dead coset discoverable from the dead row itself.
  void coincidence(size_t a, size_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      size_t gamma = queue_.front();
      queue_.pop_front();
      for (size_t x = 0; x < width_; ++x) {
        int32_t delta = entry(gamma, x);
        if (delta == kUndef) continue;
        entry(static_cast<size_t>(delta), inverse_letter(x)) = kUndef;
        size_t mu = rep(gamma);
        size_t nu = rep(static_cast<size_t>(delta));
        int32_t existing = entry(mu, x);
        if (existing != kUndef) {
          merge(nu, static_cast<size_t>(existing));
        } else if (int32_t back = entry(nu, inverse_letter(x)); back != kUndef) {
          merge(mu, static_cast<size_t>(back));
        } else {
          entry(mu, x) = static_cast<int32_t>(nu);
          entry(nu, inverse_letter(x)) = static_cast<int32_t>(mu);
        }
      }
    }
  }

  void define(size_t coset, size_t letter) {
    size_t next = new_coset();
    entry(coset, letter) = static_cast<int32_t>(next);
    entry(next, inverse_letter(letter)) = static_cast<int32_t>(coset);
  }

  void scan_and_fill(size_t alpha, const std::vector<uint32_t>& word) {
    size_t front = alpha;
    size_t back = alpha;
    size_t i = 0;
    size_t j = word.size();  // back scan consumes word[j-1]
    while (true) {
      while (i < j && entry(front, word[i]) != kUndef) {
        front = static_cast<size_t>(entry(front, word[i]));
        ++i;
      }
      if (i == j) {
        if (front != back) coincidence(front, back);
        return;
      }
      while (j > i && entry(back, inverse_letter(word[j - 1])) != kUndef) {
        back = static_cast<size_t>(entry(back, inverse_letter(word[j - 1])));
        --j;
      }
      if (j == i) {
        if (front != back) coincidence(front, back);
        return;
      }
      if (j == i + 1) {
        // One gap left: deduce the missing entry.
        entry(front, word[i]) = static_cast<int32_t>(back);
        entry(back, inverse_letter(word[i])) = static_cast<int32_t>(front);
        return;
      }
      define(front, word[i]);
    }
  }

  // Rescan every relator at every live coset until a full sweep changes
  // nothing; afterwards the table is complete and closed.
  void verify() {
    do {
      coincidence_seen_ = false;
      for (size_t alpha = 0; alpha < parent_.size(); ++alpha) {
        if (!live(alpha)) continue;
        for (const auto& relator : relators_) {
          scan_and_fill(alpha, relator);
          if (!live(alpha)) break;
        }
        if (!live(alpha)) continue;
        for (size_t letter = 0; letter < width_; ++letter) {
          if (entry(alpha, letter) == kUndef) define(alpha, letter);
        }
      }
    } while (coincidence_seen_);
  }

  CosetTable compress() {
    std::vector<uint32_t> remap(parent_.size(), 0);
    size_t count = 0;
    for (size_t c = 0; c < parent_.size(); ++c) {
      if (live(c)) remap[c] = static_cast<uint32_t>(count++);
    }
    std::vector<uint32_t> packed(count * width_, 0);
    for (size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (size_t x = 0; x < width_; ++x) {
        int32_t target = entry(c, x);
        if (target == kUndef) {
          throw error("coset table incomplete after enumeration");  // unreachable
        }
        packed[remap[c] * width_ + x] = remap[rep(static_cast<size_t>(target))];
      }
    }
    return CosetTable(count, num_gens_, std::move(packed));
  }

  size_t num_gens_;
  size_t width_;
  size_t max_cosets_;
  std::vector<std::vector<uint32_t>> relators_;
  std::vector<int32_t> parent_;
  std::vector<int32_t> table_;
  std::deque<size_t> queue_;
  size_t live_count_ = 0;
  bool coincidence_seen_ = false;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& pres, size_t max_cosets) {
  return Enumerator(pres, max_cosets).run();
}

FiniteGroup realize(const Presentation& pres, std::string label, size_t max_cosets) {
  CosetTable table = coset_enumerate(pres, max_cosets);
  std::vector<Perm> gens;
  gens.reserve(pres.generators.size());
  for (size_t g = 0; g < pres.generators.size(); ++g) {
    gens.push_back(table.generator_permutation(g));
  }
  if (label.empty()) label = pres.to_string();
  FiniteGroup group = FiniteGroup::generate(std::move(label), gens, table.num_cosets() + 1);
  if (group.order() != table.num_cosets()) {
    throw error("regular action closure disagrees with coset count");  // unreachable
  }
  return group;
}

Perm evaluate_word(const GroupWord& word, const std::vector<Perm>& generator_images) {
  if (generator_images.empty()) throw invalid_parameter("no generator images");
  Perm result(generator_images.front().degree());
  for (const WordLetter& l : word.letters()) {
    const Perm& gen = generator_images.at(l.generator);
    Perm step = l.exponent < 0 ? gen.inverse() : gen;
    int count = l.exponent < 0 ? -l.exponent : l.exponent;
    for (int i = 0; i < count; ++i) result = result.then(step);
  }
  return result;
}

}  // namespace coprime
