#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace coprime {

// A permutation of {0, ..., degree-1}, stored as the image table.
// Composition is left-to-right: (a.then(b))(p) = b(a(p)), matching the
// right-action convention used by the coset tables.
class Perm {
 public:
  explicit Perm(size_t degree);  // identity

  // Validates that images is a bijection.
  static Perm from_images(std::vector<uint32_t> images);

  // Single cycle on the given points, identity elsewhere.
  static Perm from_cycle(size_t degree, const std::vector<uint32_t>& cycle);

  size_t degree() const { return images_.size(); }
  uint32_t operator[](size_t point) const { return images_[point]; }

  Perm then(const Perm& other) const;
  Perm inverse() const;

  bool is_identity() const;

  // Order of the permutation: lcm of cycle lengths.
  uint64_t order() const;

  const std::vector<uint32_t>& images() const { return images_; }

  std::string to_cycle_string() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<uint32_t> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = p.degree();
    for (uint32_t v : p.images()) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace coprime
