#include "coprime/perm.hpp"

#include <numeric>

#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

Perm::Perm(size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm Perm::from_images(std::vector<uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint32_t v : images) {
    if (v >= images.size() || seen[v]) {
      throw invalid_parameter("image table is not a bijection");
    }
    seen[v] = true;
  }
  Perm p(0);
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycle(size_t degree, const std::vector<uint32_t>& cycle) {
  Perm p(degree);
  for (size_t i = 0; i < cycle.size(); ++i) {
    uint32_t from = cycle[i];
    uint32_t to = cycle[(i + 1) % cycle.size()];
    if (from >= degree || to >= degree) {
      throw invalid_parameter("cycle point out of range");
    }
    p.images_[from] = to;
  }
  std::vector<bool> seen(degree, false);
  for (uint32_t v : p.images_) {
    if (seen[v]) throw invalid_parameter("cycle repeats a point");
    seen[v] = true;
  }
  return p;
}

Perm Perm::then(const Perm& other) const {
  Perm r(0);
  r.images_.resize(degree());
  for (size_t i = 0; i < degree(); ++i) {
    r.images_[i] = other.images_[images_[i]];
  }
  return r;
}

Perm Perm::inverse() const {
  Perm r(0);
  r.images_.resize(degree());
  for (size_t i = 0; i < degree(); ++i) {
    r.images_[images_[i]] = static_cast<uint32_t>(i);
  }
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

uint64_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  uint64_t result = 1;
  for (size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    uint64_t len = 0;
    for (size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = lcm(result, len);
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace coprime
