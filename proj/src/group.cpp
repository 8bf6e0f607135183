#include "coprime/group.hpp"

#include <algorithm>

#include "coprime/errors.hpp"
#include "coprime/numtheory.hpp"

namespace coprime {

FiniteGroup FiniteGroup::generate(std::string label, std::vector<Perm> generators,
                                  size_t limit) {
  size_t degree = generators.empty() ? 1 : generators.front().degree();
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw degree_mismatch("generators act on different point counts");
    }
  }

  FiniteGroup g;
  g.label_ = std::move(label);
  g.degree_ = degree;

  Perm identity(degree);
  g.elements_.push_back(identity);
  g.index_.emplace(identity, 0);
  g.parent_.push_back(0);
  g.via_generator_.push_back(0);

  // Breadth-first closure: multiplying every known element by every
  // generator on the right. Discovery order fixes the element indexing.
  for (size_t i = 0; i < g.elements_.size(); ++i) {
    for (size_t k = 0; k < generators.size(); ++k) {
      Perm next = g.elements_[i].then(generators[k]);
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() >= limit) {
        throw limit_exceeded("group closure exceeded " + std::to_string(limit) +
                             " elements (label: " + g.label_ + ")");
      }
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
      g.parent_.push_back(i);
      g.via_generator_.push_back(k);
    }
  }

  g.orders_.reserve(g.elements_.size());
  for (const Perm& p : g.elements_) g.orders_.push_back(p.order());

  for (const Perm& gen : generators) {
    size_t idx = g.index_.at(gen);
    g.generator_elements_.push_back(idx);
    if (idx == 0 && g.elements_.size() > 1) continue;
    if (std::find(g.generator_indices_.begin(), g.generator_indices_.end(), idx) ==
        g.generator_indices_.end()) {
      g.generator_indices_.push_back(idx);
    }
  }
  return g;
}

FiniteGroup FiniteGroup::trivial(std::string label) {
  return generate(std::move(label), {});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                        size_t limit) {
  if (a.order() * b.order() > limit) {
    throw limit_exceeded("direct product order " +
                         std::to_string(a.order() * b.order()) + " exceeds limit");
  }
  size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  auto embed_left = [&](const Perm& p) {
    std::vector<uint32_t> im(da + db);
    for (size_t i = 0; i < da; ++i) im[i] = p[i];
    for (size_t i = 0; i < db; ++i) im[da + i] = static_cast<uint32_t>(da + i);
    return Perm::from_images(std::move(im));
  };
  auto embed_right = [&](const Perm& p) {
    std::vector<uint32_t> im(da + db);
    for (size_t i = 0; i < da; ++i) im[i] = static_cast<uint32_t>(i);
    for (size_t i = 0; i < db; ++i) im[da + i] = static_cast<uint32_t>(da + p[i]);
    return Perm::from_images(std::move(im));
  };
  for (size_t idx : a.generator_indices()) gens.push_back(embed_left(a.element(idx)));
  for (size_t idx : b.generator_indices()) gens.push_back(embed_right(b.element(idx)));

  FiniteGroup g = generate(a.label() + " x " + b.label(), std::move(gens), limit);
  if (g.order() != a.order() * b.order()) {
    throw error("direct product closure has wrong order");  // unreachable
  }
  return g;
}

size_t FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw error("permutation is not a group element");
  return it->second;
}

std::optional<size_t> FiniteGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t FiniteGroup::mul(size_t i, size_t j) const {
  return index_.at(elements_[i].then(elements_[j]));
}

size_t FiniteGroup::inverse_of(size_t i) const { return index_.at(elements_[i].inverse()); }

std::vector<size_t> FiniteGroup::centralizer(size_t x) const {
  std::vector<size_t> result;
  for (size_t g = 0; g < order(); ++g) {
    if (mul(g, x) == mul(x, g)) result.push_back(g);
  }
  return result;
}

std::vector<size_t> FiniteGroup::conjugacy_class(size_t x) const {
  std::vector<bool> seen(order(), false);
  std::vector<size_t> result;
  for (size_t g = 0; g < order(); ++g) {
    size_t conj = mul(mul(g, x), inverse_of(g));
    if (!seen[conj]) {
      seen[conj] = true;
      result.push_back(conj);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<size_t> FiniteGroup::cyclic_subgroup(size_t x) const {
  std::vector<size_t> result{0};
  size_t p = x;
  while (p != 0) {
    result.push_back(p);
    p = mul(p, x);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<uint64_t> FiniteGroup::p_group_prime() const {
  return prime_power_base(order());
}

std::vector<uint64_t> FiniteGroup::order_multiset() const {
  std::vector<uint64_t> m = orders_;
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace coprime
