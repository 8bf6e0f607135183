#include "coprime/numtheory.hpp"

namespace coprime {

uint64_t gcd(uint64_t a, uint64_t b) {
  while (b != 0) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t lcm(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> factors;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1u);
  return factors;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) return false;
  }
  return true;
}

std::optional<uint64_t> prime_power_base(uint64_t n) {
  auto factors = factorize(n);
  if (factors.size() != 1) return std::nullopt;
  return factors.front().first;
}

bool is_power_of_two(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

uint64_t phi(uint64_t n) {
  uint64_t result = n;
  for (auto [p, e] : factorize(n)) {
    result -= result / p;
  }
  return result;
}

uint64_t rad(uint64_t n) {
  uint64_t r = 1;
  for (auto [p, e] : factorize(n)) r *= p;
  return r;
}

uint64_t max_phi_inverse(uint64_t k) {
  uint64_t best = 1;
  const uint64_t bound = 2 * k * k + 1;
  for (uint64_t m = 1; m <= bound; ++m) {
    if (phi(m) <= k) best = m;
  }
  return best;
}

}  // namespace coprime
