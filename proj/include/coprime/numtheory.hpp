#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace coprime {

// Arithmetic on small positive integers (64-bit range). All functions expect
// n >= 1 unless noted; factorization is plain trial division, which is the
// right tool at this scale.

uint64_t gcd(uint64_t a, uint64_t b);
uint64_t lcm(uint64_t a, uint64_t b);

// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

bool is_prime(uint64_t n);

// p if n = p^k with k >= 1, otherwise nullopt (so 1 -> nullopt).
std::optional<uint64_t> prime_power_base(uint64_t n);

bool is_power_of_two(uint64_t n);

// Euler's totient: |{k in [1,n] : gcd(k,n) = 1}|.
uint64_t phi(uint64_t n);

// Product of the distinct primes dividing n; rad(1) = 1.
uint64_t rad(uint64_t n);

// Largest M with phi(M) <= k. phi(m) >= sqrt(m/2), so scanning
// m <= 2k^2 + 1 is exhaustive.
uint64_t max_phi_inverse(uint64_t k);

}  // namespace coprime
