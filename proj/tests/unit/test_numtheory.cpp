#include <doctest.h>

#include "coprime/numtheory.hpp"

using namespace coprime;

namespace {

// Independent routes used as oracles: phi by literal gcd counting, and the
// inverse-phi scan done with that brute-force phi.
uint64_t phi_by_counting(uint64_t n) {
  uint64_t count = 0;
  for (uint64_t k = 1; k <= n; ++k) {
    if (gcd(k, n) == 1) ++count;
  }
  return count;
}

uint64_t max_phi_inverse_by_counting(uint64_t k) {
  uint64_t best = 1;
  for (uint64_t m = 1; m <= 2 * k * k + 1; ++m) {
    if (phi_by_counting(m) <= k) best = m;
  }
  return best;
}

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(gcd(6, 35) == 1);
  CHECK(gcd(1, 999) == 1);
  CHECK(gcd(999, 1) == 1);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 7) == 7);
}

TEST_CASE("phi basics") {
  CHECK(phi(1) == 1);
  CHECK(phi(10) == 4);  // {1,3,7,9}
  CHECK(phi(30) == phi_by_counting(30));
  CHECK(phi(30) == 8);
}

TEST_CASE("phi by factorization matches coprime counting up to 10^4") {
  for (uint64_t n = 1; n <= 10'000; ++n) {
    CAPTURE(n);
    REQUIRE(phi(n) == phi_by_counting(n));
  }
}

TEST_CASE("rad basics and squarefree idempotence") {
  CHECK(rad(1) == 1);
  CHECK(rad(12) == 6);
  CHECK(rad(7) == 7);
  for (uint64_t n = 1; n <= 10'000; ++n) {
    CAPTURE(n);
    REQUIRE(n % rad(n) == 0);
    REQUIRE(rad(rad(n)) == rad(n));
  }
}

TEST_CASE("phi and rad are multiplicative on coprime arguments") {
  for (uint64_t a = 1; a <= 1000; a += 7) {
    for (uint64_t b = 2; b <= 1000; b += 13) {
      if (gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(phi(a * b) == phi(a) * phi(b));
      REQUIRE(rad(a * b) == rad(a) * rad(b));
    }
  }
}

TEST_CASE("max_phi_inverse frozen values") {
  // Values confirmed by the counting oracle below.
  CHECK(max_phi_inverse(2) == 6);
  CHECK(max_phi_inverse(4) == 12);
  CHECK(max_phi_inverse(10) == 30);
  CHECK(max_phi_inverse(2) == max_phi_inverse_by_counting(2));
  CHECK(max_phi_inverse(4) == max_phi_inverse_by_counting(4));
  CHECK(max_phi_inverse(10) == max_phi_inverse_by_counting(10));
}

TEST_CASE("max_phi_inverse is maximal over the whole scan window") {
  for (uint64_t k = 1; k <= 64; ++k) {
    CAPTURE(k);
    uint64_t m = max_phi_inverse(k);
    REQUIRE(phi(m) <= k);
    for (uint64_t candidate = m + 1; candidate <= 2 * k * k + 1; ++candidate) {
      REQUIRE(phi(candidate) > k);
    }
  }
}

TEST_CASE("factorization helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13
  CHECK(prime_power_base(8) == 2);
  CHECK(prime_power_base(3) == 3);
  CHECK(prime_power_base(243) == 3);
  CHECK(!prime_power_base(12));
  CHECK(!prime_power_base(1));
  CHECK(is_power_of_two(8));
  CHECK(!is_power_of_two(6));
  CHECK(!is_power_of_two(0));
  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(1, 9) == 9);
}
