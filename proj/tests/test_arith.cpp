#include <doctest.h>

#include "graham/arith.hpp"
#include "graham/error.hpp"

using namespace graham;

TEST_CASE("factorize basics") {
  CHECK(factorize(12).factors == std::vector<std::pair<Int, int>>{{2, 2}, {3, 1}});
  CHECK(factorize(48).factors == std::vector<std::pair<Int, int>>{{2, 4}, {3, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).degenerate);
  CHECK(factorize(0).degenerate);
  CHECK_FALSE(factorize(2).degenerate);
  CHECK_THROWS_AS(factorize(-1), DomainError);
}

TEST_CASE("factorize reconstructs x on [2, 10^6]") {
  for (Int x = 2; x <= 1000000; ++x) {
    Int product = 1;
    for (const auto& [p, e] : factorize(x).factors) {
      for (int i = 0; i < e; ++i) product *= p;
    }
    if (product != x) {
      REQUIRE(product == x);  // report the first offender only
    }
  }
}

TEST_CASE("exponent_gcd") {
  CHECK(exponent_gcd(64) == 6);
  CHECK(exponent_gcd(12) == 1);
  CHECK(exponent_gcd(36) == 2);
  CHECK_THROWS_AS(exponent_gcd(1), DomainError);
  CHECK_THROWS_AS(exponent_gcd(0), DomainError);
}

TEST_CASE("exponent_gcd of k^d is a multiple of d") {
  for (Int k = 2; k <= 50; ++k) {
    for (int d = 1; d <= 6; ++d) {
      Int x = 1;
      for (int i = 0; i < d; ++i) x *= k;
      CHECK(exponent_gcd(x) % d == 0);
    }
  }
}

TEST_CASE("prime factor queries") {
  CHECK(largest_prime_factor(14) == 7);
  CHECK(largest_prime_factor(48) == 3);
  CHECK(largest_prime_factor(97) == 97);
  CHECK_THROWS_AS(largest_prime_factor(1), DomainError);

  CHECK(smallest_prime_factor_of(9) == 3);
  CHECK(smallest_prime_factor_of(10) == 2);
  CHECK(smallest_prime_factor_of(169) == 13);
  CHECK_THROWS_AS(smallest_prime_factor_of(1), DomainError);

  for (Int x = 2; x <= 5000; ++x) {
    CHECK(largest_prime_factor(x) == factorize(x).factors.back().first);
  }
}

TEST_CASE("divisor_count") {
  CHECK(divisor_count(8) == 4);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(1) == 1);
  CHECK_THROWS_AS(divisor_count(0), DomainError);
}

TEST_CASE("is_prime and perfect powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));  // 7 * 13

  CHECK(is_perfect_mth_power(64, 2));
  CHECK(is_perfect_mth_power(64, 3));
  CHECK(is_perfect_mth_power(64, 6));
  CHECK_FALSE(is_perfect_mth_power(64, 4));
  CHECK(is_perfect_mth_power(1, 7));
  CHECK_FALSE(is_perfect_mth_power(12, 2));
}
