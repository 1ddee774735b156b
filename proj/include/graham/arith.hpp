#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace graham {

using Int = std::int64_t;

// Prime factorization of a non-negative integer.
// For value >= 2 the factor list is (prime, exponent) with primes strictly
// increasing, exponents >= 1 and product p^e == value. 0 and 1 carry an empty
// list and the degenerate flag; number-theoretic ops reject them instead of
// guessing.
struct Factorization {
  Int value = 0;
  std::vector<std::pair<Int, int>> factors;
  bool degenerate = false;
};

// Smallest-prime-factor sieve. Construction is single-writer; once built the
// table is immutable and safe to share across threads.
class Sieve {
 public:
  explicit Sieve(Int limit);

  Int limit() const { return limit_; }
  // Smallest prime factor of x, 2 <= x <= limit().
  Int spf(Int x) const { return spf_[static_cast<std::size_t>(x)]; }

 private:
  Int limit_;
  std::vector<std::int32_t> spf_;
};

// Shared process-wide sieve covering at least [0, limit]; grown geometrically
// on demand. Returned snapshots stay valid after later growth.
std::shared_ptr<const Sieve> shared_sieve(Int limit);

Factorization factorize(Int x);

// Largest d such that x is a perfect d-th power (gcd of prime exponents).
int exponent_gcd(Int x);

Int largest_prime_factor(Int x);
Int smallest_prime_factor_of(Int m);
Int divisor_count(Int m);

bool is_prime(Int x);

// True iff x == y^m for some integer y >= 1 (x >= 1).
bool is_perfect_mth_power(Int x, Int m);

Int gcd(Int a, Int b);

}  // namespace graham
