#include "graham/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "graham/error.hpp"

namespace graham {

Sieve::Sieve(Int limit) : limit_(std::max<Int>(limit, 3)) {
  spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
  std::vector<std::int32_t> primes;
  for (Int i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::int32_t>(i);
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : primes) {
      if (p > spf_[i] || i * p > limit_) break;
      spf_[i * p] = p;
    }
  }
}

namespace {
std::mutex g_sieve_mutex;
std::shared_ptr<const Sieve> g_sieve;
}  // namespace

std::shared_ptr<const Sieve> shared_sieve(Int limit) {
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  if (!g_sieve || g_sieve->limit() < limit) {
    Int grown = g_sieve ? g_sieve->limit() : Int{1 << 16};
    while (grown < limit) grown *= 2;
    g_sieve = std::make_shared<const Sieve>(grown);
  }
  return g_sieve;
}

namespace {
// beyond this, factorize falls back to trial division by sieved primes
constexpr Int kSieveDirectLimit = Int{1} << 23;
}  // namespace

Factorization factorize(Int x) {
  if (x < 0) throw DomainError("factorize: negative argument");
  Factorization f;
  f.value = x;
  if (x < 2) {
    f.degenerate = true;
    return f;
  }
  if (x <= kSieveDirectLimit) {
    auto sieve = shared_sieve(x);
    while (x > 1) {
      Int p = sieve->spf(x);
      int e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
    return f;
  }
  Int root = static_cast<Int>(std::sqrt(static_cast<double>(x))) + 2;
  auto sieve = shared_sieve(root);
  for (Int p = 2; p * p <= x && p <= sieve->limit(); ++p) {
    if (sieve->spf(p) != p) continue;
    if (x % p != 0) continue;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (x > 1) f.factors.emplace_back(x, 1);
  return f;
}

int exponent_gcd(Int x) {
  if (x < 2) throw DomainError("exponent_gcd: argument must be >= 2");
  int d = 0;
  for (const auto& [p, e] : factorize(x).factors) d = std::gcd(d, e);
  return d;
}

Int largest_prime_factor(Int x) {
  if (x < 2) throw DomainError("largest_prime_factor: argument must be >= 2");
  return factorize(x).factors.back().first;
}

Int smallest_prime_factor_of(Int m) {
  if (m < 2) throw DomainError("smallest_prime_factor_of: argument must be >= 2");
  return shared_sieve(m)->spf(m);
}

Int divisor_count(Int m) {
  if (m < 1) throw DomainError("divisor_count: argument must be >= 1");
  if (m == 1) return 1;
  Int count = 1;
  for (const auto& [p, e] : factorize(m).factors) count *= e + 1;
  return count;
}

bool is_prime(Int x) {
  if (x < 2) return false;
  return shared_sieve(x)->spf(x) == x;
}

bool is_perfect_mth_power(Int x, Int m) {
  if (x < 1 || m < 1) throw DomainError("is_perfect_mth_power: x >= 1, m >= 1");
  if (x == 1 || m == 1) return true;
  return exponent_gcd(x) % m == 0;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

}  // namespace graham
