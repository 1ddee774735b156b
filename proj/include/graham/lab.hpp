#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graham/lengths.hpp"
#include "graham/solver.hpp"
#include "graham/store.hpp"

namespace graham {

// Caches per-(m, n) results in memory, optionally backed by an append-only
// store. Computation fans out across worker threads; the store is written by
// a single thread.
class Lab {
 public:
  Lab() = default;
  explicit Lab(Store* store) : store_(store) {}

  const GrahamResult& graham_at(Int n, Int m);
  Int g(Int n, Int m) { return graham_at(n, m).g; }

  // Records for n in [0, n_max], skipping already-stored cells.
  std::vector<SweepRecord> sweep(Int m, Int n_max, int jobs = 1, bool with_lengths = false,
                                 Int support_cap = 6);

 private:
  Store* store_ = nullptr;
  std::map<std::pair<Int, Int>, GrahamResult> cache_;
};

// Computed {n <= n_max : g_m(n) = 2n}, the conjectured characterization
// (primes with the two small exclusions, 0, 4 for odd m > 3, and the
// (2,6),(3,6),(6,6) cells), and their symmetric difference.
struct TwoNReport {
  Int m = 2;
  Int n_max = 0;
  std::vector<Int> computed;
  std::vector<Int> conjectured;
  std::vector<Int> only_computed;
  std::vector<Int> only_conjectured;
};

TwoNReport check_two_n(Lab& lab, Int m, Int n_max);

// Collision classes of g_m on [0, n_max]: value -> preimages, classes of
// size >= 2 only. k_m is the largest class size (1 when injective so far).
struct CollisionReport {
  Int m = 2;
  Int n_max = 0;
  std::map<Int, std::vector<Int>> classes;
  Int k_m = 1;
};

CollisionReport injectivity_report(Lab& lab, Int m, Int n_max);

// Values v <= v_max outside the primes with no preimage n <= v. Complete
// because g_m(n) >= n.
std::vector<Int> surjectivity_report(Lab& lab, Int m, Int v_max);

struct InverseCheckFailure {
  Int n = 0;
  Int gbar = 0;
  Int g_of_gbar = 0;
};

// Verifies g_m(gbar_m(n)) == n for every composite n in [4, n_max]; m prime.
std::vector<InverseCheckFailure> inverse_check(Lab& lab, Int m, Int n_max);

struct PSquaredFinding {
  Int p = 0;
  Int target = 0;            // 2^p
  std::vector<Int> matches;  // r != 2^p with g_{p^2}(r) = 2^p
};

std::vector<PSquaredFinding> conjecture_p_squared(Lab& lab, const std::vector<Int>& primes);

struct PowerCollisionScan {
  Int p = 0;
  Int k = 0;
  Int s = 0;
  Int target = 0;            // s^(p^k)
  std::vector<Int> matches;  // r != target with g_{p^(k+1)}(r) = target
};

// For every prime p, k >= 1 and non-p-th-power s with s^(p^k) <= cap,
// scans r <= s^(p^k) for extra preimages under m = p^(k+1).
std::vector<PowerCollisionScan> power_collision_scan(Lab& lab, Int cap);

struct SquarePlusOnePair {
  Int x = 0;
  Int n_low = 0;   // x^2 (x^2 + 1)
  Int n_high = 0;  // (x^2 + 1)^2
  Int g_low = 0;
  Int g_high = 0;
  bool verified = false;
};

// For x <= x_max with x^2 + 1 prime, checks
// g_{4t}(x^2 (x^2+1)) = (x^2+1)^2 = g_{4t}((x^2+1)^2).
std::vector<SquarePlusOnePair> square_plus_one_pairs(Lab& lab, Int t, Int x_max);

struct SelfridgeReport {
  Int n_max = 0;
  // n with P(n) > sqrt(2n) + 1 where g_2(n) != n + P(n)
  std::vector<Int> large_prime_failures;
  Int large_prime_checked = 0;
  // remaining n (outside {2,3,8,10,32}) violating g_2(n) <= n + 3/4(sqrt(8n+1)+1)
  std::vector<Int> bound_failures;
  Int bound_checked = 0;
  // primes p with g_2(p(p-1)) != p(p+1)
  std::vector<Int> descent_family_failures;
  Int descent_family_checked = 0;
  // primes p (2p+1 also prime) with g_2(p(2p-1)) != p(2p+2)
  std::vector<Int> sophie_family_failures;
  Int sophie_family_checked = 0;
};

SelfridgeReport selfridge_checks(Lab& lab, Int n_max);

}  // namespace graham
