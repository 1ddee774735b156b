#pragma once

// Brute-force reference implementations used only by tests. These stay
// independent of the library's sieve/Howell machinery: exponents come from
// raw trial division and feasibility from depth-first enumeration of all
// multiplicity vectors.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// exponent vectors of [lo, hi] by trial division; primes returned sorted
struct ExponentTable {
  std::vector<Int> primes;
  std::vector<std::vector<Int>> columns;  // columns[value - lo][prime index]
};

ExponentTable exponent_table(Int lo, Int hi);

// Is there r in [0, m-1]^width with every prime exponent sum divisible by m,
// r[0] != 0, and (when require_end) r[width-1] != 0?
bool window_feasible(Int lo, Int hi, Int m, bool require_end = false);

// All solutions x in [0, m-1]^cols of A x == 0 (mod m), A given row-major.
std::vector<std::vector<Int>> all_kernel_vectors(const std::vector<std::vector<Int>>& rows,
                                                 Int cols, Int m);

// Least s >= n admitting a multiset from [n, s] that starts at n, uses each
// value at most m-1 times and multiplies to an m-th power.
Int brute_g(Int n, Int m);

}  // namespace oracle
