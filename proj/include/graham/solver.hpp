#pragma once

#include <optional>

#include "graham/sequence.hpp"
#include "graham/zmod.hpp"

namespace graham {

// g = least window end admitting a valid sequence from n; the witness
// validates, starts at n and ends at g.
struct GrahamResult {
  Int m = 2;
  Int n = 0;
  Int g = 0;
  MProductSequence witness;
};

// k = greatest window start admitting a valid sequence ending at n.
struct ReverseResult {
  Int m = 2;
  Int n = 0;
  Int k = 0;
  MProductSequence witness;
};

// True iff g_m(n) == n: n is 0, 1, or a d-th power with gcd(d, m) > 1.
bool is_fixed_point(Int n, Int m);

// max(n + p) over primes p with p^j || n and gcd(j, m) == 1, or n when no
// such prime exists. Every sequence from n must reach this far.
Int lower_bound(Int n, Int m);

// Searches window ends s = lower_bound(n, m), ... until the exponent system
// over [n, s] admits a solution with nonzero multiplicity at n. The default
// cap 4n + 64 is far beyond the proven 2n bound; hitting it means a bug.
GrahamResult compute_g(Int n, Int m, std::optional<Int> s_cap = std::nullopt);

// Descends window starts k = n, n-1, ... until [k, n] admits a solution with
// nonzero multiplicities at k and n. Rejects prime n (no sequence can end at
// a prime). floor_cap defaults to 1.
ReverseResult compute_g_bar(Int n, Int m, std::optional<Int> floor_cap = std::nullopt);

// Witness extraction shared with the length search.
MProductSequence sequence_from_witness(const Witness& witness, Int m);

}  // namespace graham
