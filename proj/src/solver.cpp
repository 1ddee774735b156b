#include "graham/solver.hpp"

#include <cassert>

#include "graham/error.hpp"

namespace graham {

bool is_fixed_point(Int n, Int m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 0) throw DomainError("n must be >= 0");
  if (n <= 1) return true;
  return gcd(exponent_gcd(n), m) > 1;
}

Int lower_bound(Int n, Int m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 2) throw DomainError("lower_bound: n must be >= 2");
  Int best = n;
  for (const auto& [p, e] : factorize(n).factors) {
    if (gcd(static_cast<Int>(e), m) == 1) best = std::max(best, n + p);
  }
  return best;
}

MProductSequence sequence_from_witness(const Witness& witness, Int m) {
  std::vector<std::pair<Int, Int>> terms;
  for (std::size_t i = 0; i < witness.multiplicities.size(); ++i) {
    Int count = witness.multiplicities[i];
    if (count != 0) terms.emplace_back(witness.window_start + static_cast<Int>(i), count);
  }
  return make_sequence(m, std::move(terms));
}

namespace {

GrahamResult trivial_result(Int n, Int m) {
  GrahamResult result;
  result.m = m;
  result.n = n;
  result.g = n;
  result.witness = make_sequence(m, {{n, 1}});
  return result;
}

}  // namespace

GrahamResult compute_g(Int n, Int m, std::optional<Int> s_cap) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 0) throw DomainError("n must be >= 0");
  if (n <= 1) return trivial_result(n, m);  // 0 and 1 never enter the matrix machinery

  Int cap = s_cap.value_or(4 * n + 64);
  for (Int s = lower_bound(n, m); s <= cap; ++s) {
    ZmMatrix matrix = build_window_matrix(n, s, m);
    std::optional<Witness> witness = solve_with_nonzero_coords(matrix, {0});
    if (!witness) continue;
    GrahamResult result;
    result.m = m;
    result.n = n;
    result.g = s;
    result.witness = sequence_from_witness(*witness, m);
    assert(!validate(result.witness));
    assert(result.witness.min_value() == n);
    // minimality of s forces the witness to use s itself
    assert(result.witness.max_value() == s);
    return result;
  }
  throw SearchCapExceeded("compute_g(" + std::to_string(n) + ", " + std::to_string(m) +
                          "): no window end up to " + std::to_string(cap));
}

ReverseResult compute_g_bar(Int n, Int m, std::optional<Int> floor_cap) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 1) throw DomainError("compute_g_bar: n must be >= 1");
  if (is_prime(n)) throw DomainError("compute_g_bar: no sequence can end at a prime");

  Int floor = floor_cap.value_or(1);
  for (Int k = n; k >= floor; --k) {
    ZmMatrix matrix = build_window_matrix(k, n, m);
    std::vector<Int> required = {0};
    if (k < n) required.push_back(n - k);
    std::optional<Witness> witness = solve_with_nonzero_coords(matrix, required);
    if (!witness) continue;
    ReverseResult result;
    result.m = m;
    result.n = n;
    result.k = k;
    result.witness = sequence_from_witness(*witness, m);
    assert(!validate(result.witness));
    assert(result.witness.min_value() == k);
    assert(result.witness.max_value() == n);
    return result;
  }
  throw NoSequence("compute_g_bar(" + std::to_string(n) + ", " + std::to_string(m) +
                   "): no window start down to " + std::to_string(floor));
}

}  // namespace graham
