#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graham/arith.hpp"

namespace graham {

// Sorted multiset of positive integers, each appearing 1..m-1 times, whose
// product is a perfect m-th power. Stored as (value, multiplicity) pairs with
// values strictly increasing. The single multiset {0^k} is allowed as the
// degenerate zero sequence.
struct MProductSequence {
  Int modulus = 2;
  std::vector<std::pair<Int, Int>> terms;

  bool empty() const { return terms.empty(); }
  Int min_value() const { return terms.front().first; }
  Int max_value() const { return terms.back().first; }
  Int min_multiplicity() const { return terms.front().second; }
  Int max_multiplicity() const { return terms.back().second; }
  Int total_length() const;
  Int distinct_length() const { return static_cast<Int>(terms.size()); }
  Int multiplicity_of(Int value) const;
};

MProductSequence make_sequence(Int modulus, std::vector<std::pair<Int, Int>> terms);

// Builds a sequence from possibly unsorted, possibly repeated (value, count)
// pairs: counts of equal values are summed and reduced mod m, zeros dropped.
MProductSequence reduce_sequence(Int modulus, std::vector<std::pair<Int, Int>> terms);

enum class SequenceViolation {
  UnsortedTerms,
  MultiplicityExceeded,
  NotMthPower,
};

struct ViolationReport {
  SequenceViolation kind;
  std::string detail;
};

// nullopt when both invariants hold; the report names the first failure.
// The m-th-power check sums exponent vectors and never forms the product.
std::optional<ViolationReport> validate(const MProductSequence& seq);

// Multiset union of two sequences with the same modulus, multiplicities
// reduced mod m. Requires min(A) < min(B) and max(A) = max(B); the result
// keeps min(A) with its multiplicity and its maximum is at most max(A).
MProductSequence combine(const MProductSequence& a, const MProductSequence& b);

// Union of A with k copies of B (same preconditions as combine); the
// multiplicity of max(A) in the result is (s_t + k v) mod m.
MProductSequence combine_power(const MProductSequence& a, const MProductSequence& b, Int k);

// Removes every term that is a perfect m-th power. Requires min(seq) not to
// be one; the result still validates and keeps the same minimum.
MProductSequence strip_mth_powers(const MProductSequence& seq);

// "2·3·6", "18^{2}·24" style rendering; the zero sequence renders as "0".
std::string render(const MProductSequence& seq);

// Inverse of render; also accepts '*' and 'x' separators and bare "V^K".
MProductSequence parse_sequence(const std::string& text, Int modulus);

}  // namespace graham
