#pragma once

#include <optional>
#include <utility>

#include "graham/solver.hpp"

namespace graham {

// Minimum length (t_total) and minimum distinct length (t_distinct) over all
// sequences from n to g. t_distinct <= t_total always, and t_distinct == 1
// exactly when g == n.
struct LengthResult {
  Int m = 2;
  Int n = 0;
  Int g = 0;
  Int t_total = 1;
  Int t_distinct = 1;
  MProductSequence optimal_witness;  // attains t_total
};

// (m / gcd(d, m), 1) when n is a d-th power with gcd(d, m) > 1 (the fixed
// point case, where the shortest sequence is n repeated); empty otherwise.
// n in {0, 1} yields (1, 1).
std::optional<std::pair<Int, Int>> closed_form(Int n, Int m);

// Exhaustive search over supports S with {n, g} in S, by increasing size:
// the first feasible size is t_distinct; t_total minimizes the multiplicity
// sum over every feasible support of size <= support_cap. Support sizes at
// or beyond the best total found so far cannot improve it and are skipped.
LengthResult t_values(const GrahamResult& result, Int support_cap = 6);
LengthResult t_values(Int n, Int m, Int support_cap = 6);

}  // namespace graham
