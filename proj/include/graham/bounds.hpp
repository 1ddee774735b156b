#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "graham/sequence.hpp"

namespace graham {

// Divisor-pair bound for squares: n = a*b with 1 < a <= b < n minimizing
// (a+1)(b+1), plus the witness {ab, a(b+1), (a+1)b, (a+1)(b+1)} reduced
// mod 2 (the a == b case collapses to {a^2, (a+1)^2}).
struct AbBound {
  Int a = 0;
  Int b = 0;
  Int bound = 0;
  MProductSequence witness;
};

AbBound ab_bound(Int n);

// C(m, k) = (1 - (k/(k+1))^(1/m))^(-m), the radius beyond which the two
// bracketing m-th powers needed by interval_power_witness always exist.
// c_lo/c_hi is a certified enclosure (directed rounding, >= 64 fractional
// bits); integer_threshold is the least integer above C, certified by exact
// integer comparisons at the boundary.
struct ThresholdReport {
  Int m = 2;
  Int k = 1;
  mpq_class c_lo;
  mpq_class c_hi;
  std::string c_value;  // decimal rendering of the enclosure midpoint
  mpz_class integer_threshold;
};

ThresholdReport threshold(Int m, Int k);

// True iff r > C(m, k); exact (C is irrational, so equality cannot occur).
bool exceeds_threshold(const mpz_class& r, Int m, Int k);

// Four-block witness kr, t1^{m-1}, t2, ((k+1)r)^{m-1} built from m-th powers
// t1/k in (r, (k+1)r/k) and t2/(k+1) in (kr/(k+1), r); empty when either
// power is missing. n must equal k*r.
std::optional<MProductSequence> interval_power_witness(Int n, Int m, Int k = 1);

// A validated sequence from n with maximum at most 2n, built by case
// dispatch: divisor pairs and square brackets for m = 2, fixed windows for
// m = 3, power-of-two chains and the 3*2^j / 27*2^j cases for prime m >= 5,
// and multiplicity scaling through the smallest prime factor for composite
// m. Throws UnsupportedCase for (2,2), (2,3), (3,4) and n < 2.
MProductSequence constructive_two_n_witness(Int n, Int m);

}  // namespace graham
