#include "graham/bounds.hpp"

#include <mpfr.h>

#include <cassert>
#include <cmath>

#include "graham/error.hpp"
#include "graham/solver.hpp"

namespace graham {

AbBound ab_bound(Int n) {
  if (n < 4 || is_prime(n)) throw DomainError("ab_bound: n must be composite (>= 4)");
  Int best_a = 0;
  for (Int a = 2; a * a <= n; ++a) {
    if (n % a == 0) best_a = a;  // largest divisor <= sqrt(n) minimizes a + b
  }
  assert(best_a >= 2);
  AbBound out;
  out.a = best_a;
  out.b = n / best_a;
  out.bound = (out.a + 1) * (out.b + 1);
  out.witness = reduce_sequence(
      2, {{out.a * out.b, 1}, {out.a * (out.b + 1), 1}, {(out.a + 1) * out.b, 1}, {out.bound, 1}});
  assert(!validate(out.witness));
  return out;
}

namespace {

// Certified enclosure of C(m, k) at the given precision.
void threshold_enclosure(Int m, Int k, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
  mpfr_t q, base;
  mpfr_init2(q, prec);
  mpfr_init2(base, prec);

  // lower bound: q rounded down makes 1-q too big, so round the base up and
  // the final negative power down
  mpfr_set_si(q, k, MPFR_RNDD);
  mpfr_div_si(q, q, k + 1, MPFR_RNDD);
  mpfr_rootn_ui(q, q, static_cast<unsigned long>(m), MPFR_RNDD);
  mpfr_si_sub(base, 1, q, MPFR_RNDU);
  mpfr_pow_si(lo, base, -m, MPFR_RNDD);

  // upper bound: mirror image
  mpfr_set_si(q, k, MPFR_RNDU);
  mpfr_div_si(q, q, k + 1, MPFR_RNDU);
  mpfr_rootn_ui(q, q, static_cast<unsigned long>(m), MPFR_RNDU);
  mpfr_si_sub(base, 1, q, MPFR_RNDD);
  mpfr_pow_si(hi, base, -m, MPFR_RNDU);

  mpfr_clear(q);
  mpfr_clear(base);
}

mpq_class mpfr_to_mpq(const mpfr_t x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  mpq_class out(q);
  mpq_clear(q);
  return out;
}

mpz_class mpz_pow(const mpz_class& base, Int exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

bool exceeds_threshold(const mpz_class& r, Int m, Int k) {
  if (m < 2 || k < 1) throw DomainError("threshold: m >= 2, k >= 1");
  if (r <= 1) return false;
  // sign of (k+1)(x-1)^m - k*r at x = r^(1/m), which is positive iff r > C;
  // the value is nonzero because C is irrational, so some precision decides
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    mpfr_t x_lo, x_hi, f_lo, f_hi, rr;
    mpfr_init2(x_lo, prec);
    mpfr_init2(x_hi, prec);
    mpfr_init2(f_lo, prec);
    mpfr_init2(f_hi, prec);
    mpfr_init2(rr, prec);

    mpfr_set_z(rr, r.get_mpz_t(), MPFR_RNDD);
    mpfr_rootn_ui(x_lo, rr, static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_set_z(rr, r.get_mpz_t(), MPFR_RNDU);
    mpfr_rootn_ui(x_hi, rr, static_cast<unsigned long>(m), MPFR_RNDU);

    mpfr_sub_si(x_lo, x_lo, 1, MPFR_RNDD);
    mpfr_sub_si(x_hi, x_hi, 1, MPFR_RNDU);
    mpfr_pow_si(f_lo, x_lo, m, MPFR_RNDD);
    mpfr_pow_si(f_hi, x_hi, m, MPFR_RNDU);
    mpfr_mul_si(f_lo, f_lo, k + 1, MPFR_RNDD);
    mpfr_mul_si(f_hi, f_hi, k + 1, MPFR_RNDU);

    mpfr_set_z(rr, mpz_class(k * r).get_mpz_t(), MPFR_RNDU);
    mpfr_sub(f_lo, f_lo, rr, MPFR_RNDD);
    mpfr_set_z(rr, mpz_class(k * r).get_mpz_t(), MPFR_RNDD);
    mpfr_sub(f_hi, f_hi, rr, MPFR_RNDU);

    int lo_sign = mpfr_sgn(f_lo);
    int hi_sign = mpfr_sgn(f_hi);
    mpfr_clear(x_lo);
    mpfr_clear(x_hi);
    mpfr_clear(f_lo);
    mpfr_clear(f_hi);
    mpfr_clear(rr);

    if (lo_sign > 0) return true;
    if (hi_sign < 0) return false;
  }
}

ThresholdReport threshold(Int m, Int k) {
  if (m < 2 || k < 1) throw DomainError("threshold: m >= 2, k >= 1");
  ThresholdReport report;
  report.m = m;
  report.k = k;

  mpz_class floor_c;
  for (mpfr_prec_t prec = 192;; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    threshold_enclosure(m, k, prec, lo, hi);

    mpz_class floor_lo, floor_hi;
    mpfr_get_z(floor_lo.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(floor_hi.get_mpz_t(), hi, MPFR_RNDD);

    // enclosure width below 2^-64 of an ulp-scale gap and an unambiguous floor
    mpfr_t width;
    mpfr_init2(width, prec);
    mpfr_sub(width, hi, lo, MPFR_RNDU);
    bool narrow = mpfr_zero_p(width) ||
                  (mpfr_get_exp(width) + 64 < mpfr_get_exp(hi));
    mpfr_clear(width);

    if (narrow && floor_lo == floor_hi) {
      report.c_lo = mpfr_to_mpq(lo);
      report.c_hi = mpfr_to_mpq(hi);
      char* s = nullptr;
      mpfr_asprintf(&s, "%.30Rg", hi);
      report.c_value = s;
      mpfr_free_str(s);
      floor_c = floor_lo;
      mpfr_clear(lo);
      mpfr_clear(hi);
      break;
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
  }

  report.integer_threshold = floor_c + 1;

  // certify T-1 <= C < T exactly
  assert(exceeds_threshold(report.integer_threshold, m, k));
  assert(!exceeds_threshold(report.integer_threshold - 1, m, k));

  // at the boundary the bracketing powers promised by the bound must exist:
  // k*(a+1)^m < (k+1)*T with (a+1)^m > T, and (k+1)*b^m > k*T with b^m < T
  const mpz_class& T = report.integer_threshold;
  mpz_class a;
  mpz_root(a.get_mpz_t(), T.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_class up = mpz_pow(a + 1, m);
  assert(up > T && k * up < (k + 1) * T);
  mpz_class b = a;
  if (mpz_pow(b, m) >= T) b -= 1;
  assert(mpz_pow(b, m) < T && (k + 1) * mpz_pow(b, m) > k * T);

  return report;
}

std::optional<MProductSequence> interval_power_witness(Int n, Int m, Int k) {
  if (m < 2 || k < 1 || n < 1) throw DomainError("interval_power_witness: n >= 1, m >= 2, k >= 1");
  if (n % k != 0) throw DomainError("interval_power_witness: n must be a multiple of k");
  Int r = n / k;

  // smallest l1 with l1^m > r, largest l2 with l2^m < r
  mpz_class rz(static_cast<long>(r)), l1z, l2z;
  mpz_root(l1z.get_mpz_t(), rz.get_mpz_t(), static_cast<unsigned long>(m));
  l2z = l1z;
  if (mpz_pow(l2z, m) >= rz) l2z -= 1;
  l1z += 1;
  mpz_class p1 = mpz_pow(l1z, m);
  mpz_class p2 = mpz_pow(l2z, m);

  // need r < l1^m < (k+1)r/k and kr/(k+1) < l2^m < r
  if (l2z < 1) return std::nullopt;
  if (!(k * p1 < (k + 1) * rz)) return std::nullopt;
  if (!((k + 1) * p2 > k * rz)) return std::nullopt;

  Int t1 = k * static_cast<Int>(p1.get_si());
  Int t2 = (k + 1) * static_cast<Int>(p2.get_si());
  MProductSequence witness = reduce_sequence(
      m, {{k * r, 1}, {t1, m - 1}, {t2, 1}, {(k + 1) * r, m - 1}});
  assert(!validate(witness));
  assert(witness.min_value() == n);
  assert(witness.max_value() == (k + 1) * r);
  return witness;
}

namespace {

MProductSequence checked(MProductSequence seq, Int n, Int two_n_cap) {
  assert(!validate(seq));
  assert(seq.min_value() == n);
  assert(seq.max_value() <= two_n_cap);
  return seq;
}

// n repeated m/gcd(d, m) times; valid whenever n is a fixed point.
MProductSequence fixed_point_witness(Int n, Int m) {
  Int d = exponent_gcd(n);
  Int shared = gcd(d, m);
  assert(shared > 1);
  return make_sequence(m, {{n, m / shared}});
}

MProductSequence two_n_witness_m2(Int n) {
  if (is_fixed_point(n, 2)) return checked(fixed_point_witness(n, 2), n, 2 * n);
  if (is_prime(n)) {
    // p * 2k^2 * 2p is a square for the unique 2k^2 in (p, 2p)
    for (Int k = 1; 2 * k * k < 2 * n; ++k) {
      if (2 * k * k > n) {
        return checked(make_sequence(2, {{n, 1}, {2 * k * k, 1}, {2 * n, 1}}), n, 2 * n);
      }
    }
    throw UnsupportedCase("no 2k^2 strictly between n and 2n");
  }
  if (n == 6) return checked(make_sequence(2, {{6, 1}, {8, 1}, {12, 1}}), 6, 12);
  return checked(ab_bound(n).witness, n, 2 * n);
}

MProductSequence two_n_witness_m3(Int n) {
  switch (n) {
    case 2: return checked(make_sequence(3, {{2, 1}, {4, 1}}), 2, 4);
    case 3: return checked(make_sequence(3, {{3, 2}, {4, 1}, {6, 1}}), 3, 6);
    case 5: return checked(make_sequence(3, {{5, 1}, {6, 1}, {9, 1}, {10, 2}}), 5, 10);
    case 6: return checked(make_sequence(3, {{6, 2}, {9, 1}, {12, 2}}), 6, 12);
    case 7: return checked(make_sequence(3, {{7, 2}, {9, 1}, {12, 1}, {14, 1}}), 7, 14);
    default: break;
  }
  if (is_fixed_point(n, 3)) return checked(fixed_point_witness(n, 3), n, 2 * n);
  assert(n >= 9);
  if (n <= 16) return checked(reduce_sequence(3, {{n, 1}, {16, 1}, {2 * n, 2}}), n, 2 * n);
  if (n <= 31) return checked(reduce_sequence(3, {{n, 2}, {32, 1}, {2 * n, 1}}), n, 2 * n);
  if (n <= 54) return checked(reduce_sequence(3, {{n, 1}, {54, 1}, {2 * n, 2}}), n, 2 * n);
  if (n <= 107) return checked(reduce_sequence(3, {{n, 2}, {108, 1}, {2 * n, 1}}), n, 2 * n);
  if (n <= 128) return checked(reduce_sequence(3, {{n, 1}, {128, 1}, {2 * n, 2}}), n, 2 * n);
  auto witness = interval_power_witness(n, 3, 1);  // guaranteed above C(3,1) < 114
  assert(witness.has_value());
  return checked(*witness, n, 2 * n);
}

// Chains through 3*2^(k-1), 3*2^(k-2), 27*2^(k-4), 27*2^(k-5) for the
// k == 0 (mod p) case of odd prime p >= 5.
MProductSequence two_n_witness_prime(Int n, Int p) {
  if (is_fixed_point(n, p)) return checked(fixed_point_witness(n, p), n, 2 * n);

  // powers of two: pick the chain by k mod p
  if ((n & (n - 1)) == 0) {
    Int k = 0;
    while ((Int{1} << (k + 1)) <= n) ++k;
    Int rem = k % p;
    assert(rem != 0);  // k == 0 mod p is a fixed point, handled above
    if (rem == p - 1) {
      // 2^k < 9*2^(k-3) < 3*2^(k-1) < 27*2^(k-4) < 2^(k+1), with k >= p - 1 >= 4
      assert(k >= 4);
      return checked(reduce_sequence(p, {{n, 1},
                                         {9 * (Int{1} << (k - 3)), 1},
                                         {3 * (Int{1} << (k - 1)), p - 5},
                                         {27 * (Int{1} << (k - 4)), 1}}),
                     n, 2 * n);
    }
    return checked(reduce_sequence(p, {{n, rem + 1}, {2 * n, p - rem}}), n, 2 * n);
  }

  // unique power of two strictly inside (n, 2n)
  Int k = 1;
  while ((Int{1} << k) <= n) ++k;
  Int pow2 = Int{1} << k;
  assert(n < pow2 && pow2 < 2 * n);

  Int rem = k % p;
  if (rem != 0) {
    return checked(reduce_sequence(p, {{n, rem}, {pow2, 1}, {2 * n, p - rem}}), n, 2 * n);
  }

  assert(k >= p);
  Int u1 = 3 * (Int{1} << (k - 1));
  Int u2 = 3 * (Int{1} << (k - 2));
  Int w1 = 27 * (Int{1} << (k - 4));
  Int w2 = 27 * (Int{1} << (k - 5));
  Int a = p % 3;
  assert(a == 1 || a == 2);
  auto to_residue = [&](Int x) { return ((x % p) + p) % p; };

  bool u1_fits = u1 < 2 * n;  // then n < u1 automatically
  bool w1_fits = w1 < 2 * n;
  assert(!(!u1_fits && w1_fits));  // u1 < w1, so this combination cannot occur

  if (u1_fits && w1_fits) {
    // b = (a - p)/3 mod p
    Int b = to_residue((a - p) / 3);
    assert(b != 0);
    return checked(reduce_sequence(p, {{n, b}, {u1, a}, {w1, (p - a) / 3}, {2 * n, p - b}}),
                   n, 2 * n);
  }
  if (u1_fits) {
    // b = (2a - 2p)/3 mod p, pairing u1 with w2
    assert(n <= w2);
    Int b = to_residue(2 * (a - p) / 3);
    assert(b != 0 && to_residue(b + (p - a) / 3) != 0);
    return checked(reduce_sequence(p, {{n, b}, {w2, (p - a) / 3}, {u1, a}, {2 * n, p - b}}),
                   n, 2 * n);
  }
  // b = -(a + 2p)/3 mod p, pairing u2 with w2
  assert(n <= u2 && w2 < 2 * n);
  Int b = to_residue(-(a + 2 * p) / 3);
  assert(b != 0 && to_residue(b + a) != 0);
  return checked(reduce_sequence(p, {{n, b}, {u2, a}, {w2, (p - a) / 3}, {2 * n, p - b}}),
                 n, 2 * n);
}

}  // namespace

MProductSequence constructive_two_n_witness(Int n, Int m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 2) throw UnsupportedCase("constructive_two_n_witness: n must be >= 2");
  if ((m == 2 && (n == 2 || n == 3)) || (m == 3 && n == 4))
    throw UnsupportedCase("g exceeds 2n for this pair");

  if (is_fixed_point(n, m)) return checked(fixed_point_witness(n, m), n, 2 * n);
  if (m == 2) return two_n_witness_m2(n);
  if (m == 3) return two_n_witness_m3(n);
  if (is_prime(m)) return two_n_witness_prime(n, m);

  // composite m: small n directly, otherwise scale the witness for the
  // smallest prime factor (each multiplicity copied m/l times stays below m)
  if (n == 2) {
    if (m % 2 == 0) return checked(make_sequence(m, {{2, 2}, {4, (m - 2) / 2}}), 2, 4);
    return checked(make_sequence(m, {{2, 1}, {4, (m - 1) / 2}}), 2, 4);
  }
  if (n == 3) return checked(make_sequence(m, {{3, 2}, {4, 1}, {6, m - 2}}), 3, 6);
  if (n == 4) {
    assert(m % 2 == 1 && m > 3);  // even m makes 4 a fixed point
    return checked(make_sequence(m, {{4, (m - 3) / 2}, {8, 1}}), 4, 8);
  }
  Int l = smallest_prime_factor_of(m);
  MProductSequence base = constructive_two_n_witness(n, l);
  std::vector<std::pair<Int, Int>> scaled;
  for (const auto& [value, count] : base.terms) scaled.emplace_back(value, count * (m / l));
  return checked(make_sequence(m, std::move(scaled)), n, 2 * n);
}

}  // namespace graham
