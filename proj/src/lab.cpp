#include "graham/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <thread>

#include "graham/error.hpp"

namespace graham {

const GrahamResult& Lab::graham_at(Int n, Int m) {
  auto key = std::make_pair(m, n);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  GrahamResult result = compute_g(n, m);
  return cache_.emplace(key, std::move(result)).first->second;
}

std::vector<SweepRecord> Lab::sweep(Int m, Int n_max, int jobs, bool with_lengths,
                                    Int support_cap) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  if (store_) store_->load();

  std::vector<SweepRecord> records(static_cast<std::size_t>(n_max) + 1);
  std::vector<char> fresh(static_cast<std::size_t>(n_max) + 1, 0);

  auto compute_cell = [&](Int n) {
    if (store_) {
      if (const SweepRecord* stored = store_->find(m, n)) {
        SweepRecord rec = *stored;
        if (with_lengths && !rec.t_total) {
          // fill lengths for the report only; the stored line stays as written
          GrahamResult from_store;
          from_store.m = m;
          from_store.n = n;
          from_store.g = rec.g;
          from_store.witness = parse_sequence(rec.witness, m);
          LengthResult lengths = t_values(from_store, support_cap);
          rec.t_total = lengths.t_total;
          rec.t_distinct = lengths.t_distinct;
        }
        records[static_cast<std::size_t>(n)] = std::move(rec);
        return;
      }
    }
    GrahamResult result = compute_g(n, m);
    SweepRecord record;
    record.m = m;
    record.n = n;
    record.g = result.g;
    record.witness = render(result.witness);
    if (with_lengths) {
      LengthResult lengths = t_values(result, support_cap);
      record.t_total = lengths.t_total;
      record.t_distinct = lengths.t_distinct;
    }
    record.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
    records[static_cast<std::size_t>(n)] = record;
    fresh[static_cast<std::size_t>(n)] = 1;
  };

  jobs = std::max(jobs, 1);
  if (jobs == 1) {
    for (Int n = 0; n <= n_max; ++n) compute_cell(n);
  } else {
    std::atomic<Int> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        while (true) {
          Int n = next.fetch_add(1);
          if (n > n_max) break;
          compute_cell(n);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  // single writer appends in n order; readers above never touched the store
  if (store_) {
    for (Int n = 0; n <= n_max; ++n) {
      if (fresh[static_cast<std::size_t>(n)]) store_->append(records[static_cast<std::size_t>(n)]);
    }
  }
  for (Int n = 0; n <= n_max; ++n) {
    const SweepRecord& r = records[static_cast<std::size_t>(n)];
    auto key = std::make_pair(m, n);
    if (cache_.find(key) == cache_.end()) {
      GrahamResult gres;
      gres.m = m;
      gres.n = n;
      gres.g = r.g;
      gres.witness = parse_sequence(r.witness, m);
      cache_.emplace(key, std::move(gres));
    }
  }
  return records;
}

TwoNReport check_two_n(Lab& lab, Int m, Int n_max) {
  TwoNReport report;
  report.m = m;
  report.n_max = n_max;
  for (Int n = 0; n <= n_max; ++n) {
    if (lab.g(n, m) == 2 * n) report.computed.push_back(n);
  }
  report.conjectured.push_back(0);
  for (Int n = 2; n <= n_max; ++n) {
    bool in_set = false;
    if (is_prime(n) && !(m == 2 && (n == 2 || n == 3))) in_set = true;
    if (n == 4 && m % 2 == 1 && m > 3) in_set = true;
    if (n == 6 && (m == 2 || m == 3 || m == 6)) in_set = true;
    if (in_set) report.conjectured.push_back(n);
  }
  std::set_difference(report.computed.begin(), report.computed.end(),
                      report.conjectured.begin(), report.conjectured.end(),
                      std::back_inserter(report.only_computed));
  std::set_difference(report.conjectured.begin(), report.conjectured.end(),
                      report.computed.begin(), report.computed.end(),
                      std::back_inserter(report.only_conjectured));
  return report;
}

CollisionReport injectivity_report(Lab& lab, Int m, Int n_max) {
  CollisionReport report;
  report.m = m;
  report.n_max = n_max;
  std::map<Int, std::vector<Int>> preimages;
  for (Int n = 0; n <= n_max; ++n) preimages[lab.g(n, m)].push_back(n);
  for (const auto& [value, ns] : preimages) {
    if (ns.size() >= 2) {
      report.classes.emplace(value, ns);
      report.k_m = std::max(report.k_m, static_cast<Int>(ns.size()));
    }
  }
  assert(report.k_m < divisor_count(m));
  return report;
}

std::vector<Int> surjectivity_report(Lab& lab, Int m, Int v_max) {
  std::set<Int> hit;
  for (Int n = 0; n <= v_max; ++n) {
    Int g = lab.g(n, m);
    if (g <= v_max) hit.insert(g);
  }
  std::vector<Int> missed;
  for (Int v = 0; v <= v_max; ++v) {
    if (!is_prime(v) && hit.count(v) == 0) missed.push_back(v);
  }
  return missed;
}

std::vector<InverseCheckFailure> inverse_check(Lab& lab, Int m, Int n_max) {
  if (!is_prime(m)) throw DomainError("inverse_check: m must be prime");
  std::vector<InverseCheckFailure> failures;
  for (Int n = 4; n <= n_max; ++n) {
    if (is_prime(n)) continue;
    ReverseResult reverse = compute_g_bar(n, m);
    Int forward = lab.g(reverse.k, m);
    if (forward != n) failures.push_back({n, reverse.k, forward});
  }
  return failures;
}

std::vector<PSquaredFinding> conjecture_p_squared(Lab& lab, const std::vector<Int>& primes) {
  std::vector<PSquaredFinding> findings;
  for (Int p : primes) {
    if (!is_prime(p)) throw DomainError("conjecture_p_squared: list must contain primes");
    if (p > 20) throw DomainError("conjecture_p_squared: 2^p window too large beyond p = 20");
    PSquaredFinding finding;
    finding.p = p;
    finding.target = Int{1} << p;
    Int m = p * p;
    for (Int r = 1; r <= finding.target; ++r) {
      if (r == finding.target) continue;
      if (lab.g(r, m) == finding.target) finding.matches.push_back(r);
    }
    findings.push_back(std::move(finding));
  }
  return findings;
}

std::vector<PowerCollisionScan> power_collision_scan(Lab& lab, Int cap) {
  std::vector<PowerCollisionScan> scans;
  for (Int p = 2; p <= cap; ++p) {
    if (!is_prime(p)) continue;
    for (Int k = 1;; ++k) {
      // pk = p^k; smallest target is 2^(p^k)
      Int pk = 1;
      for (Int i = 0; i < k; ++i) pk *= p;
      bool any = false;
      for (Int s = 2;; ++s) {
        if (is_perfect_mth_power(s, p)) continue;
        Int target = 1;
        bool overflow = false;
        for (Int i = 0; i < pk; ++i) {
          target *= s;
          if (target > cap) {
            overflow = true;
            break;
          }
        }
        if (overflow) break;
        any = true;
        PowerCollisionScan scan;
        scan.p = p;
        scan.k = k;
        scan.s = s;
        scan.target = target;
        Int m = pk * p;  // p^(k+1)
        for (Int r = 1; r <= target; ++r) {
          if (r == target) continue;
          if (lab.g(r, m) == target) scan.matches.push_back(r);
        }
        scans.push_back(std::move(scan));
      }
      if (!any) break;
    }
  }
  return scans;
}

std::vector<SquarePlusOnePair> square_plus_one_pairs(Lab& lab, Int t, Int x_max) {
  if (t < 1) throw DomainError("square_plus_one_pairs: t must be >= 1");
  std::vector<SquarePlusOnePair> pairs;
  Int m = 4 * t;
  for (Int x = 1; x <= x_max; ++x) {
    Int p = x * x + 1;
    if (!is_prime(p)) continue;
    SquarePlusOnePair pair;
    pair.x = x;
    pair.n_low = x * x * p;
    pair.n_high = p * p;
    pair.g_low = lab.g(pair.n_low, m);
    pair.g_high = lab.g(pair.n_high, m);
    pair.verified = pair.g_low == pair.n_high && pair.g_high == pair.n_high;
    pairs.push_back(pair);
  }
  return pairs;
}

SelfridgeReport selfridge_checks(Lab& lab, Int n_max) {
  SelfridgeReport report;
  report.n_max = n_max;
  for (Int n = 2; n <= n_max; ++n) {
    Int P = largest_prime_factor(n);
    Int g = lab.g(n, 2);
    if ((P - 1) * (P - 1) > 2 * n) {
      // P(n) > sqrt(2n) + 1
      ++report.large_prime_checked;
      if (g != n + P) report.large_prime_failures.push_back(n);
    } else if (n != 2 && n != 3 && n != 8 && n != 10 && n != 32) {
      // g <= n + 3/4 (sqrt(8n+1) + 1), squared out to stay in integers
      ++report.bound_checked;
      Int lhs = 4 * (g - n) - 3;
      if (lhs > 0 && lhs * lhs > 9 * (8 * n + 1)) report.bound_failures.push_back(n);
    }
  }
  for (Int p = 2; p * (p - 1) <= n_max; ++p) {
    if (!is_prime(p)) continue;
    ++report.descent_family_checked;
    if (lab.g(p * (p - 1), 2) != p * (p + 1)) report.descent_family_failures.push_back(p);
  }
  for (Int p = 2; p * (2 * p - 1) <= n_max; ++p) {
    if (!is_prime(p) || !is_prime(2 * p + 1)) continue;
    ++report.sophie_family_checked;
    if (lab.g(p * (2 * p - 1), 2) != p * (2 * p + 2)) report.sophie_family_failures.push_back(p);
  }
  return report;
}

}  // namespace graham
