#include "graham/lengths.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "graham/error.hpp"

namespace graham {

std::optional<std::pair<Int, Int>> closed_form(Int n, Int m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 0) throw DomainError("n must be >= 0");
  if (n <= 1) return std::make_pair(Int{1}, Int{1});
  Int d = exponent_gcd(n);
  Int shared = gcd(d, m);
  if (shared <= 1) return std::nullopt;
  return std::make_pair(m / shared, Int{1});
}

namespace {

// Exponent columns (mod m) of the support values, plus the index of the last
// support column touching each prime row; used to prune assignment search.
struct SupportSystem {
  Int m;
  std::vector<std::vector<Int>> columns;   // columns[i][row]
  std::vector<std::size_t> last_touch;     // per row
  std::size_t rows;
};

SupportSystem build_support_system(const std::vector<Int>& values, Int m) {
  std::map<Int, std::size_t> prime_row;
  std::vector<Factorization> facts;
  facts.reserve(values.size());
  for (Int v : values) {
    facts.push_back(factorize(v));
    for (const auto& [p, e] : facts.back().factors) prime_row.emplace(p, 0);
  }
  std::size_t r = 0;
  for (auto& [p, idx] : prime_row) idx = r++;

  SupportSystem sys;
  sys.m = m;
  sys.rows = r;
  sys.columns.assign(values.size(), std::vector<Int>(r, 0));
  // rows with no entry surviving the mod-m reduction never need a check
  sys.last_touch.assign(r, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (const auto& [p, e] : facts[i].factors) {
      std::size_t row = prime_row[p];
      sys.columns[i][row] = e % m;
      if (e % m != 0) sys.last_touch[row] = i;
    }
  }
  return sys;
}

// Depth-first enumeration of assignments r in [1, m-1]^|S| with zero exponent
// sum, minimizing the multiplicity sum. A prime row is checked as soon as its
// last contributing column is assigned.
struct AssignmentSearch {
  const SupportSystem& sys;
  Int best_total = -1;
  std::vector<Int> best_assignment;
  std::vector<Int> current;
  std::vector<Int> partial;

  explicit AssignmentSearch(const SupportSystem& s) : sys(s) {
    current.assign(sys.columns.size(), 0);
    partial.assign(sys.rows, 0);
  }

  void run(std::size_t col, Int spent) {
    if (col == sys.columns.size()) {
      if (best_total < 0 || spent < best_total) {
        best_total = spent;
        best_assignment = current;
      }
      return;
    }
    Int remaining = static_cast<Int>(sys.columns.size() - col);
    if (best_total >= 0 && spent + remaining >= best_total) return;
    for (Int r = 1; r < sys.m; ++r) {
      current[col] = r;
      bool ok = true;
      // add every contribution before judging, so the undo below is exact;
      // the balance check fires exactly once per row, at its last column
      for (std::size_t row = 0; row < sys.rows; ++row) {
        if (sys.columns[col][row] != 0) {
          partial[row] = (partial[row] + sys.columns[col][row] * r) % sys.m;
        }
        if (sys.last_touch[row] == col && partial[row] != 0) ok = false;
      }
      if (ok) run(col + 1, spent + r);
      for (std::size_t row = 0; row < sys.rows; ++row) {
        if (sys.columns[col][row] != 0) {
          partial[row] = ((partial[row] - sys.columns[col][row] * r) % sys.m + sys.m) % sys.m;
        }
      }
    }
  }
};

std::optional<std::pair<Int, std::vector<Int>>> solve_support(const std::vector<Int>& values,
                                                              Int m) {
  SupportSystem sys = build_support_system(values, m);
  AssignmentSearch search(sys);
  search.run(0, 0);
  if (search.best_total < 0) return std::nullopt;
  return std::make_pair(search.best_total, search.best_assignment);
}

// Interior window values that can appear with nonzero multiplicity in some
// solution; everything else can never be part of a support.
std::vector<Int> usable_middles(Int n, Int g, Int m) {
  std::vector<Int> middles;
  if (g - n < 2) return middles;
  ZmMatrix matrix = build_window_matrix(n, g, m);
  NullspaceBasis basis = nullspace(matrix);
  std::vector<bool> usable(static_cast<std::size_t>(matrix.cols), false);
  for (const auto& gen : basis.generators) {
    for (std::size_t i = 0; i < gen.size(); ++i) usable[i] = usable[i] || gen[i] != 0;
  }
  for (Int v = n + 1; v < g; ++v) {
    if (usable[static_cast<std::size_t>(v - n)]) middles.push_back(v);
  }
  return middles;
}

}  // namespace

LengthResult t_values(const GrahamResult& result, Int support_cap) {
  const Int n = result.n;
  const Int m = result.m;
  const Int g = result.g;
  if (support_cap < 2) throw DomainError("support_cap must be >= 2");

  LengthResult out;
  out.m = m;
  out.n = n;
  out.g = g;

  if (n <= 1) {
    out.t_total = 1;
    out.t_distinct = 1;
    out.optimal_witness = make_sequence(m, {{n, 1}});
    return out;
  }

  if (g == n) {
    auto closed = closed_form(n, m);
    assert(closed.has_value());
    out.t_total = closed->first;
    out.t_distinct = 1;
    out.optimal_witness = make_sequence(m, {{n, closed->first}});
    assert(!validate(out.optimal_witness));
    return out;
  }

  std::vector<Int> middles = usable_middles(n, g, m);

  Int t_distinct = -1;
  Int best_total = -1;
  std::vector<Int> best_support;
  std::vector<Int> best_assignment;

  std::vector<Int> support;
  // supports of size k always cost at least k, so sizes >= best_total are moot
  for (Int k = 2; k <= support_cap && (best_total < 0 || k < best_total); ++k) {
    Int picks = k - 2;
    if (picks > static_cast<Int>(middles.size())) break;
    std::vector<std::size_t> idx(static_cast<std::size_t>(picks));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    bool more = true;
    while (more) {
      support.clear();
      support.push_back(n);
      for (std::size_t i : idx) support.push_back(middles[i]);
      support.push_back(g);

      auto solved = solve_support(support, m);
      if (solved) {
        if (t_distinct < 0) t_distinct = k;
        if (best_total < 0 || solved->first < best_total) {
          best_total = solved->first;
          best_support = support;
          best_assignment = solved->second;
        }
      }

      // next combination of middles
      more = false;
      for (std::size_t i = idx.size(); i-- > 0;) {
        if (idx[i] + (idx.size() - i) < middles.size()) {
          ++idx[i];
          for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }

  if (t_distinct < 0) {
    throw SearchCapExceeded("t_values(" + std::to_string(n) + ", " + std::to_string(m) +
                            "): no support of size <= " + std::to_string(support_cap));
  }

  out.t_distinct = t_distinct;
  out.t_total = best_total;
  std::vector<std::pair<Int, Int>> terms;
  for (std::size_t i = 0; i < best_support.size(); ++i)
    terms.emplace_back(best_support[i], best_assignment[i]);
  out.optimal_witness = make_sequence(m, std::move(terms));
  assert(!validate(out.optimal_witness));
  assert(out.t_distinct <= out.t_total);
  return out;
}

LengthResult t_values(Int n, Int m, Int support_cap) {
  return t_values(compute_g(n, m), support_cap);
}

}  // namespace graham
