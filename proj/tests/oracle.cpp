#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace oracle {

ExponentTable exponent_table(Int lo, Int hi) {
  ExponentTable table;
  std::map<Int, std::size_t> prime_index;
  std::vector<std::map<Int, Int>> raw(static_cast<std::size_t>(hi - lo + 1));
  for (Int v = lo; v <= hi; ++v) {
    Int x = v;
    for (Int p = 2; p * p <= x; ++p) {
      while (x % p == 0) {
        x /= p;
        ++raw[static_cast<std::size_t>(v - lo)][p];
      }
    }
    if (x > 1) ++raw[static_cast<std::size_t>(v - lo)][x];
    for (const auto& [p, e] : raw[static_cast<std::size_t>(v - lo)]) prime_index.emplace(p, 0);
  }
  std::size_t idx = 0;
  for (auto& [p, i] : prime_index) {
    i = idx++;
    table.primes.push_back(p);
  }
  table.columns.assign(raw.size(), std::vector<Int>(table.primes.size(), 0));
  for (std::size_t c = 0; c < raw.size(); ++c) {
    for (const auto& [p, e] : raw[c]) table.columns[c][prime_index[p]] = e;
  }
  return table;
}

namespace {

Int gcd_int(Int a, Int b) { return b == 0 ? a : gcd_int(b, a % b); }

// Multiplicities forced to zero: a prime dividing exactly one usable column
// with exponent coprime to m rules that column out; repeat until stable.
// Returns false if a mandatory column is ruled out.
bool forced_zero(const ExponentTable& table, Int m, const std::vector<std::size_t>& mandatory,
                 std::vector<bool>& usable) {
  usable.assign(table.columns.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t row = 0; row < table.primes.size(); ++row) {
      std::size_t count = 0, last = 0;
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (usable[c] && table.columns[c][row] % m != 0) {
          ++count;
          last = c;
        }
      }
      if (count == 1 && gcd_int(table.columns[last][row] % m, m) == 1) {
        for (std::size_t mc : mandatory) {
          if (mc == last) return false;
        }
        usable[last] = false;
        changed = true;
      }
    }
  }
  return true;
}

struct Dfs {
  const ExponentTable& table;
  Int m;
  std::vector<std::size_t> cols;      // usable columns, ascending
  std::vector<bool> must_be_nonzero;  // parallel to cols
  std::vector<Int> partial;
  std::vector<std::size_t> last_touch;  // per row: position in cols, or npos
  bool found = false;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Dfs(const ExponentTable& t, Int mod) : table(t), m(mod), partial(t.primes.size(), 0) {}

  void prepare() {
    last_touch.assign(table.primes.size(), npos);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t row = 0; row < table.primes.size(); ++row) {
        if (table.columns[cols[i]][row] % m != 0) last_touch[row] = i;
      }
    }
  }

  void run(std::size_t i) {
    if (found) return;
    if (i == cols.size()) {
      found = true;
      return;
    }
    Int from = must_be_nonzero[i] ? 1 : 0;
    for (Int r = from; r <= m - 1 && !found; ++r) {
      bool ok = true;
      for (std::size_t row = 0; row < table.primes.size(); ++row) {
        Int e = table.columns[cols[i]][row];
        if (e != 0) partial[row] += e * r;
        if (last_touch[row] == i && partial[row] % m != 0) ok = false;
      }
      if (ok) run(i + 1);
      for (std::size_t row = 0; row < table.primes.size(); ++row) {
        Int e = table.columns[cols[i]][row];
        if (e != 0) partial[row] -= e * r;
      }
    }
  }
};

bool feasible(const ExponentTable& table, Int m, bool require_end) {
  std::vector<std::size_t> mandatory = {0};
  if (require_end) mandatory.push_back(table.columns.size() - 1);
  std::vector<bool> usable;
  if (!forced_zero(table, m, mandatory, usable)) return false;

  Dfs dfs(table, m);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (usable[c]) {
      dfs.cols.push_back(c);
      bool required = c == 0 || (require_end && c + 1 == table.columns.size());
      dfs.must_be_nonzero.push_back(required);
    }
  }
  dfs.prepare();
  dfs.run(0);
  return dfs.found;
}

}  // namespace

bool window_feasible(Int lo, Int hi, Int m, bool require_end) {
  ExponentTable table = exponent_table(lo, hi);
  return feasible(table, m, require_end);
}

std::vector<std::vector<Int>> all_kernel_vectors(const std::vector<std::vector<Int>>& rows,
                                                 Int cols, Int m) {
  std::vector<std::vector<Int>> solutions;
  std::vector<Int> x(static_cast<std::size_t>(cols), 0);
  while (true) {
    bool good = true;
    for (const auto& row : rows) {
      Int sum = 0;
      for (Int c = 0; c < cols; ++c) sum += row[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
      if (sum % m != 0) {
        good = false;
        break;
      }
    }
    if (good) solutions.push_back(x);
    Int c = 0;
    while (c < cols) {
      if (++x[static_cast<std::size_t>(c)] < m) break;
      x[static_cast<std::size_t>(c)] = 0;
      ++c;
    }
    if (c == cols) break;
  }
  return solutions;
}

Int brute_g(Int n, Int m) {
  if (n <= 1) return n;
  for (Int s = n;; ++s) {
    if (window_feasible(n, s, m)) return s;
  }
}

}  // namespace oracle
