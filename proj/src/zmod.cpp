#include "graham/zmod.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "graham/error.hpp"

namespace graham {

namespace {

// Moduli stay far below this at desk scale; the cap keeps every product of
// two residues inside int64 without widening.
constexpr Int kModulusCap = Int{1} << 20;

void check_modulus(Int m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (m > kModulusCap) throw DomainError("modulus too large");
}

// extended gcd: returns g and coefficients with s*a + t*b == g
Int ext_gcd(Int a, Int b, Int& s, Int& t) {
  if (b == 0) {
    s = 1;
    t = 0;
    return a;
  }
  Int s1 = 0, t1 = 0;
  Int g = ext_gcd(b, a % b, s1, t1);
  s = t1;
  t = s1 - (a / b) * t1;
  return g;
}

Int mod_inverse(Int a, Int m) {
  Int s = 0, t = 0;
  Int g = ext_gcd(((a % m) + m) % m, m, s, t);
  assert(g == 1);
  return ((s % m) + m) % m;
}

using Row = std::vector<Int>;

// Unimodular 2x2 transform making v[j] == 0 and u[j] == gcd(u[j], v[j]).
void gcd_combine(Row& u, Row& v, std::size_t j, Int m) {
  Int a = u[j], b = v[j];
  Int s = 0, t = 0;
  Int g = ext_gcd(a, b, s, t);
  s = ((s % m) + m) % m;
  t = ((t % m) + m) % m;
  Int va = ((a / g) % m + m) % m;
  Int vb = ((b / g) % m + m) % m;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Int ui = u[i], vi = v[i];
    u[i] = (s * ui + t * vi) % m;
    v[i] = ((va * vi - vb * ui) % m + m) % m;
  }
}

// Scale the row by a unit so the leading entry becomes gcd(entry, m).
void normalize_pivot(Row& row, std::size_t j, Int m) {
  Int a = row[j];
  Int d = std::gcd(a, m);
  if (a == d) return;
  Int md = m / d;
  Int u = mod_inverse((a / d) % md, md);
  while (std::gcd(u, m) != 1) u += md;
  for (Int& x : row) x = (x * u) % m;
}

bool all_zero(const Row& row) {
  return std::all_of(row.begin(), row.end(), [](Int x) { return x == 0; });
}

struct Pivot {
  std::size_t row;
  std::size_t col;
  Int value;
};

// In-place Howell elimination. Annihilator rows (m/d times a pivot row with
// pivot d > 1) are appended to the pool so the row span keeps the property
// that vectors with leading zeros are spanned by the later rows.
std::vector<Pivot> howell_eliminate(std::vector<Row>& rows, Int m, std::size_t cols) {
  std::vector<Pivot> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][j] == 0) continue;
      if (piv == rows.size()) {
        piv = i;
      } else {
        gcd_combine(rows[piv], rows[i], j, m);
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    normalize_pivot(rows[r], j, m);
    Int d = rows[r][j];
    if (d != 1) {
      Row ann(rows[r]);
      Int f = m / d;
      for (Int& x : ann) x = (x * f) % m;
      assert(ann[j] == 0);
      if (!all_zero(ann)) rows.push_back(std::move(ann));
    }
    pivots.push_back({r, j, d});
    ++r;
  }
  // all material below r has been absorbed into pivots
  for (std::size_t i = r; i < rows.size(); ++i) assert(all_zero(rows[i]));
  rows.resize(r);
  // reduce entries above each pivot into [0, pivot)
  for (const Pivot& p : pivots) {
    for (std::size_t i = 0; i < p.row; ++i) {
      Int q = rows[i][p.col] / p.value;
      if (q == 0) continue;
      for (std::size_t c = p.col; c < cols; ++c) {
        rows[i][c] = ((rows[i][c] - q * rows[p.row][c]) % m + m) % m;
      }
    }
  }
  return pivots;
}

std::vector<Row> matrix_rows(const ZmMatrix& matrix) {
  std::vector<Row> rows(static_cast<std::size_t>(matrix.rows));
  for (Int r = 0; r < matrix.rows; ++r) {
    rows[static_cast<std::size_t>(r)].assign(
        matrix.entries.begin() + static_cast<std::ptrdiff_t>(r * matrix.cols),
        matrix.entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * matrix.cols));
  }
  return rows;
}

}  // namespace

ZmMatrix make_zm_matrix(Int modulus, Int rows, Int cols, std::vector<Int> entries) {
  check_modulus(modulus);
  if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows * cols))
    throw DomainError("make_zm_matrix: shape mismatch");
  for (Int& x : entries) x = ((x % modulus) + modulus) % modulus;
  ZmMatrix m;
  m.modulus = modulus;
  m.rows = rows;
  m.cols = cols;
  m.entries = std::move(entries);
  return m;
}

ZmMatrix build_window_matrix(Int n, Int s, Int m) {
  check_modulus(m);
  if (n < 1) throw DomainError("build_window_matrix: window must start at n >= 1");
  if (s < n) throw DomainError("build_window_matrix: window end below start");

  Int cols = s - n + 1;
  std::map<Int, Int> prime_row;  // prime -> row index, primes ascending
  std::vector<Factorization> facts;
  facts.reserve(static_cast<std::size_t>(cols));
  for (Int a = n; a <= s; ++a) {
    facts.push_back(factorize(a));
    for (const auto& [p, e] : facts.back().factors) prime_row.emplace(p, 0);
  }
  Int r = 0;
  for (auto& [p, idx] : prime_row) idx = r++;

  ZmMatrix matrix;
  matrix.modulus = m;
  matrix.rows = r;
  matrix.cols = cols;
  matrix.entries.assign(static_cast<std::size_t>(r * cols), 0);
  matrix.row_primes.resize(static_cast<std::size_t>(r));
  for (const auto& [p, idx] : prime_row) matrix.row_primes[static_cast<std::size_t>(idx)] = p;
  matrix.col_values.resize(static_cast<std::size_t>(cols));
  for (Int c = 0; c < cols; ++c) {
    matrix.col_values[static_cast<std::size_t>(c)] = n + c;
    for (const auto& [p, e] : facts[static_cast<std::size_t>(c)].factors) {
      matrix.at(prime_row[p], c) = e % m;
    }
  }
  return matrix;
}

ZmMatrix howell_form(const ZmMatrix& matrix) {
  std::vector<Row> rows = matrix_rows(matrix);
  howell_eliminate(rows, matrix.modulus, static_cast<std::size_t>(matrix.cols));
  ZmMatrix out;
  out.modulus = matrix.modulus;
  out.rows = static_cast<Int>(rows.size());
  out.cols = matrix.cols;
  out.col_values = matrix.col_values;
  out.entries.reserve(rows.size() * static_cast<std::size_t>(matrix.cols));
  for (const Row& row : rows) out.entries.insert(out.entries.end(), row.begin(), row.end());
  return out;
}

NullspaceBasis nullspace(const ZmMatrix& matrix) {
  const Int m = matrix.modulus;
  const std::size_t s = static_cast<std::size_t>(matrix.rows);
  const std::size_t w = static_cast<std::size_t>(matrix.cols);

  // Rows of [A^T | I]: Z/m-combinations are (A x, x); Howell rows whose
  // first s entries vanish therefore generate exactly the kernel.
  std::vector<Row> rows(w, Row(s + w, 0));
  for (std::size_t c = 0; c < w; ++c) {
    for (std::size_t r = 0; r < s; ++r) {
      rows[c][r] = matrix.at(static_cast<Int>(r), static_cast<Int>(c));
    }
    rows[c][s + c] = 1;
  }
  howell_eliminate(rows, m, s + w);

  NullspaceBasis basis;
  basis.modulus = m;
  basis.cols = matrix.cols;
  for (const Row& row : rows) {
    bool lead_zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(s),
                                 [](Int x) { return x == 0; });
    if (lead_zero) basis.generators.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(s), row.end());
  }
  return basis;
}

bool in_row_span(const ZmMatrix& howell, const std::vector<Int>& v) {
  if (static_cast<Int>(v.size()) != howell.cols) throw DomainError("in_row_span: size mismatch");
  const Int m = howell.modulus;
  Row rem(v);
  for (Int& x : rem) x = ((x % m) + m) % m;
  Int row = 0;
  for (Int col = 0; col < howell.cols && row < howell.rows; ++col) {
    if (howell.at(row, col) == 0) continue;
    Int d = howell.at(row, col);
    if (rem[static_cast<std::size_t>(col)] % d != 0) return false;
    Int q = rem[static_cast<std::size_t>(col)] / d;
    if (q != 0) {
      for (Int c = col; c < howell.cols; ++c) {
        std::size_t i = static_cast<std::size_t>(c);
        rem[i] = ((rem[i] - q * howell.at(row, c)) % m + m) % m;
      }
    }
    ++row;
  }
  return all_zero(rem);
}

namespace {

// Columns that no solution can use: a row with a single active entry c forces
// r == 0 on that column whenever gcd(c, m) == 1. Removing a column can expose
// further single-entry rows, so iterate to a fixed point. Returns false when
// a required column gets forced to zero (the system is infeasible).
bool prune_forced_zero_columns(const ZmMatrix& matrix, const std::vector<bool>& required,
                               std::vector<bool>& active) {
  const Int m = matrix.modulus;
  active.assign(static_cast<std::size_t>(matrix.cols), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Int r = 0; r < matrix.rows; ++r) {
      Int nonzero = 0;
      Int col = -1;
      for (Int c = 0; c < matrix.cols; ++c) {
        if (active[static_cast<std::size_t>(c)] && matrix.at(r, c) != 0) {
          ++nonzero;
          col = c;
          if (nonzero > 1) break;
        }
      }
      if (nonzero == 1 && std::gcd(matrix.at(r, col), m) == 1) {
        if (required[static_cast<std::size_t>(col)]) return false;
        active[static_cast<std::size_t>(col)] = false;
        changed = true;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Witness> solve_with_nonzero_coords(const ZmMatrix& matrix,
                                                 const std::vector<Int>& required_cols) {
  const Int m = matrix.modulus;
  if (required_cols.empty()) throw DomainError("solve_with_nonzero_coords: no required columns");
  std::vector<Int> req(required_cols);
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());
  std::vector<bool> required(static_cast<std::size_t>(matrix.cols), false);
  for (Int c : req) {
    if (c < 0 || c >= matrix.cols) throw DomainError("solve_with_nonzero_coords: bad column");
    required[static_cast<std::size_t>(c)] = true;
  }

  std::vector<bool> active;
  if (!prune_forced_zero_columns(matrix, required, active)) return std::nullopt;

  // compact the active columns; dropped ones are identically zero in any solution
  std::vector<Int> col_map;  // compact index -> original column
  for (Int c = 0; c < matrix.cols; ++c) {
    if (active[static_cast<std::size_t>(c)]) col_map.push_back(c);
  }
  ZmMatrix compact;
  compact.modulus = m;
  compact.cols = static_cast<Int>(col_map.size());
  std::vector<Int> kept_entries;
  for (Int r = 0; r < matrix.rows; ++r) {
    bool nonzero = false;
    for (Int c : col_map) nonzero = nonzero || matrix.at(r, c) != 0;
    if (!nonzero) continue;
    for (Int c : col_map) kept_entries.push_back(matrix.at(r, c));
    ++compact.rows;
  }
  compact.entries = std::move(kept_entries);

  NullspaceBasis basis = nullspace(compact);

  std::vector<std::size_t> req_compact;
  for (std::size_t i = 0; i < col_map.size(); ++i) {
    if (required[static_cast<std::size_t>(col_map[i])]) req_compact.push_back(i);
  }

  // breadth-first closure of the projected subgroup, keeping one lift per
  // projected point; all lifts of a point share the required coordinates
  const std::size_t k = req_compact.size();
  Int states = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (states > (Int{1} << 24)) throw DomainError("projected subgroup too large to enumerate");
    states *= m;
  }
  auto encode = [&](const std::vector<Int>& x) {
    Int code = 0;
    for (std::size_t i : req_compact) code = code * m + x[i];
    return code;
  };
  std::unordered_map<Int, std::vector<Int>> seen;
  std::vector<Int> order;  // insertion order keeps the returned lift deterministic
  std::queue<Int> pending;
  std::vector<Int> zero(col_map.size(), 0);
  seen.emplace(0, zero);
  order.push_back(0);
  pending.push(0);
  while (!pending.empty()) {
    std::vector<Int> lift = seen.at(pending.front());
    pending.pop();
    for (const auto& gen : basis.generators) {
      std::vector<Int> next(lift);
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = (next[i] + gen[i]) % m;
      Int code = encode(next);
      if (seen.emplace(code, next).second) {
        order.push_back(code);
        pending.push(code);
      }
    }
  }

  for (Int code : order) {
    const std::vector<Int>& lift = seen.at(code);
    bool all_nonzero = true;
    Int c = code;
    for (std::size_t i = 0; i < k; ++i) {
      all_nonzero = all_nonzero && (c % m) != 0;
      c /= m;
    }
    if (!all_nonzero) continue;
    Witness witness;
    if (!matrix.col_values.empty()) {
      witness.window_start = matrix.col_values.front();
      witness.window_end = matrix.col_values.back();
    }
    witness.multiplicities.assign(static_cast<std::size_t>(matrix.cols), 0);
    for (std::size_t i = 0; i < col_map.size(); ++i) {
      witness.multiplicities[static_cast<std::size_t>(col_map[i])] = lift[i];
    }
    return witness;
  }
  return std::nullopt;
}

}  // namespace graham
