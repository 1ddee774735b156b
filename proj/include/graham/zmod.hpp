#pragma once

#include <optional>
#include <vector>

#include "graham/arith.hpp"

namespace graham {

// Dense matrix of residues mod m. For window matrices, row j corresponds to
// the prime row_primes[j] and column i to the integer col_values[i]; the
// entry is the exponent of that prime in that integer, reduced mod m.
struct ZmMatrix {
  Int modulus = 2;
  Int rows = 0;
  Int cols = 0;
  std::vector<Int> entries;       // row-major, all in [0, modulus)
  std::vector<Int> row_primes;    // empty for synthetic matrices
  std::vector<Int> col_values;    // empty for synthetic matrices

  Int at(Int r, Int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
  Int& at(Int r, Int c) { return entries[static_cast<std::size_t>(r * cols + c)]; }

  bool operator==(const ZmMatrix& other) const {
    return modulus == other.modulus && rows == other.rows && cols == other.cols &&
           entries == other.entries;
  }
};

ZmMatrix make_zm_matrix(Int modulus, Int rows, Int cols, std::vector<Int> entries);

// Generators of {x : A x == 0 (mod m)}. Every generator is a solution and
// every solution is a Z/m-combination of the generators.
struct NullspaceBasis {
  Int modulus = 2;
  Int cols = 0;
  std::vector<std::vector<Int>> generators;
};

// Multiplicity vector over the integer window [window_start, window_end].
struct Witness {
  Int window_start = 0;
  Int window_end = 0;
  std::vector<Int> multiplicities;  // indexed by value - window_start, in [0, m)
};

// Exponent matrix of the window [n, s] mod m: one column per integer in the
// window, one row per prime dividing at least one window element.
ZmMatrix build_window_matrix(Int n, Int s, Int m);

// Canonical row form over Z/m (Howell normal form): the row span is
// preserved, equal row spans produce identical forms, and the form is valid
// for composite moduli where field elimination does not apply.
ZmMatrix howell_form(const ZmMatrix& matrix);

NullspaceBasis nullspace(const ZmMatrix& matrix);

// True iff v lies in the Z/m row span of a Howell-form matrix.
bool in_row_span(const ZmMatrix& howell, const std::vector<Int>& v);

// A solution of A x == 0 (mod m) with x_c != 0 for every c in required_cols,
// or nullopt when none exists. The image of the nullspace projected onto the
// required coordinates is a subgroup of (Z/m)^k; it is enumerated and any
// element with all coordinates nonzero is lifted back.
std::optional<Witness> solve_with_nonzero_coords(const ZmMatrix& matrix,
                                                 const std::vector<Int>& required_cols);

}  // namespace graham
