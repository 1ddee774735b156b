#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graham/arith.hpp"

namespace graham {

// Parsed OEIS b-file: "index value" lines, '#' comments, strictly
// increasing indices.
struct BFile {
  std::string sequence_id;
  std::map<Int, Int> entries;
  std::string source;
};

BFile parse_bfile(const std::string& text);
std::string render_bfile(const BFile& bfile);
BFile load_bfile(const std::string& path);

// Single blocking HTTPS/HTTP GET, cached to cache_path.
BFile fetch_bfile(const std::string& url, const std::string& cache_path);

struct OeisMismatch {
  Int index = 0;
  Int n = 0;
  Int oeis_value = 0;
  Int computed = 0;
};

// Offset with the most agreements between entry i and computed(i + shift)
// over the first 10 entries (ties to the smaller shift).
Int auto_offset_shift(const BFile& bfile, const std::function<Int(Int)>& computed);

// Aligns entry i with n = i + offset_shift and reports disagreements with
// the computed values on indices with n in [0, n_max]. m must be 2.
std::vector<OeisMismatch> compare(const BFile& bfile, Int m, Int n_max, Int offset_shift,
                                  const std::function<Int(Int)>& computed);

}  // namespace graham
