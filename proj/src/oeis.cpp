#include "graham/oeis.hpp"

#include <fstream>
#include <sstream>

#include "graham/error.hpp"

namespace graham {

// defined in fetch.cpp
std::string fetch_url_body(const std::string& scheme, const std::string& host,
                           const std::string& target);

BFile parse_bfile(const std::string& text) {
  BFile bfile;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  std::optional<Int> last_index;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    Int index = 0, value = 0;
    std::string extra;
    if (!(fields >> index >> value)) throw MalformedLine(line_number, "expected 'index value'");
    if (fields >> extra) throw MalformedLine(line_number, "trailing content: " + extra);
    if (value < 0) throw MalformedLine(line_number, "negative value");
    if (last_index && index <= *last_index)
      throw MalformedLine(line_number, "indices must be strictly increasing");
    last_index = index;
    bfile.entries[index] = value;
  }
  return bfile;
}

std::string render_bfile(const BFile& bfile) {
  std::ostringstream out;
  for (const auto& [index, value] : bfile.entries) out << index << ' ' << value << '\n';
  return out.str();
}

BFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw IoFailure("cannot open b-file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  BFile bfile = parse_bfile(text.str());
  bfile.source = path;
  return bfile;
}

Int auto_offset_shift(const BFile& bfile, const std::function<Int(Int)>& computed) {
  Int best_shift = 0;
  Int best_matches = -1;
  for (Int shift = -4; shift <= 4; ++shift) {
    Int matches = 0;
    Int inspected = 0;
    for (const auto& [index, value] : bfile.entries) {
      if (inspected++ >= 10) break;
      Int n = index + shift;
      if (n < 0) continue;
      if (computed(n) == value) ++matches;
    }
    if (matches > best_matches) {
      best_matches = matches;
      best_shift = shift;
    }
  }
  return best_shift;
}

std::vector<OeisMismatch> compare(const BFile& bfile, Int m, Int n_max, Int offset_shift,
                                  const std::function<Int(Int)>& computed) {
  if (m != 2) throw DomainError("oeis compare is defined for m = 2 only");
  std::vector<OeisMismatch> mismatches;
  for (const auto& [index, value] : bfile.entries) {
    Int n = index + offset_shift;
    if (n < 0 || n > n_max) continue;
    Int ours = computed(n);
    if (ours != value) mismatches.push_back({index, n, value, ours});
  }
  return mismatches;
}

BFile fetch_bfile(const std::string& url, const std::string& cache_path) {
  std::string scheme, host, target;
  std::size_t sep = url.find("://");
  if (sep == std::string::npos) throw IoFailure("bad url: " + url);
  scheme = url.substr(0, sep);
  std::string rest = url.substr(sep + 3);
  std::size_t slash = rest.find('/');
  host = rest.substr(0, slash);
  target = slash == std::string::npos ? "/" : rest.substr(slash);
  std::string body = fetch_url_body(scheme, host, target);
  BFile bfile = parse_bfile(body);
  std::ofstream out(cache_path);
  if (!out.is_open()) throw IoFailure("cannot write cache: " + cache_path);
  out << body;
  bfile.source = url;
  return bfile;
}

}  // namespace graham
