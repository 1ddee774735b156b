#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "graham/arith.hpp"

namespace graham {

// One computed cell. Persisted as a single JSON object per line with sorted
// keys and no floats, so equal records serialize byte-identically.
struct SweepRecord {
  Int m = 2;
  Int n = 0;
  Int g = 0;
  std::string witness;
  std::optional<Int> t_total;
  std::optional<Int> t_distinct;
  Int timestamp = 0;  // unix seconds; not serialized
};

std::string serialize_record(const SweepRecord& record);
SweepRecord deserialize_record(const std::string& line, int line_number);

// Append-only JSONL store indexed by (m, n). Duplicate byte-identical lines
// dedupe silently on load; conflicting lines for the same key raise
// ConsistencyError. Witnesses are re-validated on load.
class Store {
 public:
  explicit Store(std::string path);

  // Loads the whole file (missing file = empty store).
  void load();

  const std::string& path() const { return path_; }
  bool contains(Int m, Int n) const { return records_.count({m, n}) > 0; }
  const SweepRecord* find(Int m, Int n) const;
  const std::map<std::pair<Int, Int>, SweepRecord>& records() const { return records_; }

  // Durably appends one record (no-op if an identical record is loaded).
  void append(const SweepRecord& record);

 private:
  std::string path_;
  std::map<std::pair<Int, Int>, SweepRecord> records_;
  std::map<std::pair<Int, Int>, std::string> raw_lines_;
};

}  // namespace graham
