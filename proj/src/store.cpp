#include "graham/store.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graham/error.hpp"
#include "graham/sequence.hpp"

namespace graham {

namespace {
constexpr int kSchemaVersion = 1;
}

std::string serialize_record(const SweepRecord& record) {
  nlohmann::json j;  // object keys serialize sorted
  j["m"] = record.m;
  j["n"] = record.n;
  j["g"] = record.g;
  j["witness"] = record.witness;
  j["t_total"] = record.t_total ? nlohmann::json(*record.t_total) : nlohmann::json(nullptr);
  j["t_distinct"] = record.t_distinct ? nlohmann::json(*record.t_distinct) : nlohmann::json(nullptr);
  j["schema_version"] = kSchemaVersion;
  return j.dump();
}

SweepRecord deserialize_record(const std::string& line, int line_number) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedLine(line_number, e.what());
  }
  SweepRecord record;
  try {
    record.m = j.at("m").get<Int>();
    record.n = j.at("n").get<Int>();
    record.g = j.at("g").get<Int>();
    record.witness = j.at("witness").get<std::string>();
    if (!j.at("t_total").is_null()) record.t_total = j.at("t_total").get<Int>();
    if (!j.at("t_distinct").is_null()) record.t_distinct = j.at("t_distinct").get<Int>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedLine(line_number, e.what());
  }
  return record;
}

namespace {

// Stored witnesses are untrusted text; parse and re-check them against the
// record before indexing.
void check_record(const SweepRecord& record, int line_number) {
  if (record.m < 2) throw MalformedLine(line_number, "modulus below 2");
  MProductSequence witness = parse_sequence(record.witness, record.m);
  if (auto violation = validate(witness)) {
    throw ConsistencyError("line " + std::to_string(line_number) +
                           ": stored witness invalid: " + violation->detail);
  }
  if (witness.min_value() != record.n || witness.max_value() != record.g) {
    throw ConsistencyError("line " + std::to_string(line_number) +
                           ": witness endpoints disagree with record");
  }
}

}  // namespace

Store::Store(std::string path) : path_(std::move(path)) {}

const SweepRecord* Store::find(Int m, Int n) const {
  auto it = records_.find({m, n});
  return it == records_.end() ? nullptr : &it->second;
}

void Store::load() {
  records_.clear();
  raw_lines_.clear();
  std::ifstream in(path_);
  if (!in.is_open()) return;  // missing file = empty store
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    SweepRecord record = deserialize_record(line, line_number);
    check_record(record, line_number);
    auto key = std::make_pair(record.m, record.n);
    auto existing = raw_lines_.find(key);
    if (existing != raw_lines_.end()) {
      if (existing->second != line) {
        throw ConsistencyError("line " + std::to_string(line_number) + ": conflicting record for (m=" +
                               std::to_string(record.m) + ", n=" + std::to_string(record.n) + ")");
      }
      continue;  // byte-identical duplicate
    }
    raw_lines_.emplace(key, line);
    records_.emplace(key, std::move(record));
  }
}

void Store::append(const SweepRecord& record) {
  std::string line = serialize_record(record);
  check_record(record, 0);
  auto key = std::make_pair(record.m, record.n);
  auto existing = raw_lines_.find(key);
  if (existing != raw_lines_.end()) {
    if (existing->second != line)
      throw ConsistencyError("append: conflicting record for (m=" + std::to_string(record.m) +
                             ", n=" + std::to_string(record.n) + ")");
    return;
  }
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open()) throw IoFailure("cannot open store for append: " + path_);
  out << line << '\n';
  if (!out.good()) throw IoFailure("write failed: " + path_);
  raw_lines_.emplace(key, std::move(line));
  records_.emplace(key, record);
}

}  // namespace graham
