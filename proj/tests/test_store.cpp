#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "graham/error.hpp"
#include "graham/store.hpp"

using namespace graham;

namespace {

SweepRecord sample_record() {
  SweepRecord r;
  r.m = 2;
  r.n = 2;
  r.g = 6;
  r.witness = "2·3·6";
  return r;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("serialization is byte-stable with sorted keys") {
  std::string line = serialize_record(sample_record());
  CHECK(line ==
        "{\"g\":6,\"m\":2,\"n\":2,\"schema_version\":1,\"t_distinct\":null,"
        "\"t_total\":null,\"witness\":\"2·3·6\"}");
  SweepRecord back = deserialize_record(line, 1);
  CHECK(serialize_record(back) == line);
}

TEST_CASE("append then load round-trips") {
  TempFile tmp("test_store_roundtrip.jsonl");
  {
    Store store(tmp.path);
    store.load();
    store.append(sample_record());
    SweepRecord other;
    other.m = 5;
    other.n = 18;
    other.g = 24;
    other.witness = "18^{2}·24";
    other.t_total = 3;
    other.t_distinct = 2;
    store.append(other);
  }
  Store store(tmp.path);
  store.load();
  REQUIRE(store.records().size() == 2);
  const SweepRecord* r = store.find(5, 18);
  REQUIRE(r != nullptr);
  CHECK(r->g == 24);
  CHECK(r->t_total == 3);
  CHECK(r->t_distinct == 2);
  CHECK_FALSE(store.find(2, 2)->t_total.has_value());
  CHECK(store.find(3, 3) == nullptr);
}

TEST_CASE("identical duplicate lines dedupe silently") {
  TempFile tmp("test_store_dup.jsonl");
  std::string line = serialize_record(sample_record());
  {
    std::ofstream out(tmp.path);
    out << line << '\n' << line << '\n';
  }
  Store store(tmp.path);
  store.load();
  CHECK(store.records().size() == 1);

  // appending the same record again is a no-op
  store.append(sample_record());
  Store reread(tmp.path);
  reread.load();
  CHECK(reread.records().size() == 1);
}

TEST_CASE("conflicting records raise ConsistencyError") {
  TempFile tmp("test_store_conflict.jsonl");
  SweepRecord good = sample_record();
  SweepRecord bad = sample_record();
  bad.g = 12;
  bad.witness = "2·3·8·12";
  {
    std::ofstream out(tmp.path);
    out << serialize_record(good) << '\n' << serialize_record(bad) << '\n';
  }
  Store store(tmp.path);
  CHECK_THROWS_AS(store.load(), ConsistencyError);

  TempFile tmp2("test_store_conflict2.jsonl");
  Store appender(tmp2.path);
  appender.load();
  appender.append(good);
  CHECK_THROWS_AS(appender.append(bad), ConsistencyError);
}

TEST_CASE("malformed and invalid lines are rejected") {
  TempFile tmp("test_store_malformed.jsonl");
  {
    std::ofstream out(tmp.path);
    out << "not json at all\n";
  }
  Store store(tmp.path);
  CHECK_THROWS_AS(store.load(), MalformedLine);

  // witness that does not multiply to an m-th power
  TempFile tmp2("test_store_badwitness.jsonl");
  {
    std::ofstream out(tmp2.path);
    out << "{\"g\":4,\"m\":2,\"n\":2,\"schema_version\":1,\"t_distinct\":null,"
           "\"t_total\":null,\"witness\":\"2·4\"}\n";
  }
  Store bad(tmp2.path);
  CHECK_THROWS_AS(bad.load(), ConsistencyError);

  // endpoints must match the record
  TempFile tmp3("test_store_endpoints.jsonl");
  {
    std::ofstream out(tmp3.path);
    out << "{\"g\":8,\"m\":2,\"n\":2,\"schema_version\":1,\"t_distinct\":null,"
           "\"t_total\":null,\"witness\":\"2·3·6\"}\n";
  }
  Store mismatched(tmp3.path);
  CHECK_THROWS_AS(mismatched.load(), ConsistencyError);
}

TEST_CASE("missing store file loads as empty") {
  Store store("does_not_exist_anywhere.jsonl");
  store.load();
  CHECK(store.records().empty());
}
