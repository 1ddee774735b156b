#include <doctest.h>

#include "graham/error.hpp"
#include "graham/lengths.hpp"

using namespace graham;

TEST_CASE("closed_form") {
  CHECK(closed_form(64, 4) == std::make_pair(Int{2}, Int{1}));   // d = 6, gcd = 2
  CHECK(closed_form(8, 6) == std::make_pair(Int{2}, Int{1}));    // d = 3, gcd = 3
  for (Int m = 2; m <= 12; ++m) CHECK_FALSE(closed_form(12, m).has_value());
  CHECK(closed_form(0, 5) == std::make_pair(Int{1}, Int{1}));
  CHECK(closed_form(1, 5) == std::make_pair(Int{1}, Int{1}));
  CHECK(closed_form(16, 6) == std::make_pair(Int{3}, Int{1}));   // d = 4, gcd = 2
}

TEST_CASE("t_values on the worked cases") {
  SUBCASE("minimum distinct lengths") {
    CHECK(t_values(18, 5).t_distinct == 2);
    CHECK(t_values(48, 11).t_distinct == 2);
  }
  SUBCASE("two-term optima") {
    LengthResult r = t_values(2, 3);
    CHECK(r.t_total == 2);
    CHECK(r.t_distinct == 2);
    CHECK(r.optimal_witness.terms == std::vector<std::pair<Int, Int>>{{2, 1}, {4, 1}});

    CHECK(t_values(4, 5).t_total == 2);
    CHECK(t_values(4, 5).t_distinct == 2);
    CHECK(t_values(12, 3).t_total == 2);
    CHECK(t_values(12, 3).t_distinct == 2);
  }
  SUBCASE("three terms needed at the origin of the problem") {
    LengthResult r = t_values(2, 2);
    CHECK(r.t_total == 3);
    CHECK(r.t_distinct == 3);
    CHECK(r.optimal_witness.terms ==
          std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {6, 1}});
  }
  SUBCASE("fixed points") {
    LengthResult r = t_values(64, 4);
    CHECK(r.t_distinct == 1);
    CHECK(r.t_total == 2);
    CHECK(t_values(0, 3).t_total == 1);
    CHECK(t_values(1, 3).t_total == 1);
  }
}

TEST_CASE("witness of t_values attains the reported total") {
  for (Int m : {2, 3, 5, 8}) {
    for (Int n = 0; n <= 40; ++n) {
      LengthResult r = t_values(n, m);
      CHECK_FALSE(validate(r.optimal_witness).has_value());
      CHECK(r.optimal_witness.total_length() == r.t_total);
      CHECK(r.t_distinct <= r.t_total);
      CHECK(r.t_distinct <= r.optimal_witness.distinct_length());
      CHECK((r.t_distinct == 1) == (r.g == r.n));
      if (n >= 2) {
        CHECK(r.optimal_witness.min_value() == n);
        CHECK(r.optimal_witness.max_value() == r.g);
      }
    }
  }
}

TEST_CASE("closed_form agrees with the search where it applies") {
  for (Int m = 2; m <= 12; ++m) {
    for (Int n = 2; n <= 64; ++n) {
      auto closed = closed_form(n, m);
      if (!closed) continue;
      LengthResult searched = t_values(n, m);
      CHECK(searched.t_total == closed->first);
      CHECK(searched.t_distinct == closed->second);
    }
  }
}

TEST_CASE("support cap reporting") {
  // a cap of 2 cannot hold the three distinct values needed from 2
  CHECK_THROWS_AS(t_values(2, 2, 2), SearchCapExceeded);
}
