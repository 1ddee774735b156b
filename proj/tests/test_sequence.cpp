#include <doctest.h>

#include "graham/error.hpp"
#include "graham/sequence.hpp"
#include "graham/solver.hpp"

using namespace graham;

TEST_CASE("validate") {
  CHECK_FALSE(validate(make_sequence(2, {{2, 1}, {3, 1}, {6, 1}})).has_value());

  auto dup = validate(make_sequence(2, {{6, 2}}));
  REQUIRE(dup.has_value());
  CHECK(dup->kind == SequenceViolation::MultiplicityExceeded);

  auto cube = validate(make_sequence(2, {{2, 1}, {4, 1}}));
  REQUIRE(cube.has_value());
  CHECK(cube->kind == SequenceViolation::NotMthPower);

  auto unsorted = validate(make_sequence(2, {{6, 1}, {3, 1}}));
  REQUIRE(unsorted.has_value());
  CHECK(unsorted->kind == SequenceViolation::UnsortedTerms);

  // the zero sequence is the one allowed degenerate form
  CHECK_FALSE(validate(make_sequence(2, {{0, 1}})).has_value());
  CHECK(validate(make_sequence(2, {{0, 1}, {5, 1}})).has_value());
  CHECK_FALSE(validate(make_sequence(5, {{1, 2}})).has_value());
}

TEST_CASE("validate avoids forming the literal product") {
  // 48 consecutive integers: the product overflows anything fixed-width
  std::vector<std::pair<Int, Int>> terms;
  for (Int v = 100; v < 148; ++v) terms.emplace_back(v, 1);
  auto report = validate(make_sequence(2, terms));  // almost surely not a square
  CHECK(report.has_value());
}

TEST_CASE("combine drops the shared maximum when counts cancel") {
  MProductSequence a = make_sequence(2, {{2, 1}, {8, 1}});
  MProductSequence b = make_sequence(2, {{3, 1}, {6, 1}, {8, 1}});
  MProductSequence c = combine(a, b);
  CHECK(c.terms == std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {6, 1}});
  CHECK_FALSE(validate(c).has_value());
}

TEST_CASE("combine preconditions") {
  MProductSequence a = make_sequence(3, {{4, 1}, {6, 1}, {9, 1}});  // 216 = 6^3
  MProductSequence b = make_sequence(3, {{6, 2}, {9, 1}, {12, 2}});
  REQUIRE_FALSE(validate(a).has_value());
  REQUIRE_FALSE(validate(b).has_value());
  CHECK_THROWS_AS(combine(a, b), PreconditionViolated);  // max(A) != max(B)

  MProductSequence shifted = make_sequence(3, {{2, 1}, {4, 1}});
  CHECK_THROWS_AS(combine(a, shifted), PreconditionViolated);  // min(A) not below min(B)
  CHECK_THROWS_AS(combine(a, make_sequence(2, {{6, 1}, {9, 1}})), PreconditionViolated);
}

TEST_CASE("combine_power follows the k-fold multiplicity rule") {
  MProductSequence a = make_sequence(2, {{2, 1}, {8, 1}});
  MProductSequence b = make_sequence(2, {{3, 1}, {6, 1}, {8, 1}});

  CHECK(combine_power(a, b, 1).terms == combine(a, b).terms);

  MProductSequence d = combine_power(a, b, 2);
  // 8 appears (1 + 2*1) mod 2 = 1 time
  CHECK(d.multiplicity_of(8) == 1);
  CHECK_FALSE(validate(d).has_value());

  // k = m returns the multiplicity of max(A) to its original value
  MProductSequence e = combine_power(a, b, 2);
  CHECK(e.multiplicity_of(8) == a.multiplicity_of(8));
}

TEST_CASE("combine properties on solver-found pairs") {
  // pairs of valid sequences with min(A) < min(B) and max(A) = max(B),
  // harvested from reverse searches ending at the same value
  int pairs_checked = 0;
  for (Int m : {2, 3, 5}) {
    for (Int top = 8; top <= 60 && pairs_checked < 100; ++top) {
      if (is_prime(top)) continue;
      std::vector<MProductSequence> enders;
      for (Int k = top; k >= 2 && enders.size() < 4; --k) {
        ZmMatrix matrix = build_window_matrix(k, top, m);
        std::vector<Int> required = {0};
        if (k < top) required.push_back(top - k);
        auto witness = solve_with_nonzero_coords(matrix, required);
        if (witness) enders.push_back(sequence_from_witness(*witness, m));
      }
      for (std::size_t i = 0; i < enders.size(); ++i) {
        for (std::size_t j = 0; j < enders.size(); ++j) {
          if (enders[i].min_value() >= enders[j].min_value()) continue;
          if (enders[i].max_value() != enders[j].max_value()) continue;
          const auto& a = enders[i];
          const auto& b = enders[j];
          MProductSequence c = combine(a, b);
          ++pairs_checked;
          CHECK_FALSE(validate(c).has_value());
          CHECK(c.min_value() == a.min_value());
          CHECK(c.min_multiplicity() == a.min_multiplicity());
          CHECK(c.max_value() <= a.max_value());
          Int expected = (a.multiplicity_of(a.max_value()) + b.multiplicity_of(a.max_value())) % m;
          CHECK(c.multiplicity_of(a.max_value()) == expected);
        }
      }
    }
  }
  CHECK(pairs_checked >= 100);
}

TEST_CASE("strip_mth_powers") {
  MProductSequence s = make_sequence(2, {{3, 1}, {4, 1}, {6, 1}, {8, 1}});
  REQUIRE_FALSE(validate(s).has_value());  // 576 = 24^2
  MProductSequence stripped = strip_mth_powers(s);
  CHECK(stripped.terms == std::vector<std::pair<Int, Int>>{{3, 1}, {6, 1}, {8, 1}});
  CHECK_FALSE(validate(stripped).has_value());
  CHECK(stripped.min_value() == s.min_value());

  // no m-th powers: unchanged
  MProductSequence t = make_sequence(2, {{2, 1}, {3, 1}, {6, 1}});
  CHECK(strip_mth_powers(t).terms == t.terms);

  // 16 = 4^2 goes away
  MProductSequence u = make_sequence(2, {{2, 1}, {8, 1}, {16, 1}});
  CHECK(strip_mth_powers(u).multiplicity_of(16) == 0);

  CHECK_THROWS_AS(strip_mth_powers(make_sequence(2, {{4, 1}, {9, 1}})), PreconditionViolated);
}

TEST_CASE("render and parse round-trip") {
  MProductSequence s = make_sequence(5, {{18, 2}, {24, 1}});
  CHECK(render(s) == "18^{2}·24");
  CHECK(parse_sequence(render(s), 5).terms == s.terms);

  CHECK(render(make_sequence(2, {{0, 1}})) == "0");
  CHECK(parse_sequence("0", 2).terms == std::vector<std::pair<Int, Int>>{{0, 1}});

  CHECK(parse_sequence("2*3*6", 2).terms ==
        std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {6, 1}});
  CHECK(parse_sequence("18^2x24", 5).terms == s.terms);
  CHECK_THROWS_AS(parse_sequence("2**3", 2), MalformedLine);

  for (Int m : {2, 3, 7, 12}) {
    for (Int n : {2, 5, 12, 18, 30}) {
      MProductSequence w = compute_g(n, m).witness;
      CHECK(parse_sequence(render(w), m).terms == w.terms);
    }
  }
}
