#include <doctest.h>

#include "focal/bounds.hpp"
#include "helpers.hpp"

using namespace focal;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("hypergraph bounds r=3 n=7 k=3") {
  auto rep = hypergraph_bounds(3, 7, 3);
  CHECK(rep.t == 2);
  CHECK(rep.lambda == 1);
  CHECK(rep.m.value() == 0);

  auto* thm22 = rep.find("thm22Upper");
  REQUIRE(thm22);
  CHECK(thm22->valid);
  CHECK(thm22->value == BigRat(7));
  CHECK(!thm22->conjectural);

  auto* alon = rep.find("alonUpper");
  REQUIRE(alon);
  CHECK(alon->value == BigRat(14));
  CHECK(alon->valid);

  auto* lim = rep.find("limitDensity");
  REQUIRE(lim);
  CHECK(lim->value == BigRat(1, 3));

  auto* rem = rep.find("remark23Upper");
  REQUIRE(rem);
  CHECK(rem->valid);
  CHECK(rem->value == BigRat(14));  // 7 + C(7,1)

  CHECK(*rep.best_admissible_upper() == 7);
}

TEST_CASE("hypergraph bounds validity tracking") {
  // n below n0: thm22 reported but not valid
  auto rep = hypergraph_bounds(3, 5, 3);  // n0 = 7
  auto* thm22 = rep.find("thm22Upper");
  REQUIRE(thm22);
  CHECK(!thm22->valid);
  CHECK(thm22->reason.find("n0") != std::string::npos);
  auto* rem = rep.find("remark23Upper");
  REQUIRE(rem);
  CHECK(rem->valid);
}

TEST_CASE("zero denominator is surfaced, not asserted away") {
  // r=5, k=2: t=k, s=0, lambda=2, m=1, so C(k,t)-m = 0
  auto rep = hypergraph_bounds(5, 6, 2);
  CHECK(rep.lambda == 2);
  auto* lim = rep.find("limitDensity");
  REQUIRE(lim);
  CHECK(!lim->valid);
  CHECK(lim->reason.find("denominator") != std::string::npos);
}

TEST_CASE("code bounds r=3 n=5 q=4") {
  auto rep = code_bounds(3, 5, 4);
  CHECK(rep.t == 3);
  CHECK(rep.lambda == 1);

  auto* thm35 = rep.find("thm35Upper");
  REQUIRE(thm35);
  CHECK(thm35->valid);
  CHECK(thm35->value == BigRat(64));

  auto* thm16 = rep.find("thm16Exact");
  REQUIRE(thm16);
  CHECK(thm16->valid);
  CHECK(thm16->value == BigRat(64));

  auto* ah = rep.find("ahCodeUpper");
  REQUIRE(ah);
  CHECK(ah->value == BigRat(128));

  // q-threshold for the counting bound is 10 here, so q=4 is out of range
  auto* thm33 = rep.find("thm33Upper");
  REQUIRE(thm33);
  CHECK(!thm33->valid);
  CHECK(thm33->value == BigRat(64));

  auto* lower = rep.find("ahCodeLowerPrimePower");
  REQUIRE(lower);
  CHECK(!lower->valid);  // q=4 < n=5
}

TEST_CASE("code bounds thm16 preconditions across q") {
  // n=5, r=3: valid exactly when 5 <= p1^e1 + 1
  CHECK(code_bounds(3, 5, 4).find("thm16Exact")->valid);
  CHECK(code_bounds(3, 5, 5).find("thm16Exact")->valid);
  CHECK(!code_bounds(3, 5, 6).find("thm16Exact")->valid);  // p1^e1 = 2
  CHECK(code_bounds(3, 5, 7).find("thm16Exact")->valid);
  CHECK(code_bounds(3, 5, 8).find("thm16Exact")->valid);
  CHECK(code_bounds(3, 5, 9).find("thm16Exact")->valid);
  CHECK(!code_bounds(3, 5, 12).find("thm16Exact")->valid);  // p1^e1 = 3
  CHECK(code_bounds(3, 5, 20).find("thm16Exact")->valid);   // p1^e1 = 4
  CHECK(!code_bounds(3, 3, 4).find("thm16Exact")->valid);   // 2r-3 < n fails
}

TEST_CASE("code-side limit constant at n=2") {
  auto rep = code_bounds(3, 2, 5);
  CHECK(rep.t == 1);
  CHECK(rep.lambda == 2);
  CHECK(rep.m.value() == 1);
  auto* lim = rep.find("limitDensity");
  REQUIRE(lim);
  CHECK(lim->value == BigRat(2));
}

TEST_CASE("improvement claim on a mini sweep") {
  for (int r : {3, 4})
    for (int k = 2; k <= 7; ++k) {
      auto probe = hypergraph_bounds(r, k, k);
      auto* t22 = probe.find("thm22Upper");
      if (!t22 || t22->value == 0) continue;
      for (int n = k; n <= k + 6; ++n) {
        auto rep = hypergraph_bounds(r, n, k);
        auto* thm22 = rep.find("thm22Upper");
        auto* alon = rep.find("alonUpper");
        REQUIRE(thm22);
        REQUIRE(alon);
        if (thm22->valid) CHECK(thm22->value <= alon->value);
        // identity behind the limit: thm22 * (C(k,t) - m) == C(n,t)
        const BigInt denom = binom(k, rep.t) - rep.m.value();
        if (denom > 0)
          CHECK(thm22->value * BigRat(denom) == BigRat(binom(n, rep.t)));
      }
    }
}

TEST_CASE("thm35 never exceeds thm33 when both valid at lambda = 1") {
  for (int r : {3, 4})
    for (int n = 2; n <= 9; ++n)
      for (int q = 2; q <= 12; ++q) {
        auto rep = code_bounds(r, n, q);
        if (rep.lambda != 1) continue;
        const auto* t35 = rep.find("thm35Upper");
        const auto* t33 = rep.find("thm33Upper");
        REQUIRE(t35);
        REQUIRE(t33);
        if (t35->valid && t33->valid) CHECK(t35->value <= t33->value);
      }
}

TEST_CASE("packing check") {
  CHECK(packing_is_focal_free_check(testutil::fano(), 3));
  UniformFamily not_packing(5, 3, {{1, 2, 3}, {1, 2, 4}});
  CHECK_THROWS_AS(packing_is_focal_free_check(not_packing, 3),
                  std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(hypergraph_bounds(2, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(hypergraph_bounds(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(code_bounds(3, 1, 2), std::invalid_argument);
}

TEST_SUITE_END();
