#include <doctest.h>

#include <algorithm>

#include "focal/detect.hpp"
#include "focal/orthogonal_array.hpp"

using namespace focal;

TEST_SUITE_BEGIN("field-oa");

TEST_CASE("field construction") {
  auto gf4 = PrimePowerField::make(2, 2);
  CHECK(gf4.q() == 4);
  CHECK(gf4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

  auto gf5 = PrimePowerField::make(5, 1);
  CHECK(gf5.q() == 5);
  CHECK(gf5.add(3, 4) == 2);
  CHECK(gf5.mul(3, 4) == 2);
  CHECK(gf5.inv(2) == 3);

  auto gf8 = PrimePowerField::make(2, 3);
  CHECK(gf8.modulus() == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1

  auto gf9 = PrimePowerField::make(3, 2);
  CHECK(gf9.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1

  CHECK_THROWS_AS(PrimePowerField::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerField::make(6, 1), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    auto f = PrimePowerField::make(p, e);
    const int q = f.q();
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("oa over GF(2) with infinity row") {
  auto oa = oa_prime_power(2, 3, PrimePowerField::make(2, 1));
  REQUIRE(oa.columns.size() == 4);
  auto cols = oa.columns;
  std::sort(cols.begin(), cols.end());
  const std::vector<std::vector<int>> expected{
      {1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
  CHECK(cols == expected);
  CHECK(oa.cert.strength_ok);
  CHECK(oa.cert.strength_full);
  CHECK(oa.cert.pairwise_ok);
  CHECK(oa.cert.max_agreement <= 1);
}

TEST_CASE("oa(3,5,4) certificate") {
  auto oa = oa_prime_power(3, 5, PrimePowerField::make(2, 2));
  CHECK(oa.columns.size() == 64);
  CHECK(oa.cert.strength_ok);
  CHECK(oa.cert.strength_full);
  CHECK(oa.cert.row_subsets_checked == 10);
  CHECK(oa.cert.pairwise_ok);
  CHECK(oa.cert.max_agreement <= 2);
}

TEST_CASE("oa preconditions") {
  auto gf3 = PrimePowerField::make(3, 1);
  CHECK_THROWS_AS(oa_prime_power(2, 5, gf3), std::invalid_argument);  // n > q+1
  CHECK_THROWS_AS(oa_prime_power(4, 3, gf3), std::invalid_argument);  // t > n
}

TEST_CASE("oa composition") {
  auto a = oa_prime_power(2, 3, PrimePowerField::make(2, 1));
  auto b = oa_prime_power(2, 3, PrimePowerField::make(3, 1));
  auto c = oa_compose(a, b);
  CHECK(c.q == 6);
  CHECK(c.columns.size() == 36);
  CHECK(c.cert.strength_ok);
  CHECK(c.cert.strength_full);
  CHECK(c.cert.pairwise_ok);
  CHECK_THROWS_AS(oa_compose(a, oa_prime_power(1, 3, PrimePowerField::make(3, 1))),
                  std::invalid_argument);
}

TEST_CASE("code from oa") {
  auto a = oa_prime_power(2, 3, PrimePowerField::make(2, 1));
  auto code = code_from_oa(a);
  CHECK(code.size() == 4);
  CHECK(min_distance(code) == 2);  // n - t + 1

  auto big = oa_prime_power(3, 5, PrimePowerField::make(2, 2));
  auto bigcode = code_from_oa(big);
  CHECK(bigcode.size() == 64);
  CHECK(min_distance(bigcode) >= 3);

  auto deg = oa_prime_power(1, 3, PrimePowerField::make(3, 1));
  auto constcode = code_from_oa(deg);
  CHECK(constcode.size() == 3);
  CHECK(min_distance(constcode) == 3);  // constant words
}

TEST_CASE("restriction profile of the OA(3,5,4) code") {
  auto code = code_from_oa(oa_prime_power(3, 5, PrimePowerField::make(2, 2)));
  // distance 3 means any two words disagree somewhere on every 3 positions,
  // so every length-3 restriction is own
  for (auto& [s, count] : us_profile(code, 2)) CHECK(count == 64);
  // cover identity for the d = (n+1)/(r-1) partition shape
  CHECK(partition_cover_holds(code, {{1, 2, 3}, {4, 5}}));
  CHECK(partition_cover_holds(code, {{1, 4}, {2, 3, 5}}));
}

TEST_CASE("focal-free code build") {
  auto code = focal_free_code_build(3, 5, 4);
  CHECK(code.size() == 64);
  CHECK(min_distance(code) > 5 / 2);
  CHECK(!find_focal(code, 3).has_value());

  // composite alphabet: q = 20 = 4 * 5, p1^e1 = 4, n = 5 <= 5
  auto big = focal_free_code_build(3, 5, 20, {.verify_focal = false});
  CHECK(big.size() == 8000);
  CHECK(min_distance(big) >= 3);

  CHECK_THROWS_AS(focal_free_code_build(3, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(focal_free_code_build(3, 5, 12), std::invalid_argument);
  try {
    focal_free_code_build(3, 4, 4);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("r-1 | n+1") != std::string::npos);
  }
}

TEST_SUITE_END();
