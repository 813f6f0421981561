#include <doctest.h>

#include "focal/matching.hpp"
#include "helpers.hpp"

using namespace focal;

namespace {

// Exhaustive maximum over all subfamilies; only for tiny candidate pools.
BigInt oracle_max_no_matching(int n, int s, int lambda) {
  const auto pool = focal::util::all_subsets(n, s);
  REQUIRE(pool.size() <= 16);
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) edges.push_back(pool[i]);
    if (!testutil::oracle_has_matching(edges, lambda))
      best = std::max(best, edges.size());
  }
  return BigInt(best);
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("m_formula examples") {
  for (int k : {3, 5, 8})
    for (int s : {1, 2}) CHECK(m_formula(k, s, 1) == 0);
  CHECK(m_formula(3, 1, 2) == 1);
  CHECK(m_formula(6, 2, 2) == 5);
  CHECK(m_formula(8, 3, 2) == 21);
  CHECK_THROWS_AS(m_formula(3, 0, 2), std::invalid_argument);
}

TEST_CASE("m_bruteforce matches exhaustive oracle") {
  CHECK(m_bruteforce(3, 1, 2).value == oracle_max_no_matching(3, 1, 2));
  CHECK(m_bruteforce(4, 1, 2).value == oracle_max_no_matching(4, 1, 2));
  CHECK(m_bruteforce(4, 1, 3).value == oracle_max_no_matching(4, 1, 3));
  CHECK(m_bruteforce(5, 2, 2).value == oracle_max_no_matching(5, 2, 2));
  CHECK(m_bruteforce(6, 2, 2, {BigInt(15)}).value ==
        oracle_max_no_matching(6, 2, 2));
}

TEST_CASE("m_bruteforce examples") {
  auto none = m_bruteforce(6, 2, 1);
  CHECK(none.value == 0);
  CHECK(none.extremal.size() == 0);

  CHECK(m_bruteforce(3, 1, 2).value == 1);

  auto star = m_bruteforce(6, 2, 2, {BigInt(15)});
  CHECK(star.value == 5);
  for (const auto& e : star.extremal.edges()) CHECK(e.front() == 1);

  CHECK_THROWS_AS(m_bruteforce(10, 4, 2), std::invalid_argument);
}

TEST_CASE("m_resolve regimes") {
  auto trivial = m_resolve(3, 1, 1);
  CHECK(trivial.regime == MatchingRegime::TrivialLambda1);
  CHECK(*trivial.exact_value == 0);
  CHECK(!trivial.conjectural);

  auto exact = m_resolve(5, 2, 2);
  CHECK(exact.regime == MatchingRegime::BruteForced);
  CHECK(*exact.exact_value == 4);
  CHECK(exact.formula_value == 4);
  CHECK(!exact.conjectural);

  auto conj = m_resolve(40, 10, 5);
  CHECK(conj.regime == MatchingRegime::FormulaOnly);
  CHECK(conj.conjectural);
  CHECK(!conj.exact_value.has_value());
  CHECK(!conj.hypothesis_holds);  // 40 < 10*5
  CHECK(m_resolve(60, 10, 5).hypothesis_holds);

  auto zero = m_resolve(4, 0, 3);
  CHECK(*zero.exact_value == 1);
}

TEST_CASE("formula agreement and Frankl bound on a small sweep") {
  for (int s = 1; s <= 3; ++s)
    for (int lambda = 1; lambda <= 3; ++lambda)
      for (int n = s * lambda; n <= 7; ++n) {
        if (binom(n, s) > 40) continue;
        auto bf = m_bruteforce(n, s, lambda, {BigInt(40)});
        CHECK(bf.value == m_formula(n, s, lambda));
        CHECK(bf.value <= frankl_bound(n, s, lambda));
        CHECK(!has_lambda_matching(bf.extremal, lambda));
        CHECK(!testutil::oracle_has_matching(bf.extremal.edges(), lambda));
      }
}

TEST_CASE("monotonicity in n and lambda") {
  for (int s = 1; s <= 2; ++s)
    for (int lambda = 2; lambda <= 3; ++lambda)
      for (int n = 3; n <= 6; ++n) {
        const MatchingOptions opt{BigInt(40)};
        auto a = m_bruteforce(n, s, lambda, opt).value;
        CHECK(a <= m_bruteforce(n + 1, s, lambda, opt).value);
        CHECK(a <= m_bruteforce(n, s, lambda + 1, opt).value);
      }
}

TEST_CASE("determinism") {
  auto a = m_bruteforce(6, 2, 2, {BigInt(20)});
  auto b = m_bruteforce(6, 2, 2, {BigInt(20)});
  CHECK(a.value == b.value);
  CHECK(a.extremal == b.extremal);
  CHECK(a.nodes == b.nodes);
}

TEST_SUITE_END();
