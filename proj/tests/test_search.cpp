#include <doctest.h>

#include "focal/bounds.hpp"
#include "focal/search.hpp"
#include "helpers.hpp"

using namespace focal;

namespace {

// Exhaustive maximum focal-free subfamily for tiny candidate pools.
std::size_t oracle_max_family(int r, int n, int k) {
  auto pool = util::all_subsets(n, k);
  REQUIRE(pool.size() <= 12);
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) edges.push_back(pool[i]);
    if (edges.size() <= best) continue;
    UniformFamily fam(n, k, edges);
    if (!testutil::oracle_contains_focal_family(fam, r))
      best = edges.size();
  }
  return best;
}

std::size_t oracle_max_code(int r, int n, int q) {
  std::vector<std::vector<int>> pool;
  std::vector<int> cur(static_cast<std::size_t>(n), 1);
  while (true) {
    pool.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == q) {
      cur[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  REQUIRE(pool.size() <= 16);
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<std::vector<int>> words;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) words.push_back(pool[i]);
    if (words.size() <= best) continue;
    QaryCode code(n, q, words);
    if (!testutil::oracle_contains_focal_code(code, r)) best = words.size();
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("triangle-free case f_3(3,2) = 2") {
  CHECK(oracle_max_family(3, 3, 2) == 2);
  auto res = exact_f(3, 3, 2);
  CHECK(res.optimum == 2);
  CHECK(res.proof != Maximality::Timeout);
}

TEST_CASE("f_3(7,3) closes at 7 with a design among the optima") {
  auto res = exact_f(3, 7, 3);
  CHECK(res.optimum == 7);
  CHECK(res.proof == Maximality::BranchAndBoundComplete);
  REQUIRE(res.upper_cap.has_value());
  CHECK(*res.upper_cap == 7);
  CHECK(is_packing(res.extremal, 2));  // the seeded design survives
  CHECK(!testutil::oracle_contains_focal_family(res.extremal, 3));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(exact_f(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(exact_f(2, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(exact_f(3, 12, 6), std::invalid_argument);  // cap
  CHECK_THROWS_AS(exact_f_code(3, 40, 3, {}), std::invalid_argument);
}

TEST_CASE("code value frozen from the exhaustive oracle: f_3^2(2) = 2") {
  // every 3-subset of [2]^2 contains a focal triple, e.g. {11,12,21}
  // with focus 11
  CHECK(oracle_max_code(3, 2, 2) == 2);
  auto res = exact_f_code(3, 2, 2);
  CHECK(res.optimum == 2);
  CHECK(res.proof != Maximality::Timeout);
}

TEST_CASE("code value frozen from the exhaustive oracle: f_3^2(3) = 4") {
  CHECK(oracle_max_code(3, 3, 2) == 4);
  auto res = exact_f_code(3, 3, 2);
  CHECK(res.optimum == 4);
  CHECK(res.proof != Maximality::Timeout);
}

TEST_CASE("f_3^4(5) certified at 64 through the OA seed") {
  auto res = exact_f_code(3, 5, 4);
  CHECK(res.optimum == 64);
  CHECK(res.proof == Maximality::BranchAndBoundComplete);
  REQUIRE(res.upper_cap.has_value());
  CHECK(*res.upper_cap == 64);
}

TEST_CASE("branch and bound agrees with plain enumeration") {
  for (auto [r, n, k] : {std::tuple{3, 4, 2}, {3, 5, 2}, {4, 4, 2},
                         {3, 5, 4}, {4, 5, 3}}) {
    REQUIRE(binom(n, k) <= 12);
    const auto expect = oracle_max_family(r, n, k);
    SearchOptions plain;
    plain.use_upper_bound_caps = false;
    plain.seed_with_construction = false;
    auto a = exact_f(r, n, k, plain);
    CHECK(a.proof == Maximality::Exhaustive);
    CHECK(a.optimum == expect);
    auto b = exact_f(r, n, k);
    CHECK(b.optimum == expect);
  }
  for (auto [r, n, q] : {std::tuple{3, 2, 2}, {3, 4, 2}, {4, 2, 2}, {4, 3, 2}}) {
    const auto expect = oracle_max_code(r, n, q);
    SearchOptions plain;
    plain.use_upper_bound_caps = false;
    plain.seed_with_construction = false;
    auto a = exact_f_code(r, n, q, plain);
    CHECK(a.optimum == expect);
  }
}

TEST_CASE("timeout leaves a valid lower bound") {
  SearchOptions tiny;
  tiny.node_budget = 3;
  tiny.candidate_cap = 60;
  auto res = exact_f(3, 8, 3, tiny);
  CHECK(res.proof == Maximality::Timeout);
  CHECK(res.optimum >= 1);
  CHECK(!testutil::oracle_contains_focal_family(res.extremal, 3));
}

TEST_CASE("determinism including node counts") {
  auto a = exact_f(3, 6, 3);
  auto b = exact_f(3, 6, 3);
  CHECK(a.optimum == b.optimum);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.extremal == b.extremal);

  auto ca = exact_f_code(3, 3, 3);
  auto cb = exact_f_code(3, 3, 3);
  CHECK(ca.optimum == cb.optimum);
  CHECK(ca.nodes_explored == cb.nodes_explored);
  CHECK(ca.extremal == cb.extremal);
}

TEST_CASE("optimum respects valid exact upper bounds") {
  for (auto [r, n, k] : {std::tuple{3, 6, 3}, {3, 7, 3}, {4, 6, 3}}) {
    auto res = exact_f(r, n, k);
    if (res.proof == Maximality::Timeout) continue;
    auto rep = hypergraph_bounds(r, n, k, MatchingOptions{BigInt(200)});
    for (const auto& v : rep.values) {
      if (!v.valid || v.conjectural) continue;
      if (v.kind != BoundKind::Upper && v.kind != BoundKind::Exact) continue;
      CHECK(BigInt(res.optimum) <= rat_floor(v.value));
    }
  }
}

TEST_SUITE_END();
