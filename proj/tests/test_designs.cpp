#include <doctest.h>

#include <map>

#include "focal/bounds.hpp"
#include "focal/designs.hpp"
#include "helpers.hpp"

using namespace focal;

namespace {

// independent exact-cover count
bool covers_each_t_set_once(const UniformFamily& fam, int t) {
  std::map<std::vector<int>, int> count;
  for (const auto& e : fam.edges())
    for (const auto& idx : util::all_subsets(fam.uniformity(), t)) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(e[static_cast<std::size_t>(i - 1)]);
      ++count[sub];
    }
  BigInt total = binom(fam.ground_size(), t);
  if (BigInt(count.size()) != total) return false;
  for (auto& [s, c] : count)
    if (c != 1) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("designs");

TEST_CASE("catalog designs verify against an independent cover count") {
  struct Row {
    int n, k, t;
    std::size_t blocks;
  };
  for (const auto& row : {Row{7, 3, 2, 7}, Row{9, 3, 2, 12}, Row{13, 3, 2, 26},
                          Row{15, 3, 2, 35}, Row{8, 4, 3, 14}}) {
    auto d = design_small(row.n, row.k, row.t);
    REQUIRE(d.has_value());
    CHECK(d->size() == row.blocks);
    CHECK(covers_each_t_set_once(*d, row.t));
    CHECK(is_design(*d, row.t));
  }
}

TEST_CASE("trivial designs") {
  auto all = design_small(5, 3, 3);
  REQUIRE(all.has_value());
  CHECK(all->size() == 10);
  CHECK(covers_each_t_set_once(*all, 3));

  auto single = design_small(4, 4, 2);
  REQUIRE(single.has_value());
  CHECK(single->size() == 1);
}

TEST_CASE("catalog misses") {
  CHECK(!design_small(6, 3, 2).has_value());  // no STS(6)
  CHECK(!design_small(11, 3, 2).has_value());
  CHECK(!design_small(10, 4, 3).has_value());
}

TEST_CASE("designs are focal-free along the packing argument") {
  CHECK(packing_is_focal_free_check(*design_small(7, 3, 2), 3));
  CHECK(packing_is_focal_free_check(*design_small(9, 3, 2), 3));
  // (8,4,3): threshold_t(4,4) = 3 and threshold_t(5,4) = 3
  CHECK(packing_is_focal_free_check(*design_small(8, 4, 3), 4));
  CHECK(packing_is_focal_free_check(*design_small(8, 4, 3), 5));
}

TEST_CASE("greedy packing") {
  auto p = greedy_packing(7, 3, 2, 1);
  CHECK(p.size() <= 7);  // C(7,2)/C(3,2)
  CHECK(is_packing(p, 2));

  auto p2 = greedy_packing(12, 4, 3, 9);
  CHECK(is_packing(p2, 3));
  for (std::size_t i = 0; i < p2.edges().size(); ++i)
    for (std::size_t j = i + 1; j < p2.edges().size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(p2.edges()[i].begin(), p2.edges()[i].end(),
                            p2.edges()[j].begin(), p2.edges()[j].end(),
                            std::back_inserter(inter));
      CHECK(inter.size() < 3);
    }

  CHECK_THROWS_AS(greedy_packing(5, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_packing(5, 3, 1, 0), std::invalid_argument);

  CHECK(greedy_packing(9, 3, 2, 4) == greedy_packing(9, 3, 2, 4));
}

TEST_SUITE_END();
