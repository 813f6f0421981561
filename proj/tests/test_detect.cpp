#include <doctest.h>

#include <map>

#include "focal/detect.hpp"
#include "helpers.hpp"

using namespace focal;

TEST_SUITE_BEGIN("detect");

TEST_CASE("is_focal_tuple definition checks") {
  auto hg = is_focal_tuple({1, 2}, {{1, 3}, {2, 3}}, 3);
  CHECK(hg.focal);
  CHECK(hg.match_counts == std::vector<int>{1, 1});

  auto code = is_focal_tuple_code({1, 1}, {{1, 2}, {2, 1}}, 2);
  CHECK(code.focal);
  CHECK(code.match_counts == std::vector<int>{1, 1});

  auto bad = is_focal_tuple({1, 2}, {{3, 4}, {2, 3}}, 4);
  CHECK(!bad.focal);
  CHECK(bad.match_counts == std::vector<int>{0, 1});

  CHECK_THROWS_AS(is_focal_tuple({1, 2}, {{1, 2}, {2, 3}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_focal_tuple_code({1, 1}, {{1, 2}, {1, 2, 1}}, 2),
                  std::invalid_argument);
}

TEST_CASE("find_focal on the triangle") {
  UniformFamily tri(3, 2, {{1, 2}, {1, 3}, {2, 3}});
  auto w = find_focal(tri, 3);
  REQUIRE(w.has_value());
  CHECK(w->focus == std::vector<int>{1, 2});
  auto chk = is_focal_tuple(w->focus, w->members, 3);
  CHECK(chk.focal);
  CHECK(chk.match_counts == w->match_counts);
}

TEST_CASE("find_focal none cases") {
  CHECK(!find_focal(testutil::fano(), 3).has_value());
  UniformFamily two(4, 2, {{1, 2}, {3, 4}});
  CHECK(!find_focal(two, 3).has_value());  // fewer than r members
}

TEST_CASE("witness soundness includes disjoint differences") {
  util::Rng rng(7);
  int witnesses = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const int k = 2 + static_cast<int>(rng.below(2));
    auto pool = util::all_subsets(n, k);
    rng.shuffle(pool);
    pool.resize(std::min<std::size_t>(pool.size(), 4 + rng.below(8)));
    UniformFamily fam(n, k, pool);
    const int r = 3 + static_cast<int>(rng.below(2));
    auto w = find_focal(fam, r);
    if (!w) continue;
    ++witnesses;
    auto chk = is_focal_tuple(w->focus, w->members, n);
    REQUIRE(chk.focal);
    // difference sets pairwise disjoint
    for (std::size_t i = 0; i < w->members.size(); ++i)
      for (std::size_t j = i + 1; j < w->members.size(); ++j) {
        auto di = w->focus;
        auto dj = w->focus;
        auto strip = [](std::vector<int> base, const std::vector<int>& m) {
          std::vector<int> out;
          for (int v : base)
            if (std::find(m.begin(), m.end(), v) == m.end()) out.push_back(v);
          return out;
        };
        REQUIRE(testutil::sets_disjoint(strip(di, w->members[i]),
                                        strip(dj, w->members[j])));
      }
  }
  CHECK(witnesses > 10);  // the sweep actually exercised the path
}

TEST_CASE("completeness against tuple-scan oracle on families") {
  util::Rng rng(99);
  for (int iter = 0; iter < 250; ++iter) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const int k = 2 + static_cast<int>(rng.below(std::min(n, 4) - 1));
    auto pool = util::all_subsets(n, k);
    rng.shuffle(pool);
    pool.resize(std::min<std::size_t>(pool.size(), rng.below(13)));
    UniformFamily fam(n, k, pool);
    for (int r : {3, 4}) {
      const bool oracle = testutil::oracle_contains_focal_family(fam, r);
      CHECK(find_focal(fam, r).has_value() == oracle);
      CHECK(find_focal_exhaustive(fam, r).has_value() == oracle);
    }
  }
}

TEST_CASE("completeness against tuple-scan oracle on codes") {
  util::Rng rng(1234);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const int q = 2 + static_cast<int>(rng.below(2));
    std::size_t space = 1;
    for (int j = 0; j < n; ++j) space *= static_cast<std::size_t>(q);
    std::vector<std::vector<int>> words;
    const std::size_t want = std::min<std::size_t>(3 + rng.below(8), space);
    while (words.size() < want) {
      std::vector<int> w;
      for (int j = 0; j < n; ++j)
        w.push_back(1 + static_cast<int>(rng.below(q)));
      if (std::find(words.begin(), words.end(), w) == words.end())
        words.push_back(w);
    }
    QaryCode code(n, q, words);
    for (int r : {3, 4}) {
      const bool oracle = testutil::oracle_contains_focal_code(code, r);
      CHECK(find_focal(code, r).has_value() == oracle);
      CHECK(find_focal_exhaustive(code, r).has_value() == oracle);
    }
  }
}

TEST_CASE("own subsets examples") {
  UniformFamily f1(5, 3, {{1, 2, 3}, {1, 4, 5}});
  auto rep = own_subsets(f1, {1, 2, 3}, 2);
  CHECK(rep.own_count == 3);
  CHECK(rep.non_own.empty());

  UniformFamily f2(4, 3, {{1, 2, 3}, {1, 2, 4}});
  auto rep2 = own_subsets(f2, {1, 2, 3}, 2);
  CHECK(rep2.own_count == 2);
  REQUIRE(rep2.non_own.size() == 1);
  CHECK(rep2.non_own[0] == std::vector<int>{1, 2});

  UniformFamily single(4, 2, {{1, 2}});
  for (int s = 0; s <= 2; ++s) {
    auto r = own_subsets(single, {1, 2}, s);
    CHECK(r.non_own.empty());
    CHECK(BigInt(r.own_count) == binom(2, s));
  }

  CHECK_THROWS_AS(own_subsets(f1, {2, 3, 4}, 2), std::invalid_argument);
}

TEST_CASE("own subsequences") {
  QaryCode c(3, 2, {{1, 1, 1}, {1, 1, 2}, {2, 2, 2}});
  auto rep = own_subsequences(c, {1, 1, 1}, 2);
  // positions {1,2} match 112; {1,3} and {2,3} are own
  CHECK(rep.own_count == 2);
  REQUIRE(rep.non_own.size() == 1);
  CHECK(rep.non_own[0] == std::vector<int>{1, 2});
}

TEST_CASE("own counts partition the s-subsets") {
  util::Rng rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const int k = 2 + static_cast<int>(rng.below(3));
    auto pool = util::all_subsets(n, k);
    rng.shuffle(pool);
    pool.resize(std::min(pool.size(), std::max<std::size_t>(1, rng.below(8))));
    UniformFamily fam(n, k, pool);
    const auto& probe = fam.edges()[rng.below(fam.size())];
    const int s = static_cast<int>(rng.below(k + 1));
    auto rep = own_subsets(fam, probe, s);
    CHECK(BigInt(rep.own_count) + BigInt(rep.non_own.size()) == binom(k, s));
  }
}

TEST_CASE("monotonicity: new members never create own subsets") {
  util::Rng rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 5 + static_cast<int>(rng.below(3));
    const int k = 3;
    auto pool = util::all_subsets(n, k);
    rng.shuffle(pool);
    const std::size_t base = 2 + rng.below(5);
    if (pool.size() < base + 1) continue;
    std::vector<std::vector<int>> edges(pool.begin(), pool.begin() + base);
    UniformFamily before(n, k, edges);
    edges.push_back(pool[base]);
    UniformFamily after(n, k, edges);
    for (const auto& e : before.edges()) {
      for (int s = 1; s <= k; ++s) {
        auto rb = own_subsets(before, e, s);
        auto ra = own_subsets(after, e, s);
        for (const auto& t : rb.non_own)
          CHECK(std::find(ra.non_own.begin(), ra.non_own.end(), t) !=
                ra.non_own.end());
      }
    }
  }
}

TEST_CASE("us_profile basics and oracle") {
  QaryCode one(3, 2, {{1, 2, 1}});
  for (auto& [s, count] : us_profile(one, 1)) CHECK(count == 1);

  // full cube: nothing is own once d >= 1
  std::vector<std::vector<int>> cube;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) cube.push_back({a, b, c});
  QaryCode full(3, 2, cube);
  for (int d = 1; d <= 3; ++d)
    for (auto& [s, count] : us_profile(full, d)) CHECK(count == 0);

  // random code vs direct group-by-restriction oracle
  util::Rng rng(400);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 3 + static_cast<int>(rng.below(3));
    const int q = 2 + static_cast<int>(rng.below(2));
    std::vector<std::vector<int>> words;
    const int want = 2 + static_cast<int>(rng.below(10));
    while (static_cast<int>(words.size()) < want) {
      std::vector<int> w;
      for (int j = 0; j < n; ++j)
        w.push_back(1 + static_cast<int>(rng.below(q)));
      if (std::find(words.begin(), words.end(), w) == words.end())
        words.push_back(w);
    }
    QaryCode code(n, q, words);
    const int d = 1 + static_cast<int>(rng.below(n));
    auto prof = us_profile(code, d);
    for (const auto& s : util::all_subsets(n, n - d)) {
      std::map<std::vector<int>, int> groups;
      for (const auto& w : code.words()) {
        std::vector<int> restricted;
        for (int i : s) restricted.push_back(w[static_cast<std::size_t>(i - 1)]);
        ++groups[restricted];
      }
      std::size_t own = 0;
      for (const auto& w : code.words()) {
        std::vector<int> restricted;
        for (int i : s) restricted.push_back(w[static_cast<std::size_t>(i - 1)]);
        own += groups[restricted] == 1;
      }
      REQUIRE(prof.at(s) == own);
    }
  }
}

TEST_CASE("partition cover identity on focal-free codes") {
  QaryCode c(2, 2, {{1, 1}, {2, 2}});
  CHECK(partition_cover_holds(c, {{1}, {2}}));
  CHECK_THROWS_AS(partition_cover_holds(c, {{1}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_cover_holds(c, {{1}}), std::invalid_argument);
}

TEST_SUITE_END();
