#pragma once

#include <algorithm>
#include <vector>

#include "focal/core.hpp"
#include "focal/detect.hpp"

namespace testutil {

// Fano plane, developed from the {1,2,4} difference set mod 7.
inline focal::UniformFamily fano() {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 7; ++i)
    blocks.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
  return focal::UniformFamily(7, 3, std::move(blocks));
}

inline bool sets_disjoint(const std::vector<int>& a,
                          const std::vector<int>& b) {
  std::vector<int> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

// Tuple-scan focal oracle, straight off the definition checker; independent
// of the library's difference-set search path.
inline bool oracle_contains_focal_family(const focal::UniformFamily& fam,
                                         int r) {
  const auto& e = fam.edges();
  const std::size_t m = e.size();
  if (m < static_cast<std::size_t>(r)) return false;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r - 1));
  for (std::size_t f = 0; f < m; ++f) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j)
      if (j != f) others.push_back(j);
    // odometer over (r-1)-subsets of `others`
    for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>(i);
    while (true) {
      std::vector<std::vector<int>> members;
      for (int i = 0; i < r - 1; ++i)
        members.push_back(e[others[idx[static_cast<std::size_t>(i)]]]);
      if (focal::is_focal_tuple(e[f], members, fam.ground_size()).focal)
        return true;
      int i = r - 2;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                           others.size() - static_cast<std::size_t>(r - 1 - i))
        --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r - 1; ++j)
        idx[static_cast<std::size_t>(j)] =
            idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return false;
}

inline bool oracle_contains_focal_code(const focal::QaryCode& code, int r) {
  const auto& w = code.words();
  const std::size_t m = w.size();
  if (m < static_cast<std::size_t>(r)) return false;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r - 1));
  for (std::size_t f = 0; f < m; ++f) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j)
      if (j != f) others.push_back(j);
    for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>(i);
    while (true) {
      std::vector<std::vector<int>> members;
      for (int i = 0; i < r - 1; ++i)
        members.push_back(w[others[idx[static_cast<std::size_t>(i)]]]);
      if (focal::is_focal_tuple_code(w[f], members, code.alphabet()).focal)
        return true;
      int i = r - 2;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                           others.size() - static_cast<std::size_t>(r - 1 - i))
        --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r - 1; ++j)
        idx[static_cast<std::size_t>(j)] =
            idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return false;
}

// Does the family contain `lambda` pairwise disjoint edges? Plain recursion
// over sorted vertex lists, no bitmasks.
inline bool oracle_has_matching(const std::vector<std::vector<int>>& edges,
                                int lambda) {
  if (lambda <= 0) return true;
  std::vector<std::size_t> stack;
  // DFS over indices
  struct Rec {
    const std::vector<std::vector<int>>& e;
    int want;
    bool run(std::size_t start, std::vector<std::size_t>& cur) {
      if (static_cast<int>(cur.size()) == want) return true;
      for (std::size_t i = start; i < e.size(); ++i) {
        bool ok = true;
        for (std::size_t j : cur)
          if (!sets_disjoint(e[i], e[j])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(i);
        if (run(i + 1, cur)) return true;
        cur.pop_back();
      }
      return false;
    }
  } rec{edges, lambda};
  return rec.run(0, stack);
}

}  // namespace testutil
