#include "focal/designs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "focal/bounds.hpp"

namespace focal {

bool is_design(const UniformFamily& fam, int t) {
  if (t < 0 || t > fam.uniformity()) return false;
  std::map<std::vector<int>, int> cover;
  for (const auto& sub : util::all_subsets(fam.ground_size(), t)) cover[sub] = 0;
  for (const auto& e : fam.edges())
    for (const auto& idx : util::all_subsets(fam.uniformity(), t)) {
      std::vector<int> sub;
      sub.reserve(idx.size());
      for (int i : idx) sub.push_back(e[static_cast<std::size_t>(i - 1)]);
      auto it = cover.find(sub);
      if (it == cover.end()) return false;
      if (++it->second > 1) return false;
    }
  for (const auto& [sub, c] : cover)
    if (c != 1) return false;
  return true;
}

namespace {

// Cyclic development of base blocks mod v, 0-based points shifted to 1-based.
UniformFamily develop(int v, const std::vector<std::vector<int>>& bases) {
  std::vector<std::vector<int>> blocks;
  for (const auto& base : bases)
    for (int s = 0; s < v; ++s) {
      std::vector<int> b;
      for (int x : base) b.push_back((x + s) % v + 1);
      blocks.push_back(std::move(b));
    }
  return UniformFamily(v, static_cast<int>(bases.front().size()),
                       std::move(blocks));
}

// Bose triple system on Z_m x {0,1,2}, m odd; point (x,i) -> 3x + i + 1.
UniformFamily bose_sts(int m) {
  const int inv2 = (m + 1) / 2;  // 2 * inv2 == 1 (mod m)
  auto pt = [m](int x, int i) { return 3 * (x % m) + i + 1; };
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < m; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        blocks.push_back(
            {pt(x, i), pt(y, i), pt((x + y) * inv2 % m, (i + 1) % 3)});
  return UniformFamily(3 * m, 3, std::move(blocks));
}

// The 3-(8,4,1) design: Fano blocks extended by the eighth point, plus the
// complements of the Fano blocks.
UniformFamily design_8_4_3() {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> fano{i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1};
    std::sort(fano.begin(), fano.end());
    auto ext = fano;
    ext.push_back(8);
    blocks.push_back(ext);
    std::vector<int> comp;
    for (int v = 1; v <= 7; ++v)
      if (std::find(fano.begin(), fano.end(), v) == fano.end())
        comp.push_back(v);
    blocks.push_back(comp);
  }
  return UniformFamily(8, 4, std::move(blocks));
}

std::optional<UniformFamily> catalog_lookup(int n, int k, int t) {
  if (k == t) {
    if (binom(n, k) > 20000) return std::nullopt;  // keep the catalog small
    return UniformFamily(n, k, util::all_subsets(n, k));
  }
  if (n == k) return UniformFamily(n, k, {util::all_subsets(n, k).front()});
  if (k == 3 && t == 2) {
    switch (n) {
      case 7:
        return develop(7, {{0, 1, 3}});
      case 13:
        return develop(13, {{0, 1, 4}, {0, 2, 7}});
      case 9:
        return bose_sts(3);
      case 15:
        return bose_sts(5);
      default:
        return std::nullopt;
    }
  }
  if (n == 8 && k == 4 && t == 3) return design_8_4_3();
  return std::nullopt;
}

}  // namespace

std::optional<UniformFamily> design_small(int n, int k, int t) {
  if (t < 1 || t > k || k > n) return std::nullopt;
  auto fam = catalog_lookup(n, k, t);
  if (!fam) return std::nullopt;
  const BigInt expected = binom(n, t) / binom(k, t);
  if (BigInt(fam->size()) != expected || !is_design(*fam, t))
    throw std::logic_error("design_small: catalog entry failed verification");
  return fam;
}

UniformFamily greedy_packing(int n, int k, int t, std::uint64_t seed) {
  if (!(n >= k && k > t && t >= 2))
    throw std::invalid_argument("greedy_packing: need n >= k > t >= 2");
  auto pool = util::all_subsets(n, k);
  util::Rng rng(seed);
  rng.shuffle(pool);

  std::vector<util::Mask> kept;
  std::vector<std::vector<int>> edges;
  for (const auto& e : pool) {
    const util::Mask m = util::mask_of(e);
    bool ok = true;
    for (util::Mask other : kept)
      if (std::popcount(m & other) >= t) {
        ok = false;
        break;
      }
    if (ok) {
      kept.push_back(m);
      edges.push_back(e);
    }
  }
  UniformFamily fam(n, k, std::move(edges));
  if (!is_packing(fam, t))
    throw std::logic_error("greedy_packing: verification failed");
  return fam;
}

}  // namespace focal
