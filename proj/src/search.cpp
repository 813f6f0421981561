#include "focal/search.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "focal/bounds.hpp"
#include "focal/designs.hpp"
#include "focal/detect.hpp"
#include "focal/orthogonal_array.hpp"
#include "focal/packing.hpp"

namespace focal {

namespace {

using util::Mask;

// Branch-and-bound core shared by the family and code searches. Items are
// identified by their "difference" structure: diff(a,b) must be a nonempty
// mask for distinct items, and a set of items contains an r-focal
// configuration with focus a iff the masks {diff(a,b)} contain r-1 pairwise
// disjoint members.
struct Searcher {
  const std::vector<Mask>& items;  // hypergraph: edge masks; code: words
  bool code_mode;                  // diff convention
  int word_len = 0;                // code mode only
  const std::vector<std::vector<int>>* words = nullptr;  // code mode
  int r;
  std::uint64_t budget;
  std::optional<long long> cap;

  std::vector<std::size_t> chosen;
  std::vector<std::vector<Mask>> diff_lists;  // per chosen item
  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;
  bool timed_out = false;
  bool cap_met = false;
  // Debug builds re-run the from-scratch scan on every accepted state to
  // confirm the incremental detection (no-op when unset).
  std::function<bool(const std::vector<std::size_t>&)> debug_focal_free;

  Mask diff(std::size_t a, std::size_t b) const {
    if (!code_mode) return items[a] & ~items[b];
    Mask d = 0;
    const auto& wa = (*words)[a];
    const auto& wb = (*words)[b];
    for (int i = 0; i < word_len; ++i)
      if (wa[static_cast<std::size_t>(i)] != wb[static_cast<std::size_t>(i)])
        d |= Mask{1} << i;
    return d;
  }

  bool compatible(std::size_t e) const {
    // e as a new focus
    std::vector<Mask> diffs;
    diffs.reserve(chosen.size());
    for (std::size_t j : chosen) diffs.push_back(diff(e, j));
    if (util::has_disjoint_system(diffs, r - 1)) return false;
    // an already chosen item as focus, the new difference forced into play
    for (std::size_t idx = 0; idx < chosen.size(); ++idx) {
      const Mask forced = diff(chosen[idx], e);
      if (util::has_disjoint_system_avoiding(diff_lists[idx], forced, r - 2))
        return false;
    }
    return true;
  }

  void push(std::size_t e) {
    std::vector<Mask> mine;
    mine.reserve(chosen.size());
    for (std::size_t idx = 0; idx < chosen.size(); ++idx) {
      mine.push_back(diff(e, chosen[idx]));
      diff_lists[idx].push_back(diff(chosen[idx], e));
    }
    chosen.push_back(e);
    diff_lists.push_back(std::move(mine));
    assert(!debug_focal_free || debug_focal_free(chosen));
  }

  void pop() {
    chosen.pop_back();
    diff_lists.pop_back();
    for (auto& dl : diff_lists) dl.pop_back();
  }

  void record_if_better() {
    if (chosen.size() > best.size()) {
      best = chosen;
      if (cap && static_cast<long long>(best.size()) >= *cap) cap_met = true;
    }
  }

  void dfs(const std::vector<std::size_t>& cands) {
    if (timed_out || cap_met) return;
    if (++nodes > budget) {
      timed_out = true;
      return;
    }
    record_if_better();
    if (cap_met) return;
    for (std::size_t pos = 0; pos < cands.size(); ++pos) {
      if (chosen.size() + (cands.size() - pos) <= best.size()) break;
      const std::size_t e = cands[pos];
      push(e);
      std::vector<std::size_t> next;
      next.reserve(cands.size() - pos - 1);
      for (std::size_t p2 = pos + 1; p2 < cands.size(); ++p2)
        if (compatible(cands[p2])) next.push_back(cands[p2]);
      dfs(next);
      pop();
      if (timed_out || cap_met) return;
    }
  }
};

// Relabels vertices so the family's first edge becomes {1..k}; focal
// structure is invariant under vertex permutations.
UniformFamily relabel_to_prefix(const UniformFamily& fam) {
  if (fam.size() == 0) return fam;
  const auto& first = fam.edges().front();
  const int n = fam.ground_size();
  std::vector<int> perm(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (int v : first) perm[static_cast<std::size_t>(v)] = next++;
  for (int v = 1; v <= n; ++v)
    if (!perm[static_cast<std::size_t>(v)]) perm[static_cast<std::size_t>(v)] = next++;
  std::vector<std::vector<int>> edges;
  for (const auto& e : fam.edges()) {
    std::vector<int> img;
    for (int v : e) img.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    edges.push_back(std::move(img));
  }
  return UniformFamily(n, fam.uniformity(), std::move(edges));
}

// Per-coordinate symbol swaps mapping the lexicographically first word to
// all ones; focal structure only sees per-coordinate equality patterns.
QaryCode relabel_to_ones(const QaryCode& code) {
  if (code.size() == 0) return code;
  const auto first = code.words().front();
  std::vector<std::vector<int>> words;
  for (const auto& w : code.words()) {
    std::vector<int> img(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      int s = w[i];
      if (s == first[i])
        s = 1;
      else if (s == 1)
        s = first[i];
      img[i] = s;
    }
    words.push_back(std::move(img));
  }
  return QaryCode(code.length(), code.alphabet(), std::move(words));
}

std::optional<BigInt> admissible_cap_hypergraph(int r, int n, int k) {
  if (k < 2) return std::nullopt;
  auto rep = hypergraph_bounds(r, n, k, MatchingOptions{BigInt(200)});
  return rep.best_admissible_upper();
}

std::optional<BigInt> admissible_cap_code(int r, int n, int q) {
  auto rep = code_bounds(r, n, q, MatchingOptions{BigInt(200)});
  return rep.best_admissible_upper();
}

}  // namespace

HypergraphSearchResult exact_f(int r, int n, int k, const SearchOptions& opt) {
  if (r < 3) throw std::invalid_argument("exact_f: r >= 3 required");
  if (k < 1 || n < k) throw std::invalid_argument("exact_f: need n >= k >= 1");
  if (binom(n, k) > opt.candidate_cap)
    throw std::invalid_argument("exact_f: C(n,k) exceeds the candidate cap");

  HypergraphSearchResult res;
  res.r = r;
  res.n = n;
  res.k = k;

  const auto subsets = util::all_subsets(n, k);
  if (subsets.empty()) {
    res.extremal = UniformFamily(n, k, {});
    return res;
  }
  std::vector<Mask> masks;
  masks.reserve(subsets.size());
  for (const auto& e : subsets) masks.push_back(util::mask_of(e));

  // incumbent from the best available construction, relabeled so that it
  // contains {1..k} (the symmetry representative the search fixes)
  UniformFamily seed(n, k, {subsets.front()});
  if (opt.seed_with_construction && k >= 2) {
    const int t = threshold_t(r, k);
    std::optional<UniformFamily> built;
    if (t >= 1 && t <= k)
      if (auto d = design_small(n, k, t)) built = std::move(*d);
    if (!built && t >= 2 && k > t)
      built = greedy_packing(n, k, t, opt.construction_seed);
    if (built && built->size() > seed.size()) seed = std::move(*built);
  }
  seed = relabel_to_prefix(seed);
  if (find_focal(seed, r).has_value())
    throw std::logic_error("exact_f: incumbent seed is not focal-free");

  if (opt.use_upper_bound_caps) res.upper_cap = admissible_cap_hypergraph(r, n, k);

  Searcher s{masks,
             false,
             0,
             nullptr,
             r,
             opt.node_budget,
             res.upper_cap ? std::optional<long long>(
                                 res.upper_cap->convert_to<long long>())
                           : std::nullopt,
             {},
             {},
             {},
             0,
             false,
             false,
             {}};

#ifndef NDEBUG
  s.debug_focal_free = [&](const std::vector<std::size_t>& idxs) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i : idxs) edges.push_back(subsets[i]);
    return !find_focal(UniformFamily(n, k, std::move(edges)), r).has_value();
  };
#endif

  // seed indices (relabeled seed edges are candidates by construction)
  for (const auto& e : seed.edges()) {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), e);
    s.best.push_back(static_cast<std::size_t>(it - subsets.begin()));
  }
  if (s.cap && static_cast<long long>(s.best.size()) >= *s.cap) s.cap_met = true;

  if (!s.cap_met) {
    // symmetry: some maximum family contains {1..k} after relabeling
    s.push(0);
    std::vector<std::size_t> cands;
    for (std::size_t i = 1; i < masks.size(); ++i)
      if (s.compatible(i)) cands.push_back(i);
    s.dfs(cands);
  }

  std::vector<std::vector<int>> edges;
  for (std::size_t i : s.best) edges.push_back(subsets[i]);
  res.extremal = UniformFamily(n, k, std::move(edges));
  res.optimum = s.best.size();
  res.nodes_explored = s.nodes;
  res.proof = s.timed_out ? Maximality::Timeout
              : s.cap_met ? Maximality::BranchAndBoundComplete
                          : Maximality::Exhaustive;
  assert(!find_focal(res.extremal, r).has_value());
  return res;
}

CodeSearchResult exact_f_code(int r, int n, int q, const SearchOptions& opt) {
  if (r < 3) throw std::invalid_argument("exact_f_code: r >= 3 required");
  if (n < 1 || q < 2)
    throw std::invalid_argument("exact_f_code: need n >= 1, q >= 2");
  if (n > 64) throw std::invalid_argument("exact_f_code: n above 64");
  BigInt space = 1;
  for (int i = 0; i < n; ++i) space *= q;
  if (space > opt.word_cap)
    throw std::invalid_argument("exact_f_code: q^n exceeds the word cap");

  CodeSearchResult res;
  res.r = r;
  res.n = n;
  res.q = q;

  // all words in lexicographic order
  std::vector<std::vector<int>> words;
  words.reserve(space.convert_to<std::size_t>());
  std::vector<int> cur(static_cast<std::size_t>(n), 1);
  while (true) {
    words.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == q) {
      cur[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }

  QaryCode seed(n, q, {words.front()});
  if (opt.seed_with_construction) {
    std::optional<QaryCode> built;
    try {
      built = focal_free_code_build(r, n, q);
    } catch (const std::invalid_argument&) {
      if (n >= 2) {
        try {
          built = focal_free_code_build_packing(r, n, q,
                                                opt.construction_seed, 2);
        } catch (const std::invalid_argument&) {
        }
      }
    }
    if (built && built->size() > seed.size()) seed = std::move(*built);
  }
  seed = relabel_to_ones(seed);
  if (find_focal(seed, r).has_value())
    throw std::logic_error("exact_f_code: incumbent seed is not focal-free");

  if (opt.use_upper_bound_caps && n >= 2)
    res.upper_cap = admissible_cap_code(r, n, q);

  std::vector<Mask> dummy;
  Searcher s{dummy,
             true,
             n,
             &words,
             r,
             opt.node_budget,
             res.upper_cap ? std::optional<long long>(
                                 res.upper_cap->convert_to<long long>())
                           : std::nullopt,
             {},
             {},
             {},
             0,
             false,
             false,
             {}};

#ifndef NDEBUG
  s.debug_focal_free = [&](const std::vector<std::size_t>& idxs) {
    std::vector<std::vector<int>> picked;
    for (std::size_t i : idxs) picked.push_back(words[i]);
    return !find_focal(QaryCode(n, q, std::move(picked)), r).has_value();
  };
#endif

  for (const auto& w : seed.words()) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    s.best.push_back(static_cast<std::size_t>(it - words.begin()));
  }
  if (s.cap && static_cast<long long>(s.best.size()) >= *s.cap) s.cap_met = true;

  if (!s.cap_met) {
    s.push(0);  // all-ones word, the symmetry representative
    std::vector<std::size_t> cands;
    for (std::size_t i = 1; i < words.size(); ++i)
      if (s.compatible(i)) cands.push_back(i);
    s.dfs(cands);
  }

  std::vector<std::vector<int>> chosen_words;
  for (std::size_t i : s.best) chosen_words.push_back(words[i]);
  res.extremal = QaryCode(n, q, std::move(chosen_words));
  res.optimum = s.best.size();
  res.nodes_explored = s.nodes;
  res.proof = s.timed_out ? Maximality::Timeout
              : s.cap_met ? Maximality::BranchAndBoundComplete
                          : Maximality::Exhaustive;
  assert(!find_focal(res.extremal, r).has_value());
  return res;
}

}  // namespace focal
