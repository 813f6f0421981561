#include "focal/detect.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace focal {

namespace {

using util::Mask;

void check_distinct(const std::vector<const std::vector<int>*>& all) {
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (*all[i] == *all[j])
        throw std::invalid_argument("focal tuple: inputs must be distinct");
}

// Coordinate agreement mask of two equal-length words.
Mask agreement(const std::vector<int>& x, const std::vector<int>& y) {
  Mask m = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == y[i]) m |= Mask{1} << i;
  return m;
}

void check_len64(const QaryCode& code) {
  if (code.length() > 64)
    throw std::invalid_argument("focal detection: length above 64");
}

// Iterates (r-1)-subsets of `pool` in lexicographic index order.
template <class Fn>
bool for_each_combination(std::size_t pool, int take, Fn&& fn) {
  if (take < 0 || static_cast<std::size_t>(take) > pool) return false;
  std::vector<std::size_t> idx(static_cast<std::size_t>(take));
  for (int i = 0; i < take; ++i) idx[static_cast<std::size_t>(i)] =
      static_cast<std::size_t>(i);
  while (true) {
    if (fn(idx)) return true;
    int i = take - 1;
    while (i >= 0 &&
           idx[static_cast<std::size_t>(i)] ==
               pool - static_cast<std::size_t>(take - i))
      --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < take; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct DiffEntry {
  Mask diff;
  std::size_t member;
};

// Unique nonempty difference masks for one focus, colex (ascending mask)
// order, keeping the canonically first member for each mask.
std::vector<DiffEntry> sort_unique(std::vector<DiffEntry> out) {
  std::stable_sort(out.begin(), out.end(),
                   [](const DiffEntry& a, const DiffEntry& b) {
                     if (a.diff != b.diff) return a.diff < b.diff;
                     return a.member < b.member;
                   });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DiffEntry& a, const DiffEntry& b) {
                          return a.diff == b.diff;
                        }),
            out.end());
  return out;
}

}  // namespace

TupleCheck is_focal_tuple(const std::vector<int>& focus,
                          const std::vector<std::vector<int>>& members,
                          int n) {
  if (members.size() < 2)
    throw std::invalid_argument("focal tuple: need r-1 >= 2 members");
  std::vector<const std::vector<int>*> all{&focus};
  for (const auto& m : members) all.push_back(&m);
  for (const auto* s : all)
    for (int v : *s)
      if (v < 1 || v > n)
        throw std::invalid_argument("focal tuple: element outside [n]");
  check_distinct(all);

  const int r = static_cast<int>(members.size()) + 1;
  TupleCheck out;
  out.match_counts.reserve(focus.size());
  bool ok = true;
  for (int x : focus) {
    int c = 0;
    for (const auto& m : members)
      c += std::find(m.begin(), m.end(), x) != m.end();
    out.match_counts.push_back(c);
    ok = ok && c >= r - 2;
  }
  out.focal = ok;
  return out;
}

TupleCheck is_focal_tuple_code(const std::vector<int>& focus,
                               const std::vector<std::vector<int>>& members,
                               int q) {
  if (members.size() < 2)
    throw std::invalid_argument("focal tuple: need r-1 >= 2 members");
  std::vector<const std::vector<int>*> all{&focus};
  for (const auto& m : members) all.push_back(&m);
  for (const auto* w : all) {
    if (w->size() != focus.size())
      throw std::invalid_argument("focal tuple: length mismatch");
    for (int s : *w)
      if (s < 1 || s > q)
        throw std::invalid_argument("focal tuple: symbol outside [q]");
  }
  check_distinct(all);

  const int r = static_cast<int>(members.size()) + 1;
  TupleCheck out;
  out.match_counts.reserve(focus.size());
  bool ok = true;
  for (std::size_t i = 0; i < focus.size(); ++i) {
    int c = 0;
    for (const auto& m : members) c += (m[i] == focus[i]);
    out.match_counts.push_back(c);
    ok = ok && c >= r - 2;
  }
  out.focal = ok;
  return out;
}

std::optional<FocalWitness> find_focal(const UniformFamily& fam, int r,
                                       const DetectOptions& opt) {
  if (r < 3) throw std::invalid_argument("find_focal: r must be >= 3");
  if (fam.size() < static_cast<std::size_t>(r)) return std::nullopt;
  const auto masks = util::masks_of(fam);

  for (std::size_t f = 0; f < masks.size(); ++f) {
    std::vector<DiffEntry> raw;
    raw.reserve(masks.size() - 1);
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (j == f) continue;
      const Mask d = masks[f] & ~masks[j];
      if (d == 0) continue;  // cannot take part in a disjoint system
      raw.push_back({d, j});
    }
    auto entries = sort_unique(std::move(raw));
    std::vector<Mask> diffs;
    std::vector<std::size_t> owners;
    diffs.reserve(entries.size());
    owners.reserve(entries.size());
    for (const auto& e : entries) {
      diffs.push_back(e.diff);
      owners.push_back(e.member);
    }
    if (auto sys = util::find_disjoint_system(diffs, r - 1)) {
      FocalWitness w;
      w.code = false;
      w.r = r;
      w.focus = fam.edges()[f];
      for (std::size_t idx : *sys) w.members.push_back(fam.edges()[owners[idx]]);
      auto chk = is_focal_tuple(w.focus, w.members, fam.ground_size());
      if (!chk.focal)
        throw std::logic_error("find_focal: witness failed re-validation");
      w.match_counts = std::move(chk.match_counts);
      return w;
    }
  }
  if (opt.certify_exhaustive &&
      binom(static_cast<long long>(fam.size()) - 1, r - 1) <=
          opt.exhaustive_tuple_cap) {
    // The difference-set test is also necessary; the slow scan double-checks
    // "none" results instead of trusting that.
    if (auto w = find_focal_exhaustive(fam, r)) return w;
  }
  return std::nullopt;
}

std::optional<FocalWitness> find_focal(const QaryCode& code, int r,
                                       const DetectOptions& opt) {
  if (r < 3) throw std::invalid_argument("find_focal: r must be >= 3");
  if (code.size() < static_cast<std::size_t>(r)) return std::nullopt;
  check_len64(code);
  const auto& words = code.words();
  const Mask full = code.length() == 64
                        ? ~Mask{0}
                        : (Mask{1} << code.length()) - 1;

  for (std::size_t f = 0; f < words.size(); ++f) {
    std::vector<DiffEntry> raw;
    raw.reserve(words.size() - 1);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (j == f) continue;
      const Mask d = full & ~agreement(words[f], words[j]);
      if (d == 0) continue;
      raw.push_back({d, j});
    }
    auto entries = sort_unique(std::move(raw));
    std::vector<Mask> diffs;
    std::vector<std::size_t> owners;
    for (const auto& e : entries) {
      diffs.push_back(e.diff);
      owners.push_back(e.member);
    }
    if (auto sys = util::find_disjoint_system(diffs, r - 1)) {
      FocalWitness w;
      w.code = true;
      w.r = r;
      w.focus = words[f];
      for (std::size_t idx : *sys) w.members.push_back(words[owners[idx]]);
      auto chk = is_focal_tuple_code(w.focus, w.members, code.alphabet());
      if (!chk.focal)
        throw std::logic_error("find_focal: witness failed re-validation");
      w.match_counts = std::move(chk.match_counts);
      return w;
    }
  }
  if (opt.certify_exhaustive &&
      binom(static_cast<long long>(code.size()) - 1, r - 1) <=
          opt.exhaustive_tuple_cap) {
    if (auto w = find_focal_exhaustive(code, r)) return w;
  }
  return std::nullopt;
}

std::optional<FocalWitness> find_focal_exhaustive(const UniformFamily& fam,
                                                  int r) {
  if (r < 3) throw std::invalid_argument("find_focal: r must be >= 3");
  if (fam.size() < static_cast<std::size_t>(r)) return std::nullopt;
  const auto masks = util::masks_of(fam);
  const std::size_t m = masks.size();

  for (std::size_t f = 0; f < m; ++f) {
    std::vector<std::size_t> others;
    others.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != f) others.push_back(j);
    std::optional<std::vector<std::size_t>> hit;
    for_each_combination(others.size(), r - 1,
                         [&](const std::vector<std::size_t>& idx) {
                           // focal <=> the focus\member sets are pairwise
                           // disjoint
                           Mask seen = 0;
                           for (std::size_t i : idx) {
                             const Mask d = masks[f] & ~masks[others[i]];
                             if (d & seen) return false;
                             seen |= d;
                           }
                           hit = idx;
                           return true;
                         });
    if (hit) {
      FocalWitness w;
      w.code = false;
      w.r = r;
      w.focus = fam.edges()[f];
      for (std::size_t i : *hit) w.members.push_back(fam.edges()[others[i]]);
      auto chk = is_focal_tuple(w.focus, w.members, fam.ground_size());
      if (!chk.focal)
        throw std::logic_error("exhaustive scan: inconsistent witness");
      w.match_counts = std::move(chk.match_counts);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<FocalWitness> find_focal_exhaustive(const QaryCode& code,
                                                  int r) {
  if (r < 3) throw std::invalid_argument("find_focal: r must be >= 3");
  if (code.size() < static_cast<std::size_t>(r)) return std::nullopt;
  check_len64(code);
  const auto& words = code.words();
  const std::size_t m = words.size();
  const Mask full = code.length() == 64
                        ? ~Mask{0}
                        : (Mask{1} << code.length()) - 1;

  // All pairwise disagreement masks up front.
  std::vector<std::vector<Mask>> diff(m, std::vector<Mask>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      diff[i][j] = diff[j][i] = full & ~agreement(words[i], words[j]);

  for (std::size_t f = 0; f < m; ++f) {
    std::vector<std::size_t> others;
    others.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != f) others.push_back(j);
    std::optional<std::vector<std::size_t>> hit;
    for_each_combination(others.size(), r - 1,
                         [&](const std::vector<std::size_t>& idx) {
                           Mask seen = 0;
                           for (std::size_t i : idx) {
                             const Mask d = diff[f][others[i]];
                             if (d & seen) return false;
                             seen |= d;
                           }
                           hit = idx;
                           return true;
                         });
    if (hit) {
      FocalWitness w;
      w.code = true;
      w.r = r;
      w.focus = words[f];
      for (std::size_t i : *hit) w.members.push_back(words[others[i]]);
      auto chk = is_focal_tuple_code(w.focus, w.members, code.alphabet());
      if (!chk.focal)
        throw std::logic_error("exhaustive scan: inconsistent witness");
      w.match_counts = std::move(chk.match_counts);
      return w;
    }
  }
  return std::nullopt;
}

OwnSubsetReport own_subsets(const UniformFamily& fam,
                            const std::vector<int>& edge, int s) {
  auto sorted = edge;
  std::sort(sorted.begin(), sorted.end());
  const auto& edges = fam.edges();
  if (!std::binary_search(edges.begin(), edges.end(), sorted))
    throw std::invalid_argument("own_subsets: edge not in family");
  if (s < 0 || s > fam.uniformity())
    throw std::invalid_argument("own_subsets: s out of range");

  std::vector<Mask> others;
  for (const auto& b : edges)
    if (b != sorted) others.push_back(util::mask_of(b));

  OwnSubsetReport rep;
  rep.subject = sorted;
  rep.s = s;
  for (const auto& idxs :
       util::all_subsets(static_cast<int>(sorted.size()), s)) {
    std::vector<int> t;
    t.reserve(idxs.size());
    for (int i : idxs) t.push_back(sorted[static_cast<std::size_t>(i - 1)]);
    const Mask tm = util::mask_of(t);
    bool own = true;
    for (Mask b : others)
      if ((tm & ~b) == 0) {
        own = false;
        break;
      }
    if (own)
      ++rep.own_count;
    else
      rep.non_own.push_back(std::move(t));
  }
  return rep;
}

OwnSubsetReport own_subsequences(const QaryCode& code,
                                 const std::vector<int>& word, int s) {
  const auto& words = code.words();
  if (!std::binary_search(words.begin(), words.end(), word))
    throw std::invalid_argument("own_subsequences: word not in code");
  if (s < 0 || s > code.length())
    throw std::invalid_argument("own_subsequences: s out of range");
  check_len64(code);

  std::vector<Mask> agree;
  for (const auto& y : words)
    if (y != word) agree.push_back(agreement(word, y));

  OwnSubsetReport rep;
  rep.subject = word;
  rep.s = s;
  for (const auto& t : util::all_subsets(code.length(), s)) {
    const Mask tm = util::mask_of(t);
    bool own = true;
    for (Mask a : agree)
      if ((tm & ~a) == 0) {
        own = false;
        break;
      }
    if (own)
      ++rep.own_count;
    else
      rep.non_own.push_back(t);
  }
  return rep;
}

std::map<std::vector<int>, std::size_t> us_profile(const QaryCode& code,
                                                   int d) {
  if (d < 0 || d > code.length())
    throw std::invalid_argument("us_profile: d out of range");
  check_len64(code);
  const auto& words = code.words();
  std::vector<std::vector<Mask>> agree(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (j != i) agree[i].push_back(agreement(words[i], words[j]));

  std::map<std::vector<int>, std::size_t> out;
  for (const auto& sub : util::all_subsets(code.length(), code.length() - d)) {
    const Mask sm = util::mask_of(sub);
    std::size_t count = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      bool own = true;
      for (Mask a : agree[i])
        if ((sm & ~a) == 0) {
          own = false;
          break;
        }
      count += own;
    }
    out.emplace(sub, count);
  }
  return out;
}

bool partition_cover_holds(const QaryCode& code,
                           const std::vector<std::vector<int>>& parts) {
  check_len64(code);
  const Mask full = code.length() == 64
                        ? ~Mask{0}
                        : (Mask{1} << code.length()) - 1;
  Mask seen = 0;
  std::vector<Mask> pm;
  for (const auto& p : parts) {
    if (p.empty())
      throw std::invalid_argument("partition_cover_holds: empty part");
    const Mask m = util::mask_of(p);
    if (m & seen)
      throw std::invalid_argument("partition_cover_holds: parts overlap");
    seen |= m;
    pm.push_back(m);
  }
  if (seen != full)
    throw std::invalid_argument("partition_cover_holds: parts miss indices");

  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool covered = false;
    for (Mask part : pm) {
      const Mask sm = full & ~part;
      bool own = true;
      for (std::size_t j = 0; j < words.size() && own; ++j) {
        if (j == i) continue;
        if ((sm & ~agreement(words[i], words[j])) == 0) own = false;
      }
      if (own) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace focal
