#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "focal/core.hpp"

namespace focal {

/// A certified r-focal sub-configuration: the focus plus r-1 members, with
/// the per-element (hypergraph) or per-coordinate (code) match counts.
struct FocalWitness {
  bool code = false;
  int r = 0;
  std::vector<int> focus;
  std::vector<std::vector<int>> members;
  std::vector<int> match_counts;
};

struct TupleCheck {
  bool focal = false;
  std::vector<int> match_counts;
};

/// Definition check for one tuple. Hypergraph flavour: counts, for each
/// focus element in ascending order, how many members contain it; the tuple
/// is focal iff every count is >= r-2 with r-1 = members.size().
TupleCheck is_focal_tuple(const std::vector<int>& focus,
                          const std::vector<std::vector<int>>& members, int n);

/// Code flavour: counts per coordinate 1..n how many members agree with the
/// focus there.
TupleCheck is_focal_tuple_code(const std::vector<int>& focus,
                               const std::vector<std::vector<int>>& members,
                               int q);

struct DetectOptions {
  /// When a scan finds nothing, confirm with the exhaustive (r-1)-tuple
  /// scan as long as C(|input|-1, r-1) stays under this cap.
  BigInt exhaustive_tuple_cap = 10'000'000;
  bool certify_exhaustive = true;
};

/// First r-focal configuration in canonical order, if any. Per focus A the
/// scan decides via the difference-set structure: A is a focus iff the
/// nonempty difference sets {A \ B} (code: coordinate disagreement sets)
/// contain r-1 pairwise disjoint members; candidates are scanned in colex
/// order, so the result is deterministic.
std::optional<FocalWitness> find_focal(const UniformFamily& fam, int r,
                                       const DetectOptions& opt = {});
std::optional<FocalWitness> find_focal(const QaryCode& code, int r,
                                       const DetectOptions& opt = {});

/// Plain scan over all (focus, (r-1)-subset) tuples; the independent slow
/// route kept for certification and cross-checks.
std::optional<FocalWitness> find_focal_exhaustive(const UniformFamily& fam,
                                                  int r);
std::optional<FocalWitness> find_focal_exhaustive(const QaryCode& code, int r);

struct OwnSubsetReport {
  std::vector<int> subject;
  int s = 0;
  std::uint64_t own_count = 0;
  std::vector<std::vector<int>> non_own;
};

/// Classifies every s-subset of `edge` as own / non-own with respect to the
/// family; `edge` must belong to the family.
OwnSubsetReport own_subsets(const UniformFamily& fam,
                            const std::vector<int>& edge, int s);

/// Classifies every s-subset of coordinate positions T by whether the
/// restriction word|T matches another codeword; `word` must be in the code.
OwnSubsetReport own_subsequences(const QaryCode& code,
                                 const std::vector<int>& word, int s);

/// For each S in C([n], n-d): the number of codewords whose restriction to S
/// is an own subsequence.
std::map<std::vector<int>, std::size_t> us_profile(const QaryCode& code,
                                                   int d);

/// Checks C = union of U_{[n] \ T_i} for a partition of [n] into nonempty
/// parts; holds whenever the code is focal-free for the matching r.
bool partition_cover_holds(const QaryCode& code,
                           const std::vector<std::vector<int>>& parts);

}  // namespace focal
