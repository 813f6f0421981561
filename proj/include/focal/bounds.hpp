#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focal/core.hpp"
#include "focal/matching.hpp"

namespace focal {

enum class BoundKind { Upper, LowerAsymptotic, Exact, LimitConstant };

struct BoundValue {
  std::string name;
  BigRat value;
  BoundKind kind = BoundKind::Upper;
  bool valid = false;
  std::string reason;      // precondition verdict, human-readable
  bool conjectural = false;  // inherits from the matching number it consumes
};

/// Every bound formula evaluated for one parameter set, each with its
/// precondition verdict. Invalid values are still reported (with the
/// reason) rather than suppressed.
struct BoundReport {
  bool code_side = false;
  int r = 0;
  int n = 0;
  int k = 0;  // hypergraph side
  int q = 0;  // code side
  int t = 0;
  int lambda = 0;
  MatchingNumberResult m;
  std::vector<BoundValue> values;

  const BoundValue* find(const std::string& name) const;

  /// Smallest floor over valid, non-conjectural upper/exact values; the
  /// admissible cap exact search may prune with.
  std::optional<BigInt> best_admissible_upper() const;
};

/// values: alonUpper, cheapLowerAsym, thm22Upper, remark23Upper,
/// limitDensity. Requires r >= 3 and n >= k >= 2.
BoundReport hypergraph_bounds(int r, int n, int k,
                              const MatchingOptions& mopt = {});

/// values: thm33Upper, remark3Upper, thm35Upper, thm16Exact, ahCodeUpper,
/// ahCodeLowerPrimePower, limitDensity. Requires r >= 3, n >= 2, q >= 2.
BoundReport code_bounds(int r, int n, int q, const MatchingOptions& mopt = {});

/// Pairwise intersections below t?
bool is_packing(const UniformFamily& fam, int t);

/// Verifies P is an (n,k,t)-packing for t = threshold_t(r,k) and then runs
/// the focal scan; true iff no witness. Throws when P is not such a packing.
bool packing_is_focal_free_check(const UniformFamily& P, int r);

}  // namespace focal
