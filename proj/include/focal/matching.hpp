#pragma once

#include <cstdint>
#include <optional>

#include "focal/core.hpp"

namespace focal {

/// Conjectured closed form max{ C(n,s) - C(n-lambda+1,s), C(s*lambda-1,s) }.
/// Defined for all n >= 1, s >= 1, lambda >= 1; callers should check
/// emc_hypothesis_holds separately.
BigInt m_formula(int n, int s, int lambda);

/// Hypothesis n >= s*lambda of the conjectured formula.
bool emc_hypothesis_holds(long long n, long long s, long long lambda);

/// (lambda-1) * C(n-1, s-1), a proven upper bound on m(n, s, lambda).
BigInt frankl_bound(int n, int s, int lambda);

/// Does the family contain `lambda` pairwise disjoint edges?
bool has_lambda_matching(const UniformFamily& fam, int lambda);

struct MatchingOptions {
  /// Brute force is refused when C(n, s) exceeds this many candidate edges.
  BigInt candidate_cap = 30;
};

struct BruteForceResult {
  BigInt value;
  UniformFamily extremal;
  std::uint64_t nodes = 0;
};

/// Exact maximum size of an s-uniform family on [n] without lambda pairwise
/// disjoint edges, with one extremal family. Branch and bound over candidate
/// edges in lexicographic order with exact matching detection; the incumbent
/// starts from the star / clique candidates (verified, not assumed extremal).
BruteForceResult m_bruteforce(int n, int s, int lambda,
                              const MatchingOptions& opt = {});

enum class MatchingRegime { TrivialLambda1, BruteForced, FormulaOnly };

struct MatchingNumberResult {
  int n = 0;
  int s = 0;
  int lambda = 0;
  BigInt formula_value;
  BigInt frankl;
  std::optional<BigInt> exact_value;
  std::optional<UniformFamily> extremal;
  MatchingRegime regime = MatchingRegime::FormulaOnly;
  bool conjectural = false;      // value() rests on the unproven closed form
  bool hypothesis_holds = true;  // n >= s*lambda

  /// Exact value when known, otherwise the (conjectural) formula value.
  const BigInt& value() const {
    return exact_value ? *exact_value : formula_value;
  }
};

/// Exact value when lambda = 1, s = 0 or brute force is feasible under the
/// cap; otherwise the formula value flagged conjectural.
MatchingNumberResult m_resolve(int n, int s, int lambda,
                               const MatchingOptions& opt = {});

}  // namespace focal
