#include "focal/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace focal {

namespace {
using util::Mask;
}

BigInt m_formula(int n, int s, int lambda) {
  if (n < 1 || s < 1 || lambda < 1)
    throw std::invalid_argument("m_formula: need n, s, lambda >= 1");
  const BigInt star = binom(n, s) - binom(n - lambda + 1, s);
  const BigInt clique = binom(static_cast<long long>(s) * lambda - 1, s);
  return std::max(star, clique);
}

bool emc_hypothesis_holds(long long n, long long s, long long lambda) {
  return n >= s * lambda;
}

BigInt frankl_bound(int n, int s, int lambda) {
  if (lambda < 1) throw std::invalid_argument("frankl_bound: lambda >= 1");
  return BigInt(lambda - 1) * binom(n - 1, s - 1);
}

bool has_lambda_matching(const UniformFamily& fam, int lambda) {
  if (lambda <= 0) return true;
  if (fam.size() < static_cast<std::size_t>(lambda)) return false;
  if (fam.uniformity() == 0) return lambda == 1;  // only the empty edge exists
  if (lambda == 1) return fam.size() >= 1;
  return util::has_disjoint_system(util::masks_of(fam), lambda);
}

namespace {

struct BruteForceState {
  const std::vector<Mask>& candidates;
  int lambda;
  std::vector<Mask> chosen;
  std::vector<std::size_t> chosen_idx;
  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;

  void dfs(std::size_t i) {
    ++nodes;
    if (chosen_idx.size() > best.size()) best = chosen_idx;
    if (i == candidates.size()) return;
    if (chosen_idx.size() + (candidates.size() - i) <= best.size()) return;
    // take candidates[i] unless it completes a lambda-matching
    if (!util::has_disjoint_system_avoiding(chosen, candidates[i],
                                            lambda - 1)) {
      chosen.push_back(candidates[i]);
      chosen_idx.push_back(i);
      dfs(i + 1);
      chosen.pop_back();
      chosen_idx.pop_back();
    }
    dfs(i + 1);
  }
};

}  // namespace

BruteForceResult m_bruteforce(int n, int s, int lambda,
                              const MatchingOptions& opt) {
  if (n < 0 || s < 0 || lambda < 1)
    throw std::invalid_argument("m_bruteforce: bad parameters");
  if (lambda == 1)
    return {0, UniformFamily(n, s, {}), 0};  // a single edge is a 1-matching
  if (s == 0) {
    // The only 0-uniform edge is the empty set, so no two disjoint edges.
    return {1, UniformFamily(n, 0, {{}}), 0};
  }
  if (binom(n, s) > opt.candidate_cap)
    throw std::invalid_argument("m_bruteforce: C(n,s) exceeds candidate cap");

  const auto subsets = util::all_subsets(n, s);

  if (static_cast<long long>(n) < static_cast<long long>(s) * lambda) {
    // lambda disjoint s-sets would need s*lambda vertices: impossible,
    // so the whole of C([n],s) is feasible.
    return {BigInt(subsets.size()), UniformFamily(n, s, subsets), 0};
  }

  std::vector<Mask> candidates;
  candidates.reserve(subsets.size());
  for (const auto& e : subsets) candidates.push_back(util::mask_of(e));

  // Incumbent: the larger of the two classical candidates, both re-verified.
  std::vector<std::size_t> star, clique;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& e = subsets[i];
    if (e.front() <= lambda - 1) star.push_back(i);
    if (e.back() <= static_cast<long long>(s) * lambda - 1) clique.push_back(i);
  }
  for (const auto* seed : {&star, &clique}) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i : *seed) edges.push_back(subsets[i]);
    if (has_lambda_matching(UniformFamily(n, s, edges), lambda))
      throw std::logic_error("m_bruteforce: invalid incumbent seed");
  }

  BruteForceState st{candidates, lambda, {}, {}, {}, 0};
  st.best = star.size() >= clique.size() ? star : clique;
  st.dfs(0);

  std::vector<std::vector<int>> edges;
  edges.reserve(st.best.size());
  for (std::size_t i : st.best) edges.push_back(subsets[i]);
  return {BigInt(st.best.size()), UniformFamily(n, s, std::move(edges)),
          st.nodes};
}

MatchingNumberResult m_resolve(int n, int s, int lambda,
                               const MatchingOptions& opt) {
  if (n < 0 || s < 0 || lambda < 1)
    throw std::invalid_argument("m_resolve: bad parameters");
  MatchingNumberResult res;
  res.n = n;
  res.s = s;
  res.lambda = lambda;
  res.frankl = frankl_bound(n, s, lambda);
  res.hypothesis_holds =
      emc_hypothesis_holds(n, std::max(s, 0), lambda);

  if (lambda == 1) {
    res.regime = MatchingRegime::TrivialLambda1;
    res.formula_value = 0;
    res.exact_value = BigInt(0);
    res.extremal = UniformFamily(n, s, {});
    return res;
  }
  if (s == 0) {
    res.regime = MatchingRegime::BruteForced;
    res.formula_value = 1;  // closed form is undefined at s=0; use the exact value
    res.exact_value = BigInt(1);
    res.extremal = UniformFamily(n, 0, {{}});
    return res;
  }

  res.formula_value = m_formula(n, s, lambda);
  if (binom(n, s) <= opt.candidate_cap) {
    auto bf = m_bruteforce(n, s, lambda, opt);
    res.regime = MatchingRegime::BruteForced;
    res.exact_value = bf.value;
    res.extremal = std::move(bf.extremal);
  } else {
    res.regime = MatchingRegime::FormulaOnly;
    res.conjectural = true;
  }
  return res;
}

}  // namespace focal
