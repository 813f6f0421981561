#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "focal/core.hpp"
#include "focal/matching.hpp"

namespace focal {

/// The template pair behind the lower-bound constructions: G is a largest
/// (k-t)-uniform family on [k] without lambda disjoint edges, and
/// F = C([k],t) minus the complements of G, so |F| = C(k,t) - m(k,k-t,lambda).
struct TemplateFG {
  int r = 0;
  int k = 0;
  int t = 0;
  int lambda = 0;
  UniformFamily F;
  UniformFamily G;
  BigInt expected_f_size;
  bool g_from_bruteforce = false;
};

/// By default G is the formula-extremal candidate (the larger of the
/// [lambda-1]-star and the clique on s*lambda-1 vertices); a flag switches
/// to the brute-forced extremal family.
TemplateFG template_F_from_G(int r, int k, bool use_bruteforced_G = false,
                             const MatchingOptions& mopt = {});

/// One template copy inside the host: the injective vertex map from the
/// template's ground set, the mapped vertex set and the mapped edges.
struct PackingCopy {
  std::vector<int> map;       // template vertex i -> map[i-1]
  std::vector<int> vertices;  // sorted image
  std::vector<std::vector<int>> edges;
};

struct InducedPacking {
  bool multipartite = false;
  int n = 0;  // host: C([n],t), or H_n^(t)(q) when multipartite
  int q = 0;
  int t = 0;
  UniformFamily templ;
  std::vector<PackingCopy> copies;
  std::size_t attempts = 0;
  BigRat target;  // C(n,t)/|F|, or C(n,t) q^t / |F|

  double density() const;
};

/// Checks conditions (i)-(v) of an induced packing over all copy pairs (and
/// faithfulness / one-vertex-per-part for multipartite hosts). On failure
/// `why` names the first violated condition.
bool verify_induced_packing(const InducedPacking& packing, std::string* why);

struct GreedyPackingOptions {
  std::size_t attempts = 4000;
};

/// Seeded randomized greedy insertion of template copies into C([n],t);
/// every accepted copy is re-checked against all previous ones. Achieved
/// density is reported via the result, never asserted.
InducedPacking induced_packing_greedy(int n, const TemplateFG& templ,
                                      std::uint64_t seed,
                                      const GreedyPackingOptions& opt = {});

/// Faithful variant in the multipartite host H_n^(t)(q): copies pick one
/// vertex per part, i.e. correspond to words of [q]^n.
InducedPacking induced_packing_greedy_faithful(
    int n, int q, const TemplateFG& templ, std::uint64_t seed,
    const GreedyPackingOptions& opt = {});

/// Vertex sets of the packing's copies as a k-uniform family (the
/// hypergraph lower-bound object); re-verified focal-free.
UniformFamily focal_free_family_build(int r, int n, int k, std::uint64_t seed,
                                      int restarts = 1, int threads = 1);

/// Code-side analogue through the multipartite bijection; re-verified
/// focal-free.
QaryCode focal_free_code_build_packing(int r, int n, int q, std::uint64_t seed,
                                       int restarts = 1, int threads = 1);

/// The packing each builder selected, for callers that need the copies
/// (density reporting, diagnostics).
InducedPacking best_family_packing(int r, int n, int k, std::uint64_t seed,
                                   int restarts = 1, int threads = 1);
InducedPacking best_code_packing(int r, int n, int q, std::uint64_t seed,
                                 int restarts = 1, int threads = 1);

UniformFamily family_of_packing(const InducedPacking& packing, int n, int k);
QaryCode code_of_packing(const InducedPacking& packing);

}  // namespace focal
