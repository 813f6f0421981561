#pragma once

#include <cstdint>
#include <optional>

#include "focal/core.hpp"

namespace focal {

/// Exhaustive: the tree was explored to the end (incumbent pruning only).
/// BranchAndBoundComplete: the incumbent met a valid exact upper bound, so
/// the search closed early with a completeness certificate.
/// Timeout: node budget ran out; optimum is the best found, a lower bound.
enum class Maximality { Exhaustive, BranchAndBoundComplete, Timeout };

struct SearchOptions {
  BigInt candidate_cap = 40;           // hypergraph: max C(n,k)
  BigInt word_cap = BigInt(1) << 20;   // code: max q^n
  std::uint64_t node_budget = 2'000'000;
  bool seed_with_construction = true;
  bool use_upper_bound_caps = true;
  std::uint64_t construction_seed = 0;
};

struct HypergraphSearchResult {
  int r = 0;
  int n = 0;
  int k = 0;
  std::size_t optimum = 0;
  UniformFamily extremal;
  std::uint64_t nodes_explored = 0;
  Maximality proof = Maximality::Exhaustive;
  std::optional<BigInt> upper_cap;  // the admissible cap consulted, if any
};

/// Maximum r-focal-free subfamily of C([n],k) by canonical-order branch and
/// bound: incremental focal detection on every extension, symmetry
/// reduction by fixing the lexicographically smallest edge, incumbent
/// seeding from the best construction, and early completion against valid
/// (non-conjectural) upper bounds.
HypergraphSearchResult exact_f(int r, int n, int k,
                               const SearchOptions& opt = {});

struct CodeSearchResult {
  int r = 0;
  int n = 0;
  int q = 0;
  std::size_t optimum = 0;
  QaryCode extremal;
  std::uint64_t nodes_explored = 0;
  Maximality proof = Maximality::Exhaustive;
  std::optional<BigInt> upper_cap;
};

/// Code analogue over [q]^n; symmetry reduction fixes the all-ones word
/// (per-coordinate symbol relabeling maps any nonempty code onto one
/// containing it).
CodeSearchResult exact_f_code(int r, int n, int q,
                              const SearchOptions& opt = {});

}  // namespace focal
