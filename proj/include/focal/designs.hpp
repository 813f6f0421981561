#pragma once

#include <cstdint>
#include <optional>

#include "focal/core.hpp"

namespace focal {

/// Every t-subset of [n] covered exactly once?
bool is_design(const UniformFamily& fam, int t);

/// Explicit (n,k,t)-designs from a small built-in catalog: STS(7/9/13/15),
/// the (8,4,3) design, and the trivial k=t / n=k cases. Every output is
/// verified (exact cover + size C(n,t)/C(k,t)). Returns nothing for
/// parameters outside the catalog.
std::optional<UniformFamily> design_small(int n, int k, int t);

/// Seeded randomized greedy (n,k,t)-packing: shuffle C([n],k), keep an edge
/// iff it meets every kept edge in at most t-1 points. Verified output, no
/// optimality claim. Requires n >= k > t >= 2.
UniformFamily greedy_packing(int n, int k, int t, std::uint64_t seed);

}  // namespace focal
