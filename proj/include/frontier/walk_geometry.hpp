#pragma once

#include <cstddef>
#include <vector>

#include "frontier/paths.hpp"

namespace frontier {

using IndexSet = std::vector<std::size_t>;

// Indices k in (0, n) whose prefix sites {S_0..S_{k-1}} and suffix sites
// {S_{k+1}..S_n} are disjoint and neither contains S_k. Linear time via
// per-site consecutive-visit intervals: a pair of visits (i, j) of one site
// excludes every k in [i, j].
IndexSet cut_times(const LatticeWalk& walk);

// Indices s whose site S_s is 4-adjacent to the unbounded free component of
// the complement of {S_0..S_s}. Computed by one reverse-time sweep: sites
// are un-occupied in reverse first-visit order and free space is merged
// incrementally with union-find, so each query is near O(1).
IndexSet pioneer_times(const LatticeWalk& walk);

}  // namespace frontier
