#pragma once

#include <vector>

#include "treeprof/tree.hpp"

namespace treeprof {

inline constexpr int kFreeTreeCap = 16;

// One representative per isomorphism class of n-vertex trees, sorted by
// canonical code. Generated by enumerating rooted trees via their canonical
// level sequences and deduplicating by canonical code. Throws
// std::invalid_argument if n < 1 or n > cap.
std::vector<Tree> all_free_trees(int n, int cap = kFreeTreeCap);

}  // namespace treeprof
