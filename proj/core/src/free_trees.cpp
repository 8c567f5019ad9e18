#include "treeprof/free_trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "treeprof/canonical.hpp"

namespace treeprof {

namespace {

// Tree from a rooted level sequence (root at level 0): the parent of
// position i is the closest earlier position one level up.
Tree tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      if (levels[static_cast<std::size_t>(j)] ==
          levels[static_cast<std::size_t>(i)] - 1) {
        edges.emplace_back(j, i);
        break;
      }
    }
  }
  return make_tree(n, edges);
}

// Successor in the classic reverse-lexicographic walk over canonical level
// sequences of rooted trees: truncate at the rightmost level > 1 and repeat
// the segment starting at its would-be parent. Returns false after the last
// sequence (the star, all levels 1).
bool next_level_sequence(std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (levels[static_cast<std::size_t>(i)] > 1) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (levels[static_cast<std::size_t>(i)] ==
        levels[static_cast<std::size_t>(p)] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n; ++i) {
    levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
  }
  return true;
}

}  // namespace

std::vector<Tree> all_free_trees(int n, int cap) {
  if (n < 1) throw std::invalid_argument("tree size must be positive");
  if (n > cap) {
    throw std::invalid_argument("free-tree generation capped at " +
                                std::to_string(cap) + " vertices, got " +
                                std::to_string(n));
  }
  if (n == 1) return {make_tree(1, {})};

  // Every free tree appears among the rooted trees at least once; the
  // canonical code collapses the different rootings of one class.
  std::map<CanonicalCode, Tree> classes;
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i;
  do {
    Tree t = tree_from_levels(levels);
    CanonicalCode code = canonicalize(t);
    classes.try_emplace(std::move(code), std::move(t));
  } while (next_level_sequence(levels));

  std::vector<Tree> out;
  out.reserve(classes.size());
  for (auto& [code, tree] : classes) out.push_back(std::move(tree));
  return out;
}

}  // namespace treeprof
