#pragma once

#include <utility>
#include <vector>

namespace treeprof {

// Sanity limit on vertex counts accepted from external input.
inline constexpr int kMaxTreeSize = 10'000'000;

// Unrooted tree on dense vertex ids 0..n-1 with sorted adjacency lists.
// Treated as an immutable value after construction; all operations on trees
// are pure functions, so sharing across threads is safe.
struct Tree {
  std::vector<std::vector<int>> adj;

  int n() const { return static_cast<int>(adj.size()); }
};

// Builds a tree from an edge list and validates every structural invariant:
// exactly n-1 edges, indices in range, no self-loops or parallel edges,
// connected. Throws std::invalid_argument on violation.
Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges);

int degree(const Tree& t, int v);
int max_degree(const Tree& t);

// A single vertex counts as a leaf (degree <= 1).
bool is_leaf(const Tree& t, int v);
std::vector<int> leaves(const Tree& t);

// Edges normalized to u < v and sorted lexicographically.
std::vector<std::pair<int, int>> edge_list(const Tree& t);

// perm[old_id] = new_id; perm must be a permutation of 0..n-1.
Tree relabel(const Tree& t, const std::vector<int>& perm);

// Local copy of the subtree induced by `vertices`: vertex i of the result is
// the i-th smallest member. Throws if the set does not induce a connected
// subgraph.
Tree induced_subtree(const Tree& t, const std::vector<int>& vertices);

}  // namespace treeprof
