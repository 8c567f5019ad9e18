#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treeprof/tree.hpp"

namespace treeprof {

Tree path(int n);
Tree star(int n);

// Center with `legs` paths of `leg_length` edges each.
Tree spider(int legs, int leg_length);

// Spine of |leaf_counts| vertices; spine vertex i carries leaf_counts[i]
// extra leaves.
Tree caterpillar(const std::vector<int>& leaf_counts);

// Star with k-1 edges, one of them subdivided once: k edges, k+1 vertices.
// k = 2 and k = 3 degenerate to paths.
Tree sparkler(int k);

// Host family for sparkler-density experiments: a spine path with
// n(k+1)+k vertices whose (j(k+1))-th vertex (1-indexed, j = 1..n) is a
// vertebra carrying leaves_per_vertebra attached leaves.
struct SparklerHostParams {
  int k = 4;                       // edges of the target sparkler, >= 4
  int n = 1;                       // number of vertebrae, >= 1
  long long leaves_per_vertebra;   // >= 1; pick 3*k to match the default host

  SparklerHostParams(int k_, int n_, long long leaves)
      : k(k_), n(n_), leaves_per_vertebra(leaves) {}
  SparklerHostParams(int k_, int n_)
      : k(k_), n(n_), leaves_per_vertebra(3LL * k_) {}
};

Tree sparkler_host(const SparklerHostParams& params);

// Complete d-ary tree of depth d: 1 + d + d^2 + ... + d^d vertices, laid out
// level by level from the root. Contains every d-vertex tree as a subtree.
Tree complete_dary(int d);

// How to pick the attachment vertex of one gluing operand: either the
// lowest-index leaf (default; keeps the maximum degree at
// max(existing, 2)), or an explicit vertex.
struct AttachRule {
  enum Kind { kLowestLeaf, kExplicitVertex };
  Kind kind = kLowestLeaf;
  int vertex = -1;

  static AttachRule lowest_leaf() { return {}; }
  static AttachRule at(int v) { return {kExplicitVertex, v}; }
};

struct GlueSpec {
  AttachRule left;
  AttachRule right;
};

// Disjoint union of a and b joined by one new edge; b's vertices are
// shifted by |a|.
Tree glue(const Tree& a, const Tree& b, const GlueSpec& spec = {});

// Left-associated gluing power: one copy for ell = 1, otherwise the
// (ell-1)-power glued with one more copy.
Tree glue_power(const Tree& t, long long ell, const GlueSpec& spec = {});

inline constexpr std::int64_t kUniversalSizeCap = 1'000'000;

// The universal host sequence: stage 1 is the single edge, stage n glues the
// complete n-ary tree of depth n with n^2 copies of stage n-1, always
// leaf-to-leaf so the maximum degree stays <= n+1. glue_edges lists every
// edge added by a gluing step across the whole recursive construction;
// removing them decomposes the tree back into its complete d-ary building
// blocks.
struct UniversalBuild {
  Tree tree;
  std::vector<std::pair<int, int>> glue_edges;
};

UniversalBuild universal_tree_build(int n,
                                    std::int64_t size_cap = kUniversalSizeCap);
Tree universal_tree(int n, std::int64_t size_cap = kUniversalSizeCap);

// Vertex count of universal_tree(n) without building it.
std::int64_t universal_tree_size(int n);

}  // namespace treeprof
