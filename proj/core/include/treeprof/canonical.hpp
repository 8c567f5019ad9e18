#pragma once

#include <string>
#include <vector>

#include "treeprof/tree.hpp"

namespace treeprof {

// Balanced-parentheses canonical form of a tree: length 2n, rooted at the
// centroid with child codes sorted ascending at every vertex; with two
// centroids the lexicographically smaller rooted code wins. Two trees have
// equal codes iff they are isomorphic, and plain string comparison is a
// total order on isomorphism classes.
using CanonicalCode = std::string;

CanonicalCode canonicalize(const Tree& t);

// Canonical code of the subtree induced by a connected vertex subset of
// `host`, without materializing a Tree. Throws std::invalid_argument if the
// subset is empty or not connected.
CanonicalCode canonical_code_of_subset(const Tree& host,
                                       const std::vector<int>& vertices);

bool is_isomorphic(const Tree& a, const Tree& b);

}  // namespace treeprof
