#pragma once

#include <optional>
#include <set>
#include <vector>

#include "treeprof/tree.hpp"

namespace treeprof {

// A branch at v is one component of T minus v together with its edge to v.
// A branch made from a component with c vertices has c edges.
struct Branch {
  int root = 0;
  std::vector<int> vertices;  // component plus root, sorted
  bool is_trivial = false;    // exactly one edge
  bool is_fork = false;       // non-trivial, star-shaped, root sits at a leaf
  std::optional<int> order;   // fork only: number of non-root leaves
};

std::vector<Branch> branches_at(const Tree& t, int v);

// Number of branches at v with more than one edge; equals the number of
// non-leaf neighbors of v.
int nontrivial_branch_count(const Tree& t, int v);

// Vertices all of whose branches have at most n/2 edges. Always one or two;
// two centers are adjacent and occur only for even n.
std::set<int> centers(const Tree& t);

// Vertices rooting at least three non-trivial branches such that no other
// vertex on the path to the nearest center does. Empty exactly for
// caterpillars; otherwise of size one or two.
std::set<int> hubs(const Tree& t);

int eccentricity(const Tree& t, int v);
int radius(const Tree& t);

struct TreeClass {
  bool is_path = false;
  bool is_star = false;
  bool is_caterpillar = false;
  bool is_sparkler = false;  // star with one edge subdivided once, >= 4 edges
};

TreeClass classify(const Tree& t);

}  // namespace treeprof
