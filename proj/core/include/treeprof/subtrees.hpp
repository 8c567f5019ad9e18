#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "treeprof/canonical.hpp"
#include "treeprof/rational.hpp"
#include "treeprof/tree.hpp"

namespace treeprof {

// A subtree image: a vertex subset of the host inducing a connected
// subgraph. Identified by its vertex set, never by a map.
struct Embedding {
  const Tree* host = nullptr;
  std::vector<int> vertices;  // sorted
};

namespace detail {

// Duplicate-free connected-subset enumeration: subsets are grown from their
// minimum vertex (the anchor), adding only vertices above the anchor, and a
// candidate consumed at one position of the frontier is excluded from all
// later positions. In a tree a new candidate can never be adjacent to two
// vertices of the current subset, so each subset is reached exactly once.
//
// Visit receives the sorted subset and returns false to stop early.
template <class Visit>
bool extend_subtrees(const Tree& t, int k, int anchor, int depth,
                     std::vector<int>& members, std::vector<char>& in_set,
                     std::vector<std::vector<int>>& frontier,
                     std::vector<int>& emit_buf, Visit& visit) {
  if (static_cast<int>(members.size()) == k) {
    emit_buf = members;
    std::sort(emit_buf.begin(), emit_buf.end());
    return visit(const_cast<const std::vector<int>&>(emit_buf));
  }
  const std::vector<int>& fr = frontier[depth];
  for (std::size_t i = 0; i < fr.size(); ++i) {
    const int w = fr[i];
    std::vector<int>& next = frontier[depth + 1];
    next.assign(fr.begin() + static_cast<std::ptrdiff_t>(i) + 1, fr.end());
    for (int u : t.adj[w]) {
      if (u > anchor && !in_set[u]) next.push_back(u);
    }
    members.push_back(w);
    in_set[w] = 1;
    const bool keep_going =
        extend_subtrees(t, k, anchor, depth + 1, members, in_set, frontier,
                        emit_buf, visit);
    members.pop_back();
    in_set[w] = 0;
    if (!keep_going) return false;
  }
  return true;
}

// Runs the enumeration for anchors v with v % stride == offset; with
// stride 1 this is the full enumeration. Returns false if the visitor
// stopped early.
template <class Visit>
bool for_each_subtree_strided(const Tree& t, int k, int offset, int stride,
                              Visit&& visit) {
  if (k < 1 || k > t.n()) return true;
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(k));
  std::vector<char> in_set(static_cast<std::size_t>(t.n()), 0);
  std::vector<std::vector<int>> frontier(static_cast<std::size_t>(k) + 1);
  std::vector<int> emit_buf;
  for (int v = offset; v < t.n(); v += stride) {
    members.push_back(v);
    in_set[v] = 1;
    frontier[0].clear();
    for (int u : t.adj[v]) {
      if (u > v) frontier[0].push_back(u);
    }
    const bool keep_going =
        extend_subtrees(t, k, v, 0, members, in_set, frontier, emit_buf, visit);
    members.pop_back();
    in_set[v] = 0;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

// Visits every connected k-vertex subset exactly once (sorted). Visitors may
// return void, or bool where false stops the enumeration early.
template <class Visit>
void for_each_subtree(const Tree& t, int k, Visit&& visit) {
  if constexpr (std::is_same_v<decltype(visit(std::vector<int>{})), bool>) {
    detail::for_each_subtree_strided(t, k, 0, 1, visit);
  } else {
    auto wrapped = [&visit](const std::vector<int>& s) {
      visit(s);
      return true;
    };
    detail::for_each_subtree_strided(t, k, 0, 1, wrapped);
  }
}

// All connected k-subsets in lexicographic order of their sorted vertex
// sets. Empty when k > |t|.
std::vector<Embedding> enumerate_subtrees(const Tree& t, int k);

// Z_k: number of k-vertex subtrees, by a size-partition dynamic program over
// a rooted orientation — an independent code path from the enumeration.
Integer count_subtrees(const Tree& t, int k);

// Census of canonical codes over all k-subtrees; the workhorse behind
// embedding counts, densities and profiles. threads <= 1 runs sequentially;
// the merged result is schedule-independent.
std::map<CanonicalCode, Integer> subtree_code_census(const Tree& t, int k,
                                                     int threads = 1);

// Number of k-subtrees of t isomorphic to s (k = |s|); 0 when |t| < |s|.
Integer count_embeddings(const Tree& s, const Tree& t);

// True iff at least one embedding exists; stops at the first hit.
bool contains_copy(const Tree& s, const Tree& t);

// (embeddings of s, Z_k) from one enumeration pass.
std::pair<Integer, Integer> count_embeddings_and_total(const Tree& s,
                                                       const Tree& t,
                                                       int threads = 1);

// Exact density d(s, t) = embeddings / Z_k, and 0 when |t| < |s|.
Rational density(const Tree& s, const Tree& t, int threads = 1);

// Densities of all k-vertex isomorphism classes present in t. Entries are
// sorted by canonical code and carry nonzero densities only; absent classes
// read as 0 via at(). Sums to exactly 1 when |t| >= k, and is the zero
// vector (no entries) otherwise.
struct ProfileVector {
  int k = 0;
  std::vector<std::pair<CanonicalCode, Rational>> entries;

  Rational at(const CanonicalCode& code) const;
  Rational sum() const;
};

ProfileVector profile(const Tree& t, int k, int threads = 1);

}  // namespace treeprof
