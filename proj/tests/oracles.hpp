// Independent reference implementations the tests compare the library
// against. Everything here is deliberately naive: bitmask scans, full
// permutation search, exhaustive label-sequence decoding. None of it shares
// code with the library paths under test.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "treeprof/canonical.hpp"
#include "treeprof/tree.hpp"

namespace treeprof_testing {

// Whether the sorted subset induces a connected subgraph, by flood fill.
inline bool subset_connected_oracle(const treeprof::Tree& t,
                                    const std::vector<int>& verts) {
  if (verts.empty()) return true;
  std::set<int> want(verts.begin(), verts.end());
  std::vector<int> stack{verts.front()};
  std::set<int> seen{verts.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : t.adj[v]) {
      if (want.count(u) && !seen.count(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen.size() == want.size();
}

// Every connected k-subset, by scanning all 2^n vertex masks. n <= 20.
inline std::vector<std::vector<int>> connected_subsets_bruteforce(
    const treeprof::Tree& t, int k) {
  std::vector<std::vector<int>> out;
  const int n = t.n();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) verts.push_back(v);
    }
    if (subset_connected_oracle(t, verts)) out.push_back(verts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Isomorphism by trying every vertex bijection. n <= 8.
inline bool isomorphic_bruteforce(const treeprof::Tree& a,
                                  const treeprof::Tree& b) {
  if (a.n() != b.n()) return false;
  const int n = a.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; ok && u < n; ++u) {
      for (int v : a.adj[u]) {
        if (u > v) continue;
        const auto& row = b.adj[perm[static_cast<std::size_t>(u)]];
        if (!std::binary_search(row.begin(), row.end(),
                                perm[static_cast<std::size_t>(v)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Labeled tree from a length-(n-2) label sequence (the classic bijection
// with labeled trees), smallest-leaf-first decoding.
inline treeprof::Tree tree_from_label_sequence(int n,
                                               const std::vector<int>& seq) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return treeprof::make_tree(n, edges);
}

// Canonical codes of every isomorphism class on n vertices, by decoding all
// n^(n-2) label sequences. Exponential; n <= 9.
inline std::set<treeprof::CanonicalCode> free_tree_codes_bruteforce(int n) {
  std::set<treeprof::CanonicalCode> codes;
  if (n == 1) {
    codes.insert(treeprof::canonicalize(treeprof::make_tree(1, {})));
    return codes;
  }
  if (n == 2) {
    codes.insert(treeprof::canonicalize(treeprof::make_tree(2, {{0, 1}})));
    return codes;
  }
  std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
  while (true) {
    codes.insert(treeprof::canonicalize(tree_from_label_sequence(n, seq)));
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
  return codes;
}

inline int eccentricity_bruteforce(const treeprof::Tree& t, int v) {
  std::vector<int> dist(static_cast<std::size_t>(t.n()), -1);
  std::vector<int> queue{v};
  dist[static_cast<std::size_t>(v)] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int u : t.adj[queue[i]]) {
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(queue[i])] + 1;
        queue.push_back(u);
      }
    }
  }
  return *std::max_element(dist.begin(), dist.end());
}

// Mass centers by direct component-size scan: v qualifies iff deleting it
// leaves no component with more than n/2 vertices.
inline std::set<int> centers_bruteforce(const treeprof::Tree& t) {
  std::set<int> out;
  const int n = t.n();
  for (int v = 0; v < n; ++v) {
    int largest = 0;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(v)] = 1;
    for (int s : t.adj[v]) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::vector<int> stack{s};
      seen[static_cast<std::size_t>(s)] = 1;
      int size = 0;
      while (!stack.empty()) {
        const int w = stack.back();
        stack.pop_back();
        ++size;
        for (int u : t.adj[w]) {
          if (!seen[static_cast<std::size_t>(u)]) {
            seen[static_cast<std::size_t>(u)] = 1;
            stack.push_back(u);
          }
        }
      }
      largest = std::max(largest, size);
    }
    if (2 * largest <= n) out.insert(v);
  }
  return out;
}

// Same-size connected subsets whose overlap with base is a connected
// subgraph of at least |base| - r vertices, filtered from the full bitmask
// enumeration.
inline std::vector<std::vector<int>> neighborhood_bruteforce(
    const treeprof::Tree& host, const std::vector<int>& base, int r) {
  std::vector<int> sorted_base = base;
  std::sort(sorted_base.begin(), sorted_base.end());
  std::vector<std::vector<int>> out;
  for (const auto& cand :
       connected_subsets_bruteforce(host, static_cast<int>(base.size()))) {
    std::vector<int> common;
    std::set_intersection(cand.begin(), cand.end(), sorted_base.begin(),
                          sorted_base.end(), std::back_inserter(common));
    if (static_cast<int>(common.size()) <
        static_cast<int>(base.size()) - r) {
      continue;
    }
    if (!subset_connected_oracle(host, common)) continue;
    out.push_back(cand);
  }
  return out;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

}  // namespace treeprof_testing
