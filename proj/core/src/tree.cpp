#include "treeprof/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treeprof {

namespace {

void check(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  check(n >= 1, "tree needs at least one vertex");
  check(static_cast<int>(edges.size()) == n - 1,
        "tree on " + std::to_string(n) + " vertices needs exactly " +
            std::to_string(n - 1) + " edges, got " +
            std::to_string(edges.size()));
  Tree t;
  t.adj.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    check(u >= 0 && u < n && v >= 0 && v < n,
          "edge endpoint out of range: " + std::to_string(u) + " " +
              std::to_string(v));
    check(u != v, "self-loop at vertex " + std::to_string(u));
    t.adj[static_cast<std::size_t>(u)].push_back(v);
    t.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : t.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    check(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end(),
          "parallel edge");
  }
  // n-1 edges and connectivity together make it a tree.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : t.adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  check(reached == n, "edge list is not connected");
  return t;
}

int degree(const Tree& t, int v) {
  return static_cast<int>(t.adj[static_cast<std::size_t>(v)].size());
}

int max_degree(const Tree& t) {
  int best = 0;
  for (int v = 0; v < t.n(); ++v) best = std::max(best, degree(t, v));
  return best;
}

bool is_leaf(const Tree& t, int v) { return degree(t, v) <= 1; }

std::vector<int> leaves(const Tree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.n(); ++v) {
    if (is_leaf(t, v)) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> edge_list(const Tree& t) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(t.n() > 0 ? t.n() - 1 : 0));
  for (int v = 0; v < t.n(); ++v) {
    for (int u : t.adj[static_cast<std::size_t>(v)]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree relabel(const Tree& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.n()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<char> used(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= t.n() || used[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation");
    }
    used[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(t.n() - 1));
  for (const auto& [u, v] : edge_list(t)) {
    edges.emplace_back(perm[static_cast<std::size_t>(u)],
                       perm[static_cast<std::size_t>(v)]);
  }
  return make_tree(t.n(), edges);
}

Tree induced_subtree(const Tree& t, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  check(!sorted.empty(), "induced subtree of an empty set");
  check(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
        "duplicate vertex in subset");
  check(sorted.front() >= 0 && sorted.back() < t.n(),
        "subset vertex out of range");
  const int k = static_cast<int>(sorted.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    const int v = sorted[static_cast<std::size_t>(i)];
    for (int u : t.adj[static_cast<std::size_t>(v)]) {
      if (u <= v) continue;
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), u);
      if (it != sorted.end() && *it == u) {
        edges.emplace_back(i, static_cast<int>(it - sorted.begin()));
      }
    }
  }
  check(static_cast<int>(edges.size()) == k - 1,
        "subset does not induce a connected subgraph");
  return make_tree(k, edges);  // connectivity re-checked here
}

}  // namespace treeprof
