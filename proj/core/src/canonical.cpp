#include "treeprof/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treeprof {

namespace {

// Reusable buffers; thread_local so concurrent censuses stay independent.
struct Scratch {
  std::vector<int> stamp;     // host-sized; stamp[v] == tick marks membership
  std::vector<int> local_id;  // host-sized; valid where stamped
  int tick = 0;
  std::vector<std::vector<int>> adj;  // subset-local adjacency
  std::vector<int> order, parent, size;
  std::vector<std::string> code;
  std::vector<std::string> child_codes;
};

thread_local Scratch g_scratch;

// Rooted code over the subset-local adjacency: children codes sorted
// ascending, concatenated inside one pair of parentheses. Iterative
// (processes vertices farthest-first), so deep paths cannot overflow the
// stack.
std::string rooted_code(Scratch& s, int k, int root) {
  s.order.clear();
  s.parent.assign(static_cast<std::size_t>(k), -1);
  s.order.push_back(root);
  s.parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const int v = s.order[head];
    for (int u : s.adj[static_cast<std::size_t>(v)]) {
      if (s.parent[static_cast<std::size_t>(u)] == -1) {
        s.parent[static_cast<std::size_t>(u)] = v;
        s.order.push_back(u);
      }
    }
  }
  s.code.assign(static_cast<std::size_t>(k), {});
  for (std::size_t i = s.order.size(); i-- > 0;) {
    const int v = s.order[i];
    s.child_codes.clear();
    for (int u : s.adj[static_cast<std::size_t>(v)]) {
      if (u != v && s.parent[static_cast<std::size_t>(u)] == v) {
        s.child_codes.push_back(std::move(s.code[static_cast<std::size_t>(u)]));
      }
    }
    std::sort(s.child_codes.begin(), s.child_codes.end());
    std::string& out = s.code[static_cast<std::size_t>(v)];
    out.clear();
    out.push_back('(');
    for (const std::string& c : s.child_codes) out += c;
    out.push_back(')');
  }
  return std::move(s.code[static_cast<std::size_t>(root)]);
}

}  // namespace

CanonicalCode canonical_code_of_subset(const Tree& host,
                                       const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k == 0) throw std::invalid_argument("empty vertex subset");
  if (k == 1) return "()";

  Scratch& s = g_scratch;
  if (static_cast<int>(s.stamp.size()) < host.n()) {
    s.stamp.assign(static_cast<std::size_t>(host.n()), 0);
    s.local_id.assign(static_cast<std::size_t>(host.n()), 0);
  }
  ++s.tick;
  for (int i = 0; i < k; ++i) {
    const int v = vertices[static_cast<std::size_t>(i)];
    if (v < 0 || v >= host.n()) {
      throw std::invalid_argument("subset vertex out of range");
    }
    if (s.stamp[static_cast<std::size_t>(v)] == s.tick) {
      throw std::invalid_argument("duplicate vertex in subset");
    }
    s.stamp[static_cast<std::size_t>(v)] = s.tick;
    s.local_id[static_cast<std::size_t>(v)] = i;
  }
  if (static_cast<int>(s.adj.size()) < k) s.adj.resize(static_cast<std::size_t>(k));
  int edge_count = 0;
  for (int i = 0; i < k; ++i) {
    const int v = vertices[static_cast<std::size_t>(i)];
    auto& nbrs = s.adj[static_cast<std::size_t>(i)];
    nbrs.clear();
    for (int u : host.adj[static_cast<std::size_t>(v)]) {
      if (s.stamp[static_cast<std::size_t>(u)] == s.tick) {
        nbrs.push_back(s.local_id[static_cast<std::size_t>(u)]);
        ++edge_count;
      }
    }
  }
  if (edge_count != 2 * (k - 1)) {
    throw std::invalid_argument("subset does not induce a connected subgraph");
  }

  // Subtree sizes from an arbitrary root, farthest-first.
  s.order.clear();
  s.parent.assign(static_cast<std::size_t>(k), -1);
  s.order.push_back(0);
  s.parent[0] = 0;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const int v = s.order[head];
    for (int u : s.adj[static_cast<std::size_t>(v)]) {
      if (s.parent[static_cast<std::size_t>(u)] == -1) {
        s.parent[static_cast<std::size_t>(u)] = v;
        s.order.push_back(u);
      }
    }
  }
  if (static_cast<int>(s.order.size()) != k) {
    throw std::invalid_argument("subset does not induce a connected subgraph");
  }
  s.size.assign(static_cast<std::size_t>(k), 1);
  for (std::size_t i = s.order.size(); i-- > 1;) {
    const int v = s.order[i];
    s.size[static_cast<std::size_t>(s.parent[static_cast<std::size_t>(v)])] +=
        s.size[static_cast<std::size_t>(v)];
  }

  // Centroids: every piece left by removing the vertex has <= k/2 vertices.
  int c1 = -1, c2 = -1;
  for (int v = 0; v < k; ++v) {
    int largest = k - s.size[static_cast<std::size_t>(v)];
    for (int u : s.adj[static_cast<std::size_t>(v)]) {
      if (s.parent[static_cast<std::size_t>(u)] == v && u != 0) {
        largest = std::max(largest, s.size[static_cast<std::size_t>(u)]);
      }
    }
    if (2 * largest <= k) {
      (c1 == -1 ? c1 : c2) = v;
    }
  }

  std::string best = rooted_code(s, k, c1);
  if (c2 != -1) {
    std::string other = rooted_code(s, k, c2);
    if (other < best) best = std::move(other);
  }
  return best;
}

CanonicalCode canonicalize(const Tree& t) {
  std::vector<int> all(static_cast<std::size_t>(t.n()));
  std::iota(all.begin(), all.end(), 0);
  return canonical_code_of_subset(t, all);
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.n() != b.n()) return false;
  return canonicalize(a) == canonicalize(b);
}

}  // namespace treeprof
