#include "treeprof/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace treeprof {

namespace {

// Distances and BFS-tree parents from root.
void bfs(const Tree& t, int root, std::vector<int>& dist,
         std::vector<int>& parent) {
  dist.assign(static_cast<std::size_t>(t.n()), -1);
  parent.assign(static_cast<std::size_t>(t.n()), -1);
  std::vector<int> queue = {root};
  dist[static_cast<std::size_t>(root)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int u : t.adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(u)] == -1) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        parent[static_cast<std::size_t>(u)] = v;
        queue.push_back(u);
      }
    }
  }
}

}  // namespace

std::vector<Branch> branches_at(const Tree& t, int v) {
  if (v < 0 || v >= t.n()) throw std::invalid_argument("vertex out of range");
  std::vector<Branch> out;
  std::vector<char> seen(static_cast<std::size_t>(t.n()), 0);
  seen[static_cast<std::size_t>(v)] = 1;
  for (int start : t.adj[static_cast<std::size_t>(v)]) {
    // Flood the component of t minus v that contains `start`.
    std::vector<int> component = {start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (int u : t.adj[static_cast<std::size_t>(component[head])]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          component.push_back(u);
        }
      }
    }
    Branch b;
    b.root = v;
    b.vertices = component;
    b.vertices.push_back(v);
    std::sort(b.vertices.begin(), b.vertices.end());
    b.is_trivial = component.size() == 1;
    // Fork: the component is a star centered at the unique neighbor of v
    // inside it, i.e. every other component vertex is a leaf hanging off
    // `start`. Then the branch is that star with the root at one leaf.
    if (!b.is_trivial) {
      bool fork = true;
      for (int u : component) {
        if (u == start) continue;
        const auto& nbrs = t.adj[static_cast<std::size_t>(u)];
        if (nbrs.size() != 1 || nbrs[0] != start) {
          fork = false;
          break;
        }
      }
      b.is_fork = fork;
      if (fork) b.order = static_cast<int>(component.size()) - 1;
    }
    out.push_back(std::move(b));
  }
  return out;
}

int nontrivial_branch_count(const Tree& t, int v) {
  // A branch at v is non-trivial iff its component has >= 2 vertices, i.e.
  // the neighbor starting it is not a leaf.
  int count = 0;
  for (int u : t.adj[static_cast<std::size_t>(v)]) {
    if (!is_leaf(t, u)) ++count;
  }
  return count;
}

std::set<int> centers(const Tree& t) {
  const int n = t.n();
  std::set<int> out;
  if (n == 1) {
    out.insert(0);
    return out;
  }
  // Component sizes via subtree sizes from a fixed root; the branch at v
  // through neighbor u has as many edges as the component has vertices.
  std::vector<int> dist, parent;
  bfs(t, 0, dist, parent);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)];
  });
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (int v : order) {
    if (v != 0) {
      size[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] +=
          size[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 0; v < n; ++v) {
    int largest = n - size[static_cast<std::size_t>(v)];
    for (int u : t.adj[static_cast<std::size_t>(v)]) {
      if (u != 0 && parent[static_cast<std::size_t>(u)] == v) {
        largest = std::max(largest, size[static_cast<std::size_t>(u)]);
      }
    }
    if (2 * largest <= n) out.insert(v);
  }
  return out;
}

std::set<int> hubs(const Tree& t) {
  const int n = t.n();
  std::vector<int> heavy(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    heavy[static_cast<std::size_t>(v)] = nontrivial_branch_count(t, v) >= 3;
  }
  const std::set<int> cs = centers(t);
  // Per-center BFS trees; walking parent pointers from v inside the tree of
  // its nearest center yields exactly the path between them. Two centers
  // are adjacent, so distances differ by one and "nearest" never ties.
  std::vector<std::vector<int>> dists, parents;
  std::vector<int> center_list(cs.begin(), cs.end());
  for (int c : center_list) {
    std::vector<int> d, p;
    bfs(t, c, d, p);
    dists.push_back(std::move(d));
    parents.push_back(std::move(p));
  }
  std::set<int> out;
  for (int v = 0; v < n; ++v) {
    if (!heavy[static_cast<std::size_t>(v)]) continue;
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < center_list.size(); ++i) {
      if (dists[i][static_cast<std::size_t>(v)] <
          dists[nearest][static_cast<std::size_t>(v)]) {
        nearest = i;
      }
    }
    bool only_heavy_on_path = true;
    int w = v;
    while (w != center_list[nearest]) {
      w = parents[nearest][static_cast<std::size_t>(w)];
      if (heavy[static_cast<std::size_t>(w)]) {
        only_heavy_on_path = false;
        break;
      }
    }
    if (only_heavy_on_path) out.insert(v);
  }
  return out;
}

int eccentricity(const Tree& t, int v) {
  std::vector<int> dist, parent;
  bfs(t, v, dist, parent);
  return *std::max_element(dist.begin(), dist.end());
}

int radius(const Tree& t) {
  // Double sweep: the diameter of a tree runs between a farthest vertex
  // from anywhere and a farthest vertex from there; radius = ceil(diam/2).
  std::vector<int> dist, parent;
  bfs(t, 0, dist, parent);
  const int a = static_cast<int>(
      std::max_element(dist.begin(), dist.end()) - dist.begin());
  bfs(t, a, dist, parent);
  const int diameter = *std::max_element(dist.begin(), dist.end());
  return (diameter + 1) / 2;
}

TreeClass classify(const Tree& t) {
  const int n = t.n();
  TreeClass c;
  c.is_path = max_degree(t) <= 2;
  int internal = 0;
  for (int v = 0; v < n; ++v) {
    if (degree(t, v) >= 2) ++internal;
  }
  c.is_star = internal <= 1;
  // Caterpillar: no vertex roots three or more non-trivial branches
  // (equivalently, the internal vertices induce a path).
  c.is_caterpillar = true;
  for (int v = 0; v < n; ++v) {
    if (nontrivial_branch_count(t, v) >= 3) {
      c.is_caterpillar = false;
      break;
    }
  }
  // Sparkler with >= 4 edges: one vertex adjacent to everything but one
  // leaf at distance two. The degree multiset {n-2, 2, 1, ..., 1} forces
  // the shape once n >= 5.
  if (n >= 5) {
    int deg_high = 0, deg_two = 0, deg_one = 0;
    for (int v = 0; v < n; ++v) {
      const int d = degree(t, v);
      if (d == n - 2) ++deg_high;
      if (d == 2) ++deg_two;
      if (d == 1) ++deg_one;
    }
    c.is_sparkler = deg_high == 1 && deg_two == 1 && deg_one == n - 2;
  }
  return c;
}

}  // namespace treeprof
