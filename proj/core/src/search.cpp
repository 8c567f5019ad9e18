#include "treeprof/search.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "treeprof/constructions.hpp"
#include "treeprof/free_trees.hpp"
#include "treeprof/structure.hpp"

namespace treeprof {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Visits every j-element index combination of {0, ..., m-1} in lexicographic
// order.
template <class Fn>
void for_each_combination(int m, int j, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(j));
  if (j == 0) {
    fn(idx);
    return;
  }
  if (j > m) return;
  for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int p = j - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == m - j + p) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < j; ++q) {
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
}

// Whether the sorted vertex set induces a connected subgraph of t. The empty
// set counts as connected.
bool subset_connected(const Tree& t, const std::vector<int>& verts) {
  if (verts.empty()) return true;
  std::vector<int> reached{verts.front()};
  std::vector<char> seen(verts.size(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (int u : t.adj[reached[i]]) {
      auto it = std::lower_bound(verts.begin(), verts.end(), u);
      if (it == verts.end() || *it != u) continue;
      const auto pos = static_cast<std::size_t>(it - verts.begin());
      if (!seen[pos]) {
        seen[pos] = 1;
        reached.push_back(u);
      }
    }
  }
  return reached.size() == verts.size();
}

// Local vertex i of an induced subtree is the i-th smallest member of the
// subset; lift a local vertex set back to host ids.
std::set<int> lift_to_host(const std::vector<int>& member,
                           const std::set<int>& local) {
  std::set<int> out;
  for (int v : local) out.insert(member[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

SearchResult exhaustive_max_density(const Tree& s, int n, int cap) {
  require(s.n() <= n, "host size below pattern size");
  require(n <= cap, "host size above the search cap of " + std::to_string(cap));
  SearchResult result;
  result.s_code = canonicalize(s);
  result.n = n;
  bool first = true;
  for (const Tree& host : all_free_trees(n, cap)) {
    const Rational value = density(s, host);
    if (first || value > result.max_density) {
      result.max_density = value;
      result.argmax_hosts = {canonicalize(host)};
      first = false;
    } else if (value == result.max_density) {
      result.argmax_hosts.push_back(canonicalize(host));
    }
  }
  return result;
}

std::vector<TrajectoryPoint> density_trajectory(const Tree& s,
                                                HostFamily family,
                                                const TrajectoryParams& params,
                                                int n_from, int n_to) {
  require(n_from >= 1 && n_from <= n_to, "need 1 <= n_from <= n_to");
  std::vector<TrajectoryPoint> points;
  points.reserve(static_cast<std::size_t>(n_to - n_from) + 1);
  for (int n = n_from; n <= n_to; ++n) {
    Tree host = [&] {
      switch (family) {
        case HostFamily::kSparklerHost:
          return sparkler_host({params.k, n, params.leaves});
        case HostFamily::kUniversal:
          return universal_tree(n);
        case HostFamily::kSpider:
          return spider(n, params.leg_length);
        case HostFamily::kPath:
          return path(n);
        case HostFamily::kStar:
          return star(n);
      }
      throw std::invalid_argument("unknown host family");
    }();
    points.push_back(TrajectoryPoint{n, density(s, host)});
  }
  return points;
}

MoveNeighborhood move_neighborhood(const Tree& host,
                                   const std::vector<int>& base, int radius) {
  require(radius >= 1 && radius <= 3, "radius must be between 1 and 3");
  std::vector<int> sorted_base = base;
  std::sort(sorted_base.begin(), sorted_base.end());
  induced_subtree(host, sorted_base);  // validates the base

  std::vector<int> outside;
  outside.reserve(static_cast<std::size_t>(host.n()) - sorted_base.size());
  for (int v = 0; v < host.n(); ++v) {
    if (!std::binary_search(sorted_base.begin(), sorted_base.end(), v)) {
      outside.push_back(v);
    }
  }

  MoveNeighborhood nb;
  nb.base = sorted_base;
  nb.radius = radius;
  const int b = static_cast<int>(sorted_base.size());
  const int m = static_cast<int>(outside.size());
  for (int j = 0; j <= std::min(radius, b); ++j) {
    for_each_combination(b, j, [&](const std::vector<int>& removed) {
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(b - j));
      std::size_t r = 0;
      for (int i = 0; i < b; ++i) {
        if (r < removed.size() && removed[r] == i) {
          ++r;
        } else {
          rest.push_back(sorted_base[static_cast<std::size_t>(i)]);
        }
      }
      if (!subset_connected(host, rest)) return;
      for_each_combination(m, j, [&](const std::vector<int>& added) {
        std::vector<int> candidate;
        candidate.reserve(static_cast<std::size_t>(b));
        std::vector<int> extra;
        extra.reserve(static_cast<std::size_t>(j));
        for (int i : added) extra.push_back(outside[static_cast<std::size_t>(i)]);
        std::merge(rest.begin(), rest.end(), extra.begin(), extra.end(),
                   std::back_inserter(candidate));
        if (subset_connected(host, candidate)) {
          nb.members.push_back(std::move(candidate));
        }
      });
    });
  }
  std::sort(nb.members.begin(), nb.members.end());
  return nb;
}

std::set<int> center_drift_set(const Tree& host, const std::vector<int>& base) {
  require(base.size() >= 17, "drift experiments need a base of 17+ vertices");
  std::set<int> drift;
  const MoveNeighborhood nb = move_neighborhood(host, base, 3);
  for (const auto& member : nb.members) {
    const Tree sub = induced_subtree(host, member);
    for (int v : lift_to_host(member, centers(sub))) drift.insert(v);
  }
  return drift;
}

std::set<int> hub_drift_set(const Tree& s, const Tree& host,
                            const std::vector<int>& base) {
  require(base.size() >= 17, "drift experiments need a base of 17+ vertices");
  require(s.n() == static_cast<int>(base.size()),
          "pattern size must match the base size");
  require(!classify(s).is_caterpillar,
          "hub drift needs a non-caterpillar pattern");
  const CanonicalCode target = canonicalize(s);
  std::set<int> drift;
  const MoveNeighborhood nb = move_neighborhood(host, base, 3);
  for (const auto& member : nb.members) {
    if (canonical_code_of_subset(host, member) != target) continue;
    const Tree sub = induced_subtree(host, member);
    for (int v : lift_to_host(member, hubs(sub))) drift.insert(v);
  }
  return drift;
}

Tree random_tree(std::mt19937_64& rng, int n) {
  require(n >= 1, "tree size must be positive");
  if (n == 1) return make_tree(1, {});
  if (n == 2) return make_tree(2, {{0, 1}});
  std::vector<int> seq(static_cast<std::size_t>(n) - 2);
  for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int x : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return make_tree(n, edges);
}

DriftInstance random_drift_instance(std::mt19937_64& rng, int host_min,
                                    int host_max, int base_min, int base_max,
                                    bool require_noncaterpillar_base) {
  require(base_min >= 1 && base_min <= base_max, "bad base size range");
  require(host_min <= host_max, "bad host size range");
  require(base_max <= host_min, "base sizes must fit in every host size");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int host_n =
        host_min + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                              host_max - host_min + 1));
    const bool use_path = rng() % 4 == 0;
    Tree host = use_path ? path(host_n) : random_tree(rng, host_n);
    const int base_n =
        base_min + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                              base_max - base_min + 1));
    std::vector<char> member(static_cast<std::size_t>(host_n), 0);
    std::vector<char> queued(static_cast<std::size_t>(host_n), 0);
    std::vector<int> base, frontier;
    const int start = static_cast<int>(rng() % static_cast<std::uint64_t>(host_n));
    base.push_back(start);
    member[static_cast<std::size_t>(start)] = 1;
    for (int u : host.adj[start]) {
      frontier.push_back(u);
      queued[static_cast<std::size_t>(u)] = 1;
    }
    while (static_cast<int>(base.size()) < base_n) {
      const auto pick = static_cast<std::size_t>(rng() % frontier.size());
      const int v = frontier[pick];
      frontier[pick] = frontier.back();
      frontier.pop_back();
      base.push_back(v);
      member[static_cast<std::size_t>(v)] = 1;
      for (int u : host.adj[v]) {
        if (!member[static_cast<std::size_t>(u)] &&
            !queued[static_cast<std::size_t>(u)]) {
          frontier.push_back(u);
          queued[static_cast<std::size_t>(u)] = 1;
        }
      }
    }
    std::sort(base.begin(), base.end());
    if (require_noncaterpillar_base &&
        classify(induced_subtree(host, base)).is_caterpillar) {
      continue;
    }
    return DriftInstance{std::move(host), std::move(base)};
  }
  throw std::runtime_error("could not sample a matching instance");
}

}  // namespace treeprof
