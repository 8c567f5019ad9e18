#include "treeprof/constructions.hpp"

#include <stdexcept>
#include <string>

namespace treeprof {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_within_cap(bool ok, const std::string& message) {
  if (!ok) throw std::length_error(message);
}

int lowest_leaf(const Tree& t) {
  for (int v = 0; v < t.n(); ++v) {
    if (is_leaf(t, v)) return v;
  }
  throw std::logic_error("tree without a leaf");
}

int attach_vertex(const Tree& t, const AttachRule& rule) {
  if (rule.kind == AttachRule::kLowestLeaf) return lowest_leaf(t);
  require(rule.vertex >= 0 && rule.vertex < t.n(),
          "attachment vertex out of range");
  return rule.vertex;
}

}  // namespace

Tree path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_tree(n, edges);
}

Tree star(int n) {
  require(n >= 1, "star needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return make_tree(n, edges);
}

Tree spider(int legs, int leg_length) {
  require(legs >= 0, "leg count must be nonnegative");
  require(leg_length >= 1, "leg length must be positive");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int leg = 0; leg < legs; ++leg) {
    int prev = 0;
    for (int step = 0; step < leg_length; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_tree(next, edges);
}

Tree caterpillar(const std::vector<int>& leaf_counts) {
  require(!leaf_counts.empty(), "caterpillar needs a nonempty spine");
  const int m = static_cast<int>(leaf_counts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  int next = m;
  for (int i = 0; i < m; ++i) {
    require(leaf_counts[static_cast<std::size_t>(i)] >= 0,
            "leaf counts must be nonnegative");
    for (int j = 0; j < leaf_counts[static_cast<std::size_t>(i)]; ++j) {
      edges.emplace_back(i, next++);
    }
  }
  return make_tree(next, edges);
}

Tree sparkler(int k) {
  require(k >= 2, "sparkler needs at least two edges");
  // Center 0, plain leaves 1..k-2, subdivision vertex k-1, far tip k.
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k - 2; ++i) edges.emplace_back(0, i);
  edges.emplace_back(0, k - 1);
  edges.emplace_back(k - 1, k);
  return make_tree(k + 1, edges);
}

Tree sparkler_host(const SparklerHostParams& params) {
  const int k = params.k;
  const int n = params.n;
  const long long leaves = params.leaves_per_vertebra;
  require(k >= 4, "host needs k >= 4");
  require(n >= 1, "host needs at least one vertebra");
  require(leaves >= 1, "host needs at least one leaf per vertebra");
  const long long spine = static_cast<long long>(n) * (k + 1) + k;
  const long long total = spine + static_cast<long long>(n) * leaves;
  require_within_cap(total <= kUniversalSizeCap, "host exceeds the size cap");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(total) - 1);
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = static_cast<int>(spine);
  for (int j = 1; j <= n; ++j) {
    const int vertebra = j * (k + 1) - 1;
    for (long long l = 0; l < leaves; ++l) edges.emplace_back(vertebra, next++);
  }
  return make_tree(next, edges);
}

Tree complete_dary(int d) {
  require(d >= 1, "arity must be positive");
  long long size = 0, level = 1;
  for (int i = 0; i <= d; ++i) {
    size += level;
    level *= d;
    require_within_cap(size <= kUniversalSizeCap,
                       "complete block exceeds the size cap");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(size) - 1);
  int next = 1;
  for (int parent = 0; next < size; ++parent) {
    for (int c = 0; c < d && next < size; ++c) edges.emplace_back(parent, next++);
  }
  return make_tree(static_cast<int>(size), edges);
}

Tree glue(const Tree& a, const Tree& b, const GlueSpec& spec) {
  const int va = attach_vertex(a, spec.left);
  const int vb = attach_vertex(b, spec.right);
  const int shift = a.n();
  std::vector<std::pair<int, int>> edges = edge_list(a);
  for (const auto& [u, v] : edge_list(b)) edges.emplace_back(u + shift, v + shift);
  edges.emplace_back(va, vb + shift);
  return make_tree(a.n() + b.n(), edges);
}

Tree glue_power(const Tree& t, long long ell, const GlueSpec& spec) {
  require(ell >= 1, "gluing power must be positive");
  require_within_cap(static_cast<long long>(t.n()) * ell <= kUniversalSizeCap,
                     "gluing power exceeds the size cap");
  Tree acc = t;
  for (long long i = 1; i < ell; ++i) acc = glue(acc, t, spec);
  return acc;
}

namespace {

std::int64_t complete_dary_size(int d) {
  __int128 size = 0, level = 1;
  for (int i = 0; i <= d; ++i) {
    size += level;
    level *= d;
    if (size > static_cast<__int128>(INT64_MAX)) {
      throw std::overflow_error("complete block size exceeds 2^63");
    }
  }
  return static_cast<std::int64_t>(size);
}

UniversalBuild glue_logged(UniversalBuild a, const UniversalBuild& b) {
  const int shift = a.tree.n();
  const int va = lowest_leaf(a.tree);
  const int vb = lowest_leaf(b.tree);
  a.glue_edges.reserve(a.glue_edges.size() + b.glue_edges.size() + 1);
  for (const auto& [u, v] : b.glue_edges) {
    a.glue_edges.emplace_back(u + shift, v + shift);
  }
  a.glue_edges.emplace_back(va, vb + shift);
  a.tree = glue(a.tree, b.tree);
  return a;
}

}  // namespace

std::int64_t universal_tree_size(int n) {
  require(n >= 1, "stage must be positive");
  __int128 size = 0;
  for (int d = 1; d <= n; ++d) {
    size = complete_dary_size(d) + static_cast<__int128>(d) * d * size;
    if (size > static_cast<__int128>(INT64_MAX)) {
      throw std::overflow_error("universal host size exceeds 2^63");
    }
  }
  return static_cast<std::int64_t>(size);
}

UniversalBuild universal_tree_build(int n, std::int64_t size_cap) {
  require(n >= 1, "stage must be positive");
  require(size_cap >= 1, "size cap must be positive");
  const std::int64_t size = universal_tree_size(n);
  if (size > size_cap) {
    throw std::length_error("universal host of stage " + std::to_string(n) +
                            " has " + std::to_string(size) +
                            " vertices, above the cap of " +
                            std::to_string(size_cap));
  }
  UniversalBuild build{complete_dary(1), {}};
  for (int d = 2; d <= n; ++d) {
    UniversalBuild power = build;
    for (int i = 1; i < d * d; ++i) power = glue_logged(std::move(power), build);
    build = glue_logged(UniversalBuild{complete_dary(d), {}}, power);
  }
  return build;
}

Tree universal_tree(int n, std::int64_t size_cap) {
  return universal_tree_build(n, size_cap).tree;
}

}  // namespace treeprof
