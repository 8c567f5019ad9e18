#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "treeprof/canonical.hpp"
#include "treeprof/rational.hpp"
#include "treeprof/subtrees.hpp"
#include "treeprof/tree.hpp"

namespace treeprof {

inline constexpr int kSearchCap = 14;

// Exact maximum of density(s, h) over one representative per n-vertex
// isomorphism class, with every maximizing host listed by canonical code.
struct SearchResult {
  CanonicalCode s_code;
  int n = 0;
  Rational max_density;
  std::vector<CanonicalCode> argmax_hosts;  // sorted by code
};

// Requires |s| <= n <= cap (default 14, where the class count is 3159).
SearchResult exhaustive_max_density(const Tree& s, int n, int cap = kSearchCap);

enum class HostFamily { kSparklerHost, kUniversal, kSpider, kPath, kStar };

struct TrajectoryParams {
  int k = 4;                 // sparkler-host only
  long long leaves = 12;     // sparkler-host only
  int leg_length = 2;        // spider only: legs = n, fixed leg length
};

struct TrajectoryPoint {
  int n = 0;
  Rational value;
};

// density(s, family(n)) for n in [n_from, n_to]; exact values, no limit or
// monotonicity claim.
std::vector<TrajectoryPoint> density_trajectory(const Tree& s,
                                                HostFamily family,
                                                const TrajectoryParams& params,
                                                int n_from, int n_to);

// Embeddings reachable from `base` by moving at most `radius` edges: same
// size, and the intersection with base induces a connected subgraph on at
// least |base| - radius vertices. Contains base itself.
struct MoveNeighborhood {
  std::vector<int> base;  // sorted
  int radius = 0;
  std::vector<std::vector<int>> members;  // sorted sets, lexicographic order
};

// Requires 1 <= radius <= 3 and base inducing a subtree of host.
MoveNeighborhood move_neighborhood(const Tree& host,
                                   const std::vector<int>& base, int radius);

// Union of the centers of every member of the radius-3 neighborhood of
// base, as host vertex ids. Requires |base| >= 17; the result has at most 8
// elements.
std::set<int> center_drift_set(const Tree& host, const std::vector<int>& base);

// Union of the hubs of every member of the radius-3 neighborhood of base
// that is isomorphic to s, as host vertex ids. Requires s non-caterpillar
// and |s| = |base| >= 17; the result has at most 144 elements.
std::set<int> hub_drift_set(const Tree& s, const Tree& host,
                            const std::vector<int>& base);

// Seeded random host + embedded base for drift experiments; deterministic
// for a given generator state (sampling uses raw generator words, so results
// do not depend on the standard library's distribution implementations).
struct DriftInstance {
  Tree host;
  std::vector<int> base;
};

Tree random_tree(std::mt19937_64& rng, int n);

// Host of host_min..host_max vertices (one quarter of them paths), base a
// random connected subset of base_min..base_max vertices. When
// require_noncaterpillar_base is set, resamples until the base induces a
// non-caterpillar subtree.
DriftInstance random_drift_instance(std::mt19937_64& rng, int host_min,
                                    int host_max, int base_min, int base_max,
                                    bool require_noncaterpillar_base);

}  // namespace treeprof
