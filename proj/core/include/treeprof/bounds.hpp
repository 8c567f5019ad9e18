#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeprof/rational.hpp"

namespace treeprof {

// Closed-form evaluators for the sparkler-host counting identities and the
// density bounds they support. All values are exact; enumeration
// cross-checks live in the test suites and the verify CLI.

// Copies of the k-edge sparkler in the host with n vertebrae and L leaves
// per vertebra: 2n * C(L+1, k-2). Requires k >= 4, n >= 1, L >= 0.
Integer sparkler_copy_count(int k, long long n, long long L);

// All k-edge subtrees of the same host: n * sum_{j=0..k} (j+1) * C(L, k-j),
// where j counts spine edges used. Requires k >= 4, n >= 1, L >= 0.
Integer sparkler_total_count(int k, long long n, long long L);

// copy/total; independent of n since both counts are linear in n.
Rational sparkler_host_density(int k, long long L);

// Closed-form lower bound on the host density at L = 3k:
// (3k+1)k(k-1) / (2(2k+3)(2k+2)(2k+1)). At least 13/165 for every k >= 4,
// with equality exactly at k = 4; tends to 3/16 as k grows.
Rational sparkler_density_bound(int k);

// Upper bound 1 - k^-(2k-3) on the maximum density achievable by a k-vertex
// pattern that is neither a path nor a star. Requires k >= 5.
Rational inducibility_upper_bound(int k);

// Flat reference constant 1 - 10^-35 for patterns that are neither paths
// nor stars, independent of the pattern size. Reference value only; nothing
// at desk scale certifies it.
Rational uniform_inducibility_bound();

// Guaranteed density of any k-vertex pattern in the universal host family:
// 1 / (2 (k!)^2 k^(k-1) E + zk_tk) where E is a rational upper bound on
// e^(2k) (conservative: the returned value understates the guarantee, so a
// passing check never overclaims) and zk_tk counts the k-subtrees of the
// stage-k universal tree. Requires k >= 3.
Rational universal_density_bound(int k, const Integer& zk_tk);

// Slack term (k(max_degree-1))^(k-1) of the gluing inequality: gluing two
// trees adds at least zero and at most this many new k-subtrees beyond the
// sum of the operands'. Requires k >= 2, max_degree >= 1.
Integer glue_upper_slack(int k, int max_degree);

// Empirically best leaves-per-vertebra in [lo, hi] for the k-sparkler host,
// by exact scan of sparkler_host_density; smallest argmax on ties.
long long best_leaf_count(int k, long long lo, long long hi);

// One exact comparison: `holds` reflects the stated relation between
// observed and claimed under rational arithmetic. Context keys keep their
// insertion order for reproducible reports.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> context;
  Rational claimed;
  Rational observed;
  bool holds = false;
};

}  // namespace treeprof
