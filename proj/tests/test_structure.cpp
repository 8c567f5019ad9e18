#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "treeprof/canonical.hpp"
#include "treeprof/constructions.hpp"
#include "treeprof/free_trees.hpp"
#include "treeprof/structure.hpp"
#include "treeprof/tree.hpp"

using namespace treeprof;
namespace oracle = treeprof_testing;

namespace {

// Two adjacent degree-4 vertices, each also carrying two 2-edge legs: the
// smallest shape with two hubs.
Tree two_hub_tree() {
  return make_tree(10, {{0, 1},
                        {1, 2},
                        {0, 3},
                        {3, 4},
                        {0, 5},
                        {5, 6},
                        {6, 7},
                        {5, 8},
                        {8, 9}});
}

Tree spider_with_center_leaf(int legs, int leg_length) {
  const Tree base = spider(legs, leg_length);
  auto edges = edge_list(base);
  edges.emplace_back(0, base.n());
  return make_tree(base.n() + 1, edges);
}

}  // namespace

TEST_CASE("branches at a vertex: sizes, trivial branches, forks") {
  const Tree chair = sparkler(4);  // center 0, leaves 1 2, tail 0-3-4

  const auto at_center = branches_at(chair, 0);
  REQUIRE(at_center.size() == 3);
  int trivial = 0, forks = 0;
  for (const Branch& b : at_center) {
    CHECK(b.root == 0);
    if (b.is_trivial) ++trivial;
    if (b.is_fork) ++forks;
  }
  CHECK(trivial == 2);
  // The two-edge tail is a star seen from its far end, so it counts as a
  // fork with one hanging leaf.
  CHECK(forks == 1);
  for (const Branch& b : at_center) {
    if (b.is_fork) {
      CHECK(b.vertices == std::vector<int>{0, 3, 4});
      CHECK(b.order == 1);
    }
  }

  const auto at_tail = branches_at(chair, 3);
  REQUIRE(at_tail.size() == 2);
  for (const Branch& b : at_tail) {
    CHECK(b.root == 3);
    if (b.is_trivial) {
      CHECK(b.vertices == std::vector<int>{3, 4});
    } else {
      CHECK(b.is_fork);
      CHECK(b.order == 2);
      CHECK(b.vertices == std::vector<int>{0, 1, 2, 3});
    }
  }

  // A three-edge leg is neither trivial nor a fork (a major branch).
  const Tree p7 = spider(2, 3);
  for (const Branch& b : branches_at(p7, 0)) {
    CHECK(!b.is_trivial);
    CHECK(!b.is_fork);
    CHECK(!b.order.has_value());
  }
}

TEST_CASE("branch vertex sets partition the rest of the tree") {
  for (const Tree& t : all_free_trees(8)) {
    for (int v = 0; v < t.n(); ++v) {
      const auto bs = branches_at(t, v);
      CHECK(bs.size() == static_cast<std::size_t>(degree(t, v)));
      std::vector<int> all;
      for (const Branch& b : bs) {
        // Every branch carries v itself plus its component.
        CHECK(std::binary_search(b.vertices.begin(), b.vertices.end(), v));
        CHECK(b.is_trivial == (b.vertices.size() == 2));
        for (int u : b.vertices) {
          if (u != v) all.push_back(u);
        }
      }
      std::sort(all.begin(), all.end());
      CHECK(all.size() == static_cast<std::size_t>(t.n()) - 1);
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      CHECK(!std::binary_search(all.begin(), all.end(), v));
    }
  }
}

TEST_CASE("nontrivial_branch_count counts non-leaf neighbors") {
  const Tree chair = sparkler(4);
  CHECK(nontrivial_branch_count(chair, 0) == 1);
  CHECK(nontrivial_branch_count(chair, 3) == 1);
  CHECK(nontrivial_branch_count(star(6), 0) == 0);
  CHECK(nontrivial_branch_count(spider(3, 2), 0) == 3);
  const Tree two_hub = two_hub_tree();
  CHECK(nontrivial_branch_count(two_hub, 0) == 3);
  CHECK(nontrivial_branch_count(two_hub, 5) == 3);
}

TEST_CASE("centers: pinned values and oracle agreement") {
  CHECK(centers(path(1)) == std::set<int>{0});
  CHECK(centers(path(7)) == std::set<int>{3});
  CHECK(centers(path(8)) == std::set<int>{3, 4});
  CHECK(centers(star(6)) == std::set<int>{0});
  CHECK(centers(sparkler(4)) == std::set<int>{0});
  CHECK(centers(caterpillar({2, 2})) == std::set<int>{0, 1});

  for (int n = 1; n <= 9; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      const std::set<int> got = centers(t);
      CHECK(got == oracle::centers_bruteforce(t));
      CHECK(got.size() >= 1);
      CHECK(got.size() <= 2);
      if (got.size() == 2) {
        const int a = *got.begin();
        const int b = *std::next(got.begin());
        CHECK(std::binary_search(t.adj[a].begin(), t.adj[a].end(), b));
      }
    }
  }
}

TEST_CASE("eccentricity and radius against brute force") {
  for (int n = 1; n <= 9; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      int min_ecc = t.n();
      for (int v = 0; v < t.n(); ++v) {
        const int ecc = eccentricity(t, v);
        CHECK(ecc == oracle::eccentricity_bruteforce(t, v));
        min_ecc = std::min(min_ecc, ecc);
      }
      CHECK(radius(t) == min_ecc);
    }
  }
  CHECK(radius(path(1)) == 0);
  CHECK(radius(path(2)) == 1);
  CHECK(radius(path(9)) == 4);
  CHECK(radius(star(9)) == 1);
}

TEST_CASE("hubs: pinned instances") {
  CHECK(hubs(path(9)).empty());
  CHECK(hubs(star(9)).empty());
  CHECK(hubs(caterpillar({1, 2, 3})).empty());
  CHECK(hubs(spider(3, 2)) == std::set<int>{0});
  CHECK(hubs(spider_with_center_leaf(3, 5)) == std::set<int>{0});
  CHECK(hubs(two_hub_tree()) == std::set<int>{0, 5});
}

TEST_CASE("hubs exist exactly for non-caterpillars, never more than two") {
  int seen_two = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      const auto h = hubs(t);
      CHECK(h.empty() == classify(t).is_caterpillar);
      CHECK(h.size() <= 2);
      if (h.size() == 2) ++seen_two;
      for (int v : h) CHECK(nontrivial_branch_count(t, v) >= 3);
    }
  }
  CHECK(seen_two > 0);  // the two-hub shapes start at 10 vertices
}

TEST_CASE("caterpillar flag equals the induced-internal-path characterization") {
  for (int n = 1; n <= 11; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      // Reference: non-leaf vertices must induce a connected subgraph with
      // all induced degrees at most 2.
      std::vector<int> internal;
      for (int v = 0; v < t.n(); ++v) {
        if (!is_leaf(t, v)) internal.push_back(v);
      }
      bool ok = true;
      if (!internal.empty()) {
        ok = oracle::subset_connected_oracle(t, internal);
        for (int v : internal) {
          int d = 0;
          for (int u : t.adj[v]) {
            if (!is_leaf(t, u)) ++d;
          }
          if (d > 2) ok = false;
        }
      }
      CHECK(classify(t).is_caterpillar == ok);
    }
  }
}

TEST_CASE("classify: paths, stars, caterpillars, degenerate smalls") {
  for (int n = 1; n <= 9; ++n) {
    const TreeClass p = classify(path(n));
    CHECK(p.is_path);
    CHECK(p.is_caterpillar);
    CHECK(!p.is_sparkler);
    const TreeClass s = classify(star(n));
    CHECK(s.is_star);
    CHECK(s.is_caterpillar);
    if (n <= 3) CHECK(s.is_path);
    if (n >= 4) CHECK(!s.is_path);
  }
  CHECK(classify(caterpillar({0, 2, 1, 3})).is_caterpillar);
  CHECK(!classify(spider(3, 2)).is_caterpillar);
  CHECK(!classify(two_hub_tree()).is_caterpillar);
}

TEST_CASE("sparkler recognition: pinned shapes and forced degree multiset") {
  CHECK(!classify(sparkler(2)).is_sparkler);  // degenerates to a 3-path
  CHECK(!classify(sparkler(3)).is_sparkler);  // degenerates to a 4-path
  for (int k = 4; k <= 9; ++k) {
    CHECK(classify(sparkler(k)).is_sparkler);
  }
  CHECK(!classify(star(7)).is_sparkler);
  CHECK(!classify(path(7)).is_sparkler);

  // On 6 and 7 vertices the degree test must single out exactly the
  // sparkler class.
  for (int n : {6, 7}) {
    const CanonicalCode target = canonicalize(sparkler(n - 1));
    for (const Tree& t : all_free_trees(n)) {
      CHECK(classify(t).is_sparkler == (canonicalize(t) == target));
    }
  }
}
