#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "treeprof/canonical.hpp"
#include "treeprof/constructions.hpp"
#include "treeprof/free_trees.hpp"
#include "treeprof/search.hpp"
#include "treeprof/subtrees.hpp"
#include "treeprof/tree.hpp"

using namespace treeprof;
namespace oracle = treeprof_testing;

namespace {

std::vector<std::vector<int>> collect_subtrees(const Tree& t, int k) {
  std::vector<std::vector<int>> out;
  for_each_subtree(t, k, [&](const std::vector<int>& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

Integer binom_small(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

TEST_CASE("connected k-subset enumeration matches the bitmask oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      for (int k = 1; k <= n; ++k) {
        CHECK(collect_subtrees(t, k) == oracle::connected_subsets_bruteforce(t, k));
      }
    }
  }
  std::mt19937_64 rng(424242);
  const Tree t = random_tree(rng, 12);
  for (int k = 1; k <= 12; ++k) {
    CHECK(collect_subtrees(t, k) == oracle::connected_subsets_bruteforce(t, k));
  }
}

TEST_CASE("enumeration outside the valid range yields nothing") {
  const Tree t = path(5);
  CHECK(collect_subtrees(t, 6).empty());
  CHECK(collect_subtrees(t, 0).empty());
  CHECK(enumerate_subtrees(t, 9).empty());
}

TEST_CASE("a false-returning visitor stops the walk") {
  const Tree t = path(8);
  int seen = 0;
  for_each_subtree(t, 3, [&](const std::vector<int>&) {
    ++seen;
    return seen < 2;
  });
  CHECK(seen == 2);
}

TEST_CASE("enumerate_subtrees is sorted and sized like the visitor walk") {
  const Tree t = spider(3, 3);
  const auto embeddings = enumerate_subtrees(t, 4);
  CHECK(embeddings.size() == collect_subtrees(t, 4).size());
  for (std::size_t i = 0; i + 1 < embeddings.size(); ++i) {
    CHECK(embeddings[i].vertices < embeddings[i + 1].vertices);
  }
  for (const Embedding& e : embeddings) {
    CHECK(e.host == &t);
    CHECK(e.vertices.size() == 4);
    CHECK(std::is_sorted(e.vertices.begin(), e.vertices.end()));
  }
}

TEST_CASE("the counting dynamic program agrees with the enumeration") {
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      for (int k = 1; k <= n; ++k) {
        CHECK(count_subtrees(t, k) ==
              Integer(static_cast<long>(collect_subtrees(t, k).size())));
      }
    }
  }
  std::mt19937_64 rng(99);
  const Tree t = random_tree(rng, 13);
  for (int k = 1; k <= 13; ++k) {
    CHECK(count_subtrees(t, k) ==
          Integer(static_cast<long>(collect_subtrees(t, k).size())));
  }
}

TEST_CASE("subtree counts: pinned values and closed forms") {
  CHECK(count_subtrees(path(5), 3) == 3);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(count_subtrees(path(n), k) == n - k + 1);
      if (k >= 2) {
        CHECK(count_subtrees(star(n), k) == binom_small(n - 1, k - 1));
      }
    }
    CHECK(count_subtrees(path(n), n + 1) == 0);
  }
  CHECK_THROWS_AS(count_subtrees(path(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(count_subtrees(path(4), -1), std::invalid_argument);
}

TEST_CASE("the code census partitions the subtree count") {
  std::mt19937_64 rng(7);
  const Tree t = random_tree(rng, 14);
  for (int k : {1, 2, 4, 7}) {
    const auto census = subtree_code_census(t, k);
    Integer sum = 0;
    for (const auto& [code, count] : census) {
      CHECK(count > 0);
      sum += count;
    }
    CHECK(sum == count_subtrees(t, k));

    // Every key names a genuine k-vertex isomorphism class.
    std::vector<CanonicalCode> universe;
    for (const Tree& rep : all_free_trees(k)) universe.push_back(canonicalize(rep));
    for (const auto& [code, count] : census) {
      CHECK(std::binary_search(universe.begin(), universe.end(), code));
    }

    CHECK(subtree_code_census(t, k, 4) == census);
  }
}

TEST_CASE("embedding counts: pinned values") {
  const Tree chair = sparkler(4);
  CHECK(count_embeddings(chair, caterpillar({2, 2})) == 4);
  CHECK(count_embeddings(path(3), star(5)) == 6);
  CHECK(count_embeddings(chair, chair) == 1);
  CHECK(count_embeddings(star(4), path(6)) == 0);
  CHECK(count_embeddings(path(4), path(3)) == 0);  // host smaller than pattern
}

TEST_CASE("contains_copy agrees with a positive embedding count") {
  const auto patterns = all_free_trees(5);
  for (const Tree& host : all_free_trees(8)) {
    for (const Tree& s : patterns) {
      CHECK(contains_copy(s, host) == (count_embeddings(s, host) > 0));
    }
  }
  CHECK(contains_copy(path(3), path(2)) == false);
}

TEST_CASE("joint count returns embeddings and the total in one pass") {
  const Tree host = sparkler_host({4, 1, 12});
  const auto [copies, total] = count_embeddings_and_total(sparkler(4), host);
  CHECK(copies == 156);
  CHECK(total == 1186);
  const auto threaded = count_embeddings_and_total(sparkler(4), host, 4);
  CHECK(threaded.first == copies);
  CHECK(threaded.second == total);
}

TEST_CASE("density: pinned values and conventions") {
  CHECK(density(sparkler(4), sparkler_host({4, 1, 12})) ==
        make_rational(78, 593));
  CHECK(density(path(4), path(3)) == Rational(0));  // undersized host reads 0
  CHECK(density(path(4), path(6)) == Rational(1));
  CHECK(density(path(1), star(9)) == Rational(1));
  CHECK(density(sparkler(4), sparkler_host({4, 1, 12}), 3) ==
        make_rational(78, 593));
}

TEST_CASE("profiles: pinned entries") {
  const ProfileVector p6 = profile(path(6), 4);
  REQUIRE(p6.entries.size() == 1);
  CHECK(p6.entries[0].first == canonicalize(path(4)));
  CHECK(p6.entries[0].second == Rational(1));

  const ProfileVector chair_profile = profile(sparkler(4), 4);
  REQUIRE(chair_profile.entries.size() == 2);
  CHECK(chair_profile.at(canonicalize(path(4))) == make_rational(2, 3));
  CHECK(chair_profile.at(canonicalize(star(4))) == make_rational(1, 3));
  CHECK(chair_profile.at(canonicalize(path(5))) == Rational(0));
}

TEST_CASE("profiles sum to one exactly whenever the host is large enough") {
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      for (int k = 1; k <= n; ++k) {
        const ProfileVector p = profile(t, k);
        CHECK(p.k == k);
        CHECK(p.sum() == Rational(1));
        CHECK(std::is_sorted(
            p.entries.begin(), p.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; }));
        for (const auto& [code, value] : p.entries) {
          CHECK(value > Rational(0));
        }
      }
    }
  }
}

TEST_CASE("profile conventions: oversized k, bad k, thread equivalence") {
  const ProfileVector empty = profile(path(4), 6);
  CHECK(empty.k == 6);
  CHECK(empty.entries.empty());
  CHECK(empty.sum() == Rational(0));
  CHECK(empty.at(canonicalize(path(6))) == Rational(0));
  CHECK_THROWS_AS(profile(path(4), 0), std::invalid_argument);

  std::mt19937_64 rng(1234);
  const Tree t = random_tree(rng, 15);
  const ProfileVector seq = profile(t, 6, 1);
  const ProfileVector par = profile(t, 6, 4);
  REQUIRE(seq.entries.size() == par.entries.size());
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    CHECK(seq.entries[i].first == par.entries[i].first);
    CHECK(seq.entries[i].second == par.entries[i].second);
  }
}
