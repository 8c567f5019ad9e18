#include "treeprof/subtrees.hpp"

#include <stdexcept>
#include <string>
#include <thread>

namespace treeprof {

std::vector<Embedding> enumerate_subtrees(const Tree& t, int k) {
  std::vector<Embedding> out;
  for_each_subtree(t, k, [&](const std::vector<int>& s) {
    out.push_back(Embedding{&t, s});
  });
  std::sort(out.begin(), out.end(),
            [](const Embedding& a, const Embedding& b) {
              return a.vertices < b.vertices;
            });
  return out;
}

Integer count_subtrees(const Tree& t, int k) {
  if (k < 1) throw std::invalid_argument("subtree size must be positive");
  const int n = t.n();
  if (k > n) return 0;
  if (k == 1) return n;

  // Orient at vertex 0 and process children before parents.
  std::vector<int> order, parent(static_cast<std::size_t>(n), -1);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int u : t.adj[v]) {
      if (parent[static_cast<std::size_t>(u)] < 0) {
        parent[static_cast<std::size_t>(u)] = v;
        order.push_back(u);
      }
    }
  }

  // f[v][s] = number of s-vertex subtrees containing v whose remaining
  // vertices all lie below v; combining children multiplies the size
  // polynomials (1 + f_c), truncated beyond k.
  std::vector<std::vector<Integer>> f(
      static_cast<std::size_t>(n),
      std::vector<Integer>(static_cast<std::size_t>(k) + 1));
  std::vector<Integer> merged(static_cast<std::size_t>(k) + 1);
  for (std::size_t i = order.size(); i-- > 0;) {
    const int v = order[i];
    auto& fv = f[static_cast<std::size_t>(v)];
    fv[1] = 1;
    for (int u : t.adj[v]) {
      if (v != 0 && u == parent[static_cast<std::size_t>(v)]) continue;
      const auto& fu = f[static_cast<std::size_t>(u)];
      for (int s = 0; s <= k; ++s) merged[static_cast<std::size_t>(s)] = 0;
      for (int s = 1; s <= k; ++s) {
        if (fv[static_cast<std::size_t>(s)] == 0) continue;
        merged[static_cast<std::size_t>(s)] += fv[static_cast<std::size_t>(s)];
        for (int j = 1; s + j <= k; ++j) {
          merged[static_cast<std::size_t>(s + j)] +=
              fv[static_cast<std::size_t>(s)] * fu[static_cast<std::size_t>(j)];
        }
      }
      fv.swap(merged);
    }
  }

  // Each subtree is counted once, at its vertex closest to the orientation
  // root.
  Integer total = 0;
  for (const auto& fv : f) total += fv[static_cast<std::size_t>(k)];
  return total;
}

namespace {

// Shared driver: run `work(offset, stride)` on `threads` strided anchor
// classes and hand each result to `merge` in offset order, so the combined
// outcome never depends on scheduling.
template <class PerThread, class Work, class Merge>
void run_strided(int threads, Work&& work, Merge&& merge) {
  if (threads <= 1) {
    PerThread result{};
    work(0, 1, result);
    merge(result);
    return;
  }
  std::vector<PerThread> results(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int id = 0; id < threads; ++id) {
    pool.emplace_back([&, id] { work(id, threads, results[static_cast<std::size_t>(id)]); });
  }
  for (auto& th : pool) th.join();
  for (auto& result : results) merge(result);
}

}  // namespace

std::map<CanonicalCode, Integer> subtree_code_census(const Tree& t, int k,
                                                     int threads) {
  std::map<CanonicalCode, Integer> census;
  using Local = std::map<CanonicalCode, Integer>;
  run_strided<Local>(
      threads,
      [&](int offset, int stride, Local& local) {
        detail::for_each_subtree_strided(
            t, k, offset, stride, [&](const std::vector<int>& s) {
              ++local[canonical_code_of_subset(t, s)];
              return true;
            });
      },
      [&](Local& local) {
        for (auto& [code, count] : local) census[code] += count;
      });
  return census;
}

Integer count_embeddings(const Tree& s, const Tree& t) {
  return count_embeddings_and_total(s, t).first;
}

bool contains_copy(const Tree& s, const Tree& t) {
  if (t.n() < s.n()) return false;
  const CanonicalCode target = canonicalize(s);
  bool found = false;
  for_each_subtree(t, s.n(), [&](const std::vector<int>& sub) {
    if (canonical_code_of_subset(t, sub) == target) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

std::pair<Integer, Integer> count_embeddings_and_total(const Tree& s,
                                                       const Tree& t,
                                                       int threads) {
  const CanonicalCode target = canonicalize(s);
  Integer embeddings = 0, total = 0;
  using Local = std::pair<Integer, Integer>;
  run_strided<Local>(
      threads,
      [&](int offset, int stride, Local& local) {
        detail::for_each_subtree_strided(
            t, s.n(), offset, stride, [&](const std::vector<int>& sub) {
              if (canonical_code_of_subset(t, sub) == target) ++local.first;
              ++local.second;
              return true;
            });
      },
      [&](Local& local) {
        embeddings += local.first;
        total += local.second;
      });
  return {embeddings, total};
}

Rational density(const Tree& s, const Tree& t, int threads) {
  auto [embeddings, total] = count_embeddings_and_total(s, t, threads);
  if (total == 0) return Rational(0);
  return make_rational(embeddings, total);
}

Rational ProfileVector::at(const CanonicalCode& code) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), code,
      [](const auto& entry, const CanonicalCode& c) { return entry.first < c; });
  if (it == entries.end() || it->first != code) return Rational(0);
  return it->second;
}

Rational ProfileVector::sum() const {
  Rational acc(0);
  for (const auto& [code, value] : entries) acc += value;
  return acc;
}

ProfileVector profile(const Tree& t, int k, int threads) {
  if (k < 1) throw std::invalid_argument("profile order must be positive");
  ProfileVector p;
  p.k = k;
  if (k > t.n()) return p;
  auto census = subtree_code_census(t, k, threads);
  Integer total = 0;
  for (const auto& [code, count] : census) total += count;
  p.entries.reserve(census.size());
  for (const auto& [code, count] : census) {
    p.entries.emplace_back(code, make_rational(count, total));
  }
  return p;
}

}  // namespace treeprof
