// treeprof: exact subtree counts, densities and k-profiles of trees.
//
// Verbs: gen, count, density, profile, search, verify, neighborhood.
// Exit codes: 0 success, 1 usage or input error, 2 a verified claim failed.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "treeprof/bounds.hpp"
#include "treeprof/canonical.hpp"
#include "treeprof/constructions.hpp"
#include "treeprof/edgelist_io.hpp"
#include "treeprof/free_trees.hpp"
#include "treeprof/rational.hpp"
#include "treeprof/search.hpp"
#include "treeprof/serialize.hpp"
#include "treeprof/structure.hpp"
#include "treeprof/subtrees.hpp"
#include "treeprof/tree.hpp"

namespace {

using namespace treeprof;

std::string rat_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + out_path);
}

// Size caps guard against accidentally huge inputs; raising one is allowed
// only with an explicit acknowledgment.
void check_cap_override(bool cap_given, bool force) {
  if (cap_given && !force) {
    throw std::runtime_error(
        "--cap overrides a safety limit; pass --force to confirm");
  }
}

struct ReportSink {
  bool any_failed = false;

  void operator()(const BoundReport& report) {
    std::cout << bound_report_to_json(report) << "\n";
    if (!report.holds) any_failed = true;
  }
};

BoundReport comparison_report(
    std::string name, std::vector<std::pair<std::string, std::string>> context,
    Rational claimed, Rational observed, bool holds) {
  BoundReport r;
  r.name = std::move(name);
  r.context = std::move(context);
  r.claimed = std::move(claimed);
  r.observed = std::move(observed);
  r.holds = holds;
  return r;
}

// Host used by the sparkler suites; leaves = 0 degenerates to the bare
// spine, which the dedicated builder refuses.
Tree sparkler_suite_host(int k, int n, long long leaves) {
  if (leaves == 0) return path(n * (k + 1) + k);
  return sparkler_host({k, n, leaves});
}

void run_sparkler_bound(int k, int n, long long leaves, int threads,
                        ReportSink& sink) {
  const Tree host = sparkler_suite_host(k, n, leaves);
  const Rational observed = density(sparkler(k), host, threads);
  const Rational claimed = sparkler_density_bound(k);
  sink(comparison_report("sparkler-density-floor",
                         {{"k", std::to_string(k)},
                          {"n", std::to_string(n)},
                          {"leaves", std::to_string(leaves)},
                          {"host_vertices", std::to_string(host.n())}},
                         claimed, observed, observed >= claimed));
}

void run_sparkler_counts(int k, int n, long long leaves, int threads,
                         ReportSink& sink) {
  const Tree host = sparkler_suite_host(k, n, leaves);
  const auto [embeddings, total] =
      count_embeddings_and_total(sparkler(k), host, threads);
  const std::vector<std::pair<std::string, std::string>> context{
      {"k", std::to_string(k)},
      {"n", std::to_string(n)},
      {"leaves", std::to_string(leaves)}};
  const Rational copy_formula(sparkler_copy_count(k, n, leaves));
  const Rational total_formula(sparkler_total_count(k, n, leaves));
  sink(comparison_report("sparkler-copy-count", context, copy_formula,
                         Rational(embeddings), embeddings == copy_formula));
  sink(comparison_report("sparkler-total-count", context, total_formula,
                         Rational(total), total == total_formula));
}

void run_sparkler_opt(int k, long long lo, long long hi, ReportSink& sink) {
  const long long best = best_leaf_count(k, lo, hi);
  const Rational observed = sparkler_host_density(k, best);
  const Rational claimed = sparkler_density_bound(k);
  sink(comparison_report("sparkler-best-leaves",
                         {{"k", std::to_string(k)},
                          {"lo", std::to_string(lo)},
                          {"hi", std::to_string(hi)},
                          {"best_leaves", std::to_string(best)}},
                         claimed, observed, observed >= claimed));
}

void run_universal(int n, ReportSink& sink) {
  const UniversalBuild build = universal_tree_build(n);
  const std::vector<std::pair<std::string, std::string>> context{
      {"stage", std::to_string(n)},
      {"vertices", std::to_string(build.tree.n())}};

  sink(comparison_report("universal-max-degree", context, Rational(n + 1),
                         Rational(max_degree(build.tree)),
                         max_degree(build.tree) <= n + 1));

  // Removing the recorded gluing edges must leave exactly (n!/d!)^2 copies
  // of the d-ary building block for each d.
  std::set<std::pair<int, int>> cut;
  for (auto [u, v] : build.glue_edges) {
    cut.insert({std::min(u, v), std::max(u, v)});
  }
  std::map<CanonicalCode, Integer> block_counts;
  std::vector<char> seen(static_cast<std::size_t>(build.tree.n()), 0);
  for (int v0 = 0; v0 < build.tree.n(); ++v0) {
    if (seen[static_cast<std::size_t>(v0)]) continue;
    std::vector<int> comp{v0};
    seen[static_cast<std::size_t>(v0)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const int v = comp[i];
      for (int u : build.tree.adj[v]) {
        if (seen[static_cast<std::size_t>(u)]) continue;
        if (cut.count({std::min(u, v), std::max(u, v)})) continue;
        seen[static_cast<std::size_t>(u)] = 1;
        comp.push_back(u);
      }
    }
    std::sort(comp.begin(), comp.end());
    ++block_counts[canonical_code_of_subset(build.tree, comp)];
  }
  bool decomposition_ok = true;
  Integer total_blocks = 0, expected_blocks = 0;
  auto context_with_counts = context;
  for (int d = 1; d <= n; ++d) {
    Integer expected = factorial(static_cast<unsigned long>(n)) /
                       factorial(static_cast<unsigned long>(d));
    expected *= expected;
    expected_blocks += expected;
    const CanonicalCode code = canonicalize(complete_dary(d));
    const auto it = block_counts.find(code);
    const Integer got = it == block_counts.end() ? Integer(0) : it->second;
    total_blocks += got;
    if (got != expected) decomposition_ok = false;
    context_with_counts.emplace_back("blocks_d" + std::to_string(d),
                                     got.get_str());
  }
  Integer seen_blocks = 0;
  for (const auto& [code, count] : block_counts) seen_blocks += count;
  if (seen_blocks != total_blocks) decomposition_ok = false;  // foreign blocks
  sink(comparison_report("universal-decomposition", context_with_counts,
                         Rational(expected_blocks), Rational(seen_blocks),
                         decomposition_ok));

  const std::vector<Tree> patterns = all_free_trees(n);
  int contained = 0;
  for (const Tree& s : patterns) {
    if (contains_copy(s, build.tree)) ++contained;
  }
  sink(comparison_report(
      "universal-contains-all", context,
      Rational(static_cast<long>(patterns.size())), Rational(contained),
      contained == static_cast<int>(patterns.size())));
}

void run_glue(int k, std::uint64_t seed, int samples, ReportSink& sink) {
  std::vector<std::pair<Tree, Tree>> pairs;
  std::vector<Tree> small;
  for (int n = 2; n <= 5; ++n) {
    for (const Tree& t : all_free_trees(n)) small.push_back(t);
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      pairs.emplace_back(small[i], small[j]);
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int na = 8 + static_cast<int>(rng() % 5);
    const int nb = 8 + static_cast<int>(rng() % 5);
    pairs.emplace_back(random_tree(rng, na), random_tree(rng, nb));
  }

  bool lower_ok = true, upper_ok = true;
  Rational worst_lower, worst_upper;
  bool first = true;
  for (const auto& [a, b] : pairs) {
    const Tree glued = glue(a, b);
    const Integer za = count_subtrees(a, k);
    const Integer zb = count_subtrees(b, k);
    const Integer zg = count_subtrees(glued, k);
    const Integer slack = glue_upper_slack(k, max_degree(glued));
    const Rational lower_margin(zg - za - zb);
    const Rational upper_margin(za + zb + slack - zg);
    if (first || lower_margin < worst_lower) worst_lower = lower_margin;
    if (first || upper_margin < worst_upper) worst_upper = upper_margin;
    first = false;
    if (lower_margin < 0) lower_ok = false;
    if (upper_margin < 0) upper_ok = false;
  }
  const std::vector<std::pair<std::string, std::string>> context{
      {"k", std::to_string(k)},
      {"pairs", std::to_string(pairs.size())},
      {"seed", std::to_string(seed)}};
  sink(comparison_report("glue-subtree-superadditivity", context, Rational(0),
                         worst_lower, lower_ok));
  sink(comparison_report("glue-subtree-upper-slack", context, Rational(0),
                         worst_upper, upper_ok));
}

void run_hubs(int n_max, ReportSink& sink) {
  long checked = 0, violations = 0;
  int max_hubs = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      ++checked;
      const auto h = hubs(t);
      const bool cat = classify(t).is_caterpillar;
      if (cat != h.empty()) ++violations;
      max_hubs = std::max(max_hubs, static_cast<int>(h.size()));

      // Caterpillar iff the non-leaf vertices induce a (possibly empty)
      // path.
      std::vector<int> internal;
      for (int v = 0; v < t.n(); ++v) {
        if (!is_leaf(t, v)) internal.push_back(v);
      }
      bool internal_path = true;
      if (!internal.empty()) {
        int ends = 0;
        for (int v : internal) {
          int internal_deg = 0;
          for (int u : t.adj[v]) {
            if (!is_leaf(t, u)) ++internal_deg;
          }
          if (internal_deg > 2) internal_path = false;
          if (internal_deg <= 1) ++ends;
        }
        // A path's induced degree sequence has no vertex above 2 and, since
        // the induced graph is connected here, the right number of ends.
        if (internal_path && internal.size() > 1 && ends != 2) {
          internal_path = false;
        }
      }
      if (cat != internal_path) ++violations;
    }
  }
  const std::vector<std::pair<std::string, std::string>> context{
      {"n_max", std::to_string(n_max)}, {"trees", std::to_string(checked)}};
  sink(comparison_report("hub-caterpillar-dichotomy", context, Rational(0),
                         Rational(violations), violations == 0));
  sink(comparison_report("hub-count-at-most-two", context, Rational(2),
                         Rational(max_hubs), max_hubs <= 2));
}

void run_center_drift(std::uint64_t seed, int trials, ReportSink& sink) {
  std::mt19937_64 rng(seed);
  int worst = 0;
  for (int i = 0; i < trials; ++i) {
    const DriftInstance inst =
        random_drift_instance(rng, 20, 24, 17, 19, false);
    const auto drift = center_drift_set(inst.host, inst.base);
    worst = std::max(worst, static_cast<int>(drift.size()));
  }
  sink(comparison_report("center-drift-within-eight",
                         {{"trials", std::to_string(trials)},
                          {"seed", std::to_string(seed)}},
                         Rational(8), Rational(worst), worst <= 8));
}

void run_hub_drift(std::uint64_t seed, int trials, ReportSink& sink) {
  std::mt19937_64 rng(seed);
  int worst = 0;
  for (int i = 0; i < trials; ++i) {
    const DriftInstance inst = random_drift_instance(rng, 20, 24, 17, 19, true);
    const Tree pattern = induced_subtree(inst.host, inst.base);
    const auto drift = hub_drift_set(pattern, inst.host, inst.base);
    worst = std::max(worst, static_cast<int>(drift.size()));
  }
  sink(comparison_report("hub-drift-within-bound",
                         {{"trials", std::to_string(trials)},
                          {"seed", std::to_string(seed)}},
                         Rational(144), Rational(worst), worst <= 144));
}

void run_inducibility(int k, ReportSink& sink) {
  const std::vector<std::pair<std::string, std::string>> context{
      {"k", std::to_string(k)}};
  const Rational uniform = uniform_inducibility_bound();
  const Rational at_k = inducibility_upper_bound(k);
  sink(comparison_report("upper-bound-at-k-vs-uniform", context, uniform,
                         at_k, at_k <= uniform));
  sink(comparison_report("sparkler-bound-floor", context,
                         make_rational(13, 165), sparkler_density_bound(k),
                         sparkler_density_bound(k) >= make_rational(13, 165)));
  sink(comparison_report("sparkler-bound-ceiling", context,
                         make_rational(3, 16), sparkler_density_bound(k),
                         sparkler_density_bound(k) < make_rational(3, 16)));
}

void run_profile_sum(const std::string& input, int k, int threads,
                     ReportSink& sink) {
  const Tree t = load_tree_file(input);
  const ProfileVector p = profile(t, k, threads);
  const bool applicable = k <= t.n();
  const Rational claimed = applicable ? Rational(1) : Rational(0);
  sink(comparison_report("profile-sums-to-one",
                         {{"input", input},
                          {"k", std::to_string(k)},
                          {"vertices", std::to_string(t.n())}},
                         claimed, p.sum(), p.sum() == claimed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subtree counts, densities and k-profiles of trees"};
  app.set_version_flag("--version", "treeprof 1.0.0");
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a tree and write it out");
  gen->require_subcommand(1);
  struct GenState {
    std::string out;
    int n = 1, k = 4, legs = 3, leg_length = 2, d = 2;
    long long leaves = -1, power = 1;
    std::vector<int> leaf_counts;
    std::string a_path, b_path;
    int attach_a = -1, attach_b = -1;
    std::int64_t cap = kUniversalSizeCap;
    bool force = false;
  };
  auto gen_state = std::make_shared<GenState>();
  auto emit_tree = [gen_state](const Tree& t) {
    emit_text(format_edge_list(t), gen_state->out);
  };
  gen->add_option("-o,--output", gen_state->out,
                  "Output file (stdout if omitted)");

  auto* gen_path = gen->add_subcommand("path", "Path on n vertices");
  gen_path->add_option("--n", gen_state->n, "Vertex count")->required();
  gen_path->callback([=] { emit_tree(path(gen_state->n)); });

  auto* gen_star = gen->add_subcommand("star", "Star on n vertices");
  gen_star->add_option("--n", gen_state->n, "Vertex count")->required();
  gen_star->callback([=] { emit_tree(star(gen_state->n)); });

  auto* gen_spider = gen->add_subcommand("spider", "Equal-leg spider");
  gen_spider->add_option("--legs", gen_state->legs, "Number of legs")
      ->required();
  gen_spider->add_option("--leg-length", gen_state->leg_length,
                         "Edges per leg")
      ->required();
  gen_spider->callback(
      [=] { emit_tree(spider(gen_state->legs, gen_state->leg_length)); });

  auto* gen_cat = gen->add_subcommand("caterpillar", "Spine with hanging leaves");
  gen_cat
      ->add_option("--spine-leaves", gen_state->leaf_counts,
                   "Comma-separated leaves per spine vertex")
      ->required()
      ->delimiter(',');
  gen_cat->callback([=] { emit_tree(caterpillar(gen_state->leaf_counts)); });

  auto* gen_spark = gen->add_subcommand(
      "sparkler", "Star with one subdivided edge (k edges, k+1 vertices)");
  gen_spark->add_option("--k", gen_state->k, "Edge count")->required();
  gen_spark->callback([=] { emit_tree(sparkler(gen_state->k)); });

  auto* gen_host = gen->add_subcommand(
      "sparkler-host", "Spine with leaf-decorated vertebrae");
  gen_host->add_option("--k", gen_state->k, "Sparkler edge count")->required();
  gen_host->add_option("--n", gen_state->n, "Number of vertebrae")->required();
  gen_host->add_option("--leaves", gen_state->leaves,
                       "Leaves per vertebra (default 3k)");
  gen_host->callback([=] {
    const long long leaves =
        gen_state->leaves < 0 ? 3LL * gen_state->k : gen_state->leaves;
    emit_tree(sparkler_host({gen_state->k, gen_state->n, leaves}));
  });

  auto* gen_dary =
      gen->add_subcommand("dary", "Complete d-ary tree of depth d");
  gen_dary->add_option("--d", gen_state->d, "Arity and depth")->required();
  gen_dary->callback([=] { emit_tree(complete_dary(gen_state->d)); });

  auto* gen_universal =
      gen->add_subcommand("universal", "Stage-n universal host");
  gen_universal->add_option("--n", gen_state->n, "Stage")->required();
  auto* gen_cap_opt = gen_universal->add_option(
      "--cap", gen_state->cap, "Vertex cap override (needs --force)");
  gen_universal->add_flag("--force", gen_state->force,
                          "Acknowledge raising the cap");
  gen_universal->callback([=] {
    check_cap_override(gen_cap_opt->count() > 0, gen_state->force);
    emit_tree(universal_tree(gen_state->n, gen_state->cap));
  });

  auto* gen_glue = gen->add_subcommand("glue", "Join two trees by one edge");
  gen_glue->add_option("-a", gen_state->a_path, "First tree file")->required();
  gen_glue->add_option("-b", gen_state->b_path, "Second tree file")->required();
  gen_glue->add_option("--attach-a", gen_state->attach_a,
                       "Attachment vertex in a (default: lowest leaf)");
  gen_glue->add_option("--attach-b", gen_state->attach_b,
                       "Attachment vertex in b (default: lowest leaf)");
  gen_glue->callback([=] {
    GlueSpec spec;
    if (gen_state->attach_a >= 0) spec.left = AttachRule::at(gen_state->attach_a);
    if (gen_state->attach_b >= 0) spec.right = AttachRule::at(gen_state->attach_b);
    emit_tree(glue(load_tree_file(gen_state->a_path),
                   load_tree_file(gen_state->b_path), spec));
  });

  auto* gen_power =
      gen->add_subcommand("glue-power", "Chain copies of one tree");
  gen_power->add_option("-a", gen_state->a_path, "Tree file")->required();
  gen_power->add_option("--power", gen_state->power, "Number of copies")
      ->required();
  gen_power->callback([=] {
    emit_tree(glue_power(load_tree_file(gen_state->a_path), gen_state->power));
  });

  // Let a trailing -o reach the parent gen command from any family.
  for (CLI::App* family : gen->get_subcommands([](const CLI::App*) {
         return true;
       })) {
    family->fallthrough();
  }

  // ---- count --------------------------------------------------------------
  auto* count = app.add_subcommand("count", "Number of k-vertex subtrees");
  struct CountState {
    std::string input;
    int k = 0, threads = 1;
    std::string method = "dp";
  };
  auto count_state = std::make_shared<CountState>();
  count->add_option("-i,--input", count_state->input, "Host tree file")
      ->required();
  count->add_option("--k", count_state->k, "Subtree vertex count")->required();
  count->add_option("--method", count_state->method,
                    "dp (default) or enumerate")
      ->check(CLI::IsMember({"dp", "enumerate"}));
  count->add_option("--threads", count_state->threads,
                    "Worker threads for enumerate (0 = all cores)");
  count->callback([=] {
    const Tree t = load_tree_file(count_state->input);
    Integer total;
    if (count_state->method == "dp") {
      total = count_subtrees(t, count_state->k);
    } else {
      total = 0;
      for (const auto& [code, c] :
           subtree_code_census(t, count_state->k,
                               resolve_threads(count_state->threads))) {
        total += c;
      }
    }
    std::cout << total.get_str() << "\n";
  });

  // ---- density ------------------------------------------------------------
  auto* dens = app.add_subcommand(
      "density", "Exact density of a pattern among same-size subtrees");
  struct DensityState {
    std::string s_path, t_path;
    int threads = 1;
  };
  auto dens_state = std::make_shared<DensityState>();
  dens->add_option("-s,--pattern", dens_state->s_path, "Pattern tree file")
      ->required();
  dens->add_option("-i,--input", dens_state->t_path, "Host tree file")
      ->required();
  dens->add_option("--threads", dens_state->threads,
                   "Worker threads (0 = all cores)");
  dens->callback([=] {
    const Tree s = load_tree_file(dens_state->s_path);
    const Tree t = load_tree_file(dens_state->t_path);
    std::cout << rat_str(density(s, t, resolve_threads(dens_state->threads)))
              << "\n";
  });

  // ---- profile ------------------------------------------------------------
  auto* prof = app.add_subcommand(
      "profile", "Densities of all k-vertex classes present in the host");
  struct ProfileState {
    std::string input, out;
    int k = 0, threads = 1;
  };
  auto prof_state = std::make_shared<ProfileState>();
  prof->add_option("-i,--input", prof_state->input, "Host tree file")
      ->required();
  prof->add_option("--k", prof_state->k, "Profile order")->required();
  prof->add_option("-o,--output", prof_state->out,
                   "Output file (stdout if omitted)");
  prof->add_option("--threads", prof_state->threads,
                   "Worker threads (0 = all cores)");
  prof->callback([=] {
    const Tree t = load_tree_file(prof_state->input);
    const ProfileVector p =
        profile(t, prof_state->k, resolve_threads(prof_state->threads));
    emit_text(profile_to_json(p) + "\n", prof_state->out);
  });

  // ---- search -------------------------------------------------------------
  auto* search = app.add_subcommand(
      "search", "Maximize a pattern's density over hosts");
  struct SearchState {
    std::string s_path, family, out;
    int n = 0, cap = kSearchCap, from = 1, to = 0;
    int k = 4, leg_length = 2;
    long long leaves = 12;
    bool force = false;
  };
  auto search_state = std::make_shared<SearchState>();
  search->add_option("-s,--pattern", search_state->s_path, "Pattern tree file")
      ->required();
  auto* search_n =
      search->add_option("--n", search_state->n, "Host vertex count");
  auto* search_cap_opt = search->add_option(
      "--cap", search_state->cap, "Host size cap override (needs --force)");
  search->add_flag("--force", search_state->force,
                   "Acknowledge raising the cap");
  auto* search_family = search->add_option(
      "--family", search_state->family,
      "Trajectory mode: density along a host family instead of the maximum");
  search_family->check(
      CLI::IsMember({"sparkler-host", "universal", "spider", "path", "star"}));
  search->add_option("--from", search_state->from, "Trajectory start index");
  search->add_option("--to", search_state->to, "Trajectory end index");
  search->add_option("--k", search_state->k,
                     "sparkler-host trajectories: sparkler edge count");
  search->add_option("--leaves", search_state->leaves,
                     "sparkler-host trajectories: leaves per vertebra");
  search->add_option("--leg-length", search_state->leg_length,
                     "spider trajectories: edges per leg");
  search->add_option("-o,--output", search_state->out,
                     "Output file (stdout if omitted)");
  search->callback([=] {
    const Tree s = load_tree_file(search_state->s_path);
    if (search_family->count() > 0) {
      if (search_state->to < search_state->from) {
        throw std::runtime_error("trajectory mode needs --from <= --to");
      }
      HostFamily family = HostFamily::kPath;
      if (search_state->family == "sparkler-host") {
        family = HostFamily::kSparklerHost;
      } else if (search_state->family == "universal") {
        family = HostFamily::kUniversal;
      } else if (search_state->family == "spider") {
        family = HostFamily::kSpider;
      } else if (search_state->family == "star") {
        family = HostFamily::kStar;
      }
      TrajectoryParams params;
      params.k = search_state->k;
      params.leaves = search_state->leaves;
      params.leg_length = search_state->leg_length;
      std::string out;
      for (const TrajectoryPoint& p : density_trajectory(
               s, family, params, search_state->from, search_state->to)) {
        out += std::to_string(p.n) + " " + rat_str(p.value) + "\n";
      }
      emit_text(out, search_state->out);
      return;
    }
    if (search_n->count() == 0) {
      throw std::runtime_error("maximum mode needs --n");
    }
    check_cap_override(search_cap_opt->count() > 0, search_state->force);
    const SearchResult result =
        exhaustive_max_density(s, search_state->n, search_state->cap);
    emit_text(search_result_to_json(result) + "\n", search_state->out);
  });

  // ---- verify -------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Check counting identities and bounds; exit 2 on failure");
  verify->require_subcommand(1);
  struct VerifyState {
    int k = 4, n = 1, threads = 1, n_max = 10, trials = 5;
    long long leaves = -1, lo = 1, hi = 60;
    std::uint64_t seed = 12345;
    int samples = 20;
    std::string input;
  };
  auto verify_state = std::make_shared<VerifyState>();
  auto sink = std::make_shared<ReportSink>();

  auto* v_bound = verify->add_subcommand(
      "sparkler-bound", "Host density meets the closed-form floor");
  v_bound->add_option("--k", verify_state->k, "Sparkler edge count");
  v_bound->add_option("--n", verify_state->n, "Vertebrae");
  v_bound->add_option("--leaves", verify_state->leaves,
                      "Leaves per vertebra (default 3k)");
  v_bound->add_option("--threads", verify_state->threads,
                      "Worker threads (0 = all cores)");
  v_bound->callback([=] {
    const long long leaves = verify_state->leaves < 0 ? 3LL * verify_state->k
                                                      : verify_state->leaves;
    run_sparkler_bound(verify_state->k, verify_state->n, leaves,
                       resolve_threads(verify_state->threads), *sink);
  });

  auto* v_counts = verify->add_subcommand(
      "sparkler-counts", "Enumeration matches both closed-form counts");
  v_counts->add_option("--k", verify_state->k, "Sparkler edge count");
  v_counts->add_option("--n", verify_state->n, "Vertebrae");
  v_counts->add_option("--leaves", verify_state->leaves,
                       "Leaves per vertebra (default 3k)");
  v_counts->add_option("--threads", verify_state->threads,
                       "Worker threads (0 = all cores)");
  v_counts->callback([=] {
    const long long leaves = verify_state->leaves < 0 ? 3LL * verify_state->k
                                                      : verify_state->leaves;
    run_sparkler_counts(verify_state->k, verify_state->n, leaves,
                        resolve_threads(verify_state->threads), *sink);
  });

  auto* v_opt = verify->add_subcommand(
      "sparkler-opt", "Best leaf count in a range still meets the floor");
  v_opt->add_option("--k", verify_state->k, "Sparkler edge count");
  v_opt->add_option("--lo", verify_state->lo, "Scan start");
  v_opt->add_option("--hi", verify_state->hi, "Scan end");
  v_opt->callback([=] {
    run_sparkler_opt(verify_state->k, verify_state->lo, verify_state->hi,
                     *sink);
  });

  auto* v_universal = verify->add_subcommand(
      "universal", "Degree cap, block decomposition, all patterns present");
  v_universal->add_option("--n", verify_state->n, "Stage")->required();
  v_universal->callback([=] { run_universal(verify_state->n, *sink); });

  auto* v_glue = verify->add_subcommand(
      "glue", "Subtree counts are superadditive under gluing, with slack");
  v_glue->add_option("--k", verify_state->k, "Subtree vertex count");
  v_glue->add_option("--seed", verify_state->seed, "Sample seed");
  v_glue->add_option("--samples", verify_state->samples, "Random pairs");
  v_glue->callback([=] {
    run_glue(verify_state->k, verify_state->seed, verify_state->samples,
             *sink);
  });

  auto* v_hubs = verify->add_subcommand(
      "hubs", "Hub existence characterizes non-caterpillars");
  v_hubs->add_option("--n-max", verify_state->n_max, "Largest size checked");
  v_hubs->callback([=] { run_hubs(verify_state->n_max, *sink); });

  auto* v_center = verify->add_subcommand(
      "center-drift", "Centers of nearby embeddings stay in a small set");
  v_center->add_option("--seed", verify_state->seed, "Instance seed");
  v_center->add_option("--trials", verify_state->trials, "Instances");
  v_center->callback([=] {
    run_center_drift(verify_state->seed, verify_state->trials, *sink);
  });

  auto* v_hub_drift = verify->add_subcommand(
      "hub-drift", "Hubs of nearby same-class embeddings stay bounded");
  v_hub_drift->add_option("--seed", verify_state->seed, "Instance seed");
  v_hub_drift->add_option("--trials", verify_state->trials, "Instances");
  v_hub_drift->callback([=] {
    run_hub_drift(verify_state->seed, verify_state->trials, *sink);
  });

  auto* v_induc = verify->add_subcommand(
      "inducibility", "Cross-checks between the closed-form bounds");
  v_induc->add_option("--k", verify_state->k, "Pattern vertex count (>= 5)");
  v_induc->callback([=] { run_inducibility(verify_state->k, *sink); });

  auto* v_psum = verify->add_subcommand(
      "profile-sum", "A profile sums to one exactly (when applicable)");
  v_psum->add_option("-i,--input", verify_state->input, "Host tree file")
      ->required();
  v_psum->add_option("--k", verify_state->k, "Profile order");
  v_psum->add_option("--threads", verify_state->threads,
                     "Worker threads (0 = all cores)");
  v_psum->callback([=] {
    run_profile_sum(verify_state->input, verify_state->k,
                    resolve_threads(verify_state->threads), *sink);
  });

  // ---- neighborhood -------------------------------------------------------
  auto* nb = app.add_subcommand(
      "neighborhood", "Embeddings reachable by moving at most r vertices");
  struct NbState {
    std::string input, s_path;
    std::vector<int> base;
    int radius = 1;
    bool centers = false, hubs_mode = false;
  };
  auto nb_state = std::make_shared<NbState>();
  nb->add_option("-i,--input", nb_state->input, "Host tree file")->required();
  nb->add_option("--base", nb_state->base, "Comma-separated base vertex ids")
      ->required()
      ->delimiter(',');
  nb->add_option("-r,--radius", nb_state->radius, "Move radius (1..3)");
  nb->add_flag("--centers", nb_state->centers,
               "Print the union of member centers instead of the members");
  nb->add_flag("--hubs", nb_state->hubs_mode,
               "Print the union of hubs over members matching the pattern");
  nb->add_option("-s,--pattern", nb_state->s_path,
                 "Pattern tree file (required with --hubs)");
  nb->callback([=] {
    const Tree host = load_tree_file(nb_state->input);
    if (nb_state->centers && nb_state->hubs_mode) {
      throw std::runtime_error("--centers and --hubs are mutually exclusive");
    }
    if (nb_state->centers) {
      std::string line;
      for (int v : center_drift_set(host, nb_state->base)) {
        line += (line.empty() ? "" : " ") + std::to_string(v);
      }
      std::cout << line << "\n";
      return;
    }
    if (nb_state->hubs_mode) {
      if (nb_state->s_path.empty()) {
        throw std::runtime_error("--hubs needs a pattern file (-s)");
      }
      const Tree s = load_tree_file(nb_state->s_path);
      std::string line;
      for (int v : hub_drift_set(s, host, nb_state->base)) {
        line += (line.empty() ? "" : " ") + std::to_string(v);
      }
      std::cout << line << "\n";
      return;
    }
    const MoveNeighborhood neighborhood =
        move_neighborhood(host, nb_state->base, nb_state->radius);
    for (const auto& member : neighborhood.members) {
      std::string line;
      for (int v : member) line += (line.empty() ? "" : " ") + std::to_string(v);
      std::cout << line << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (sink->any_failed) exit_code = 2;
  return exit_code;
}
