#include "wmlq/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace wmlq {

Instance gen_tight_a(int k) {
  if (k < 1) throw std::invalid_argument("tight-a requires k >= 1");
  // One hub post adjacent to everyone plus k satellite posts, all with
  // quota exactly k. The hub has the smallest id and its k cheapest-id
  // neighbors are one applicant from each satellite, so the deterministic
  // greedy opens the hub, starves every satellite, and ends at k while the
  // optimum assigns all k(k+1) applicants.
  Instance inst;
  inst.num_posts = k + 1;  // post 1 is the hub, post i+1 is satellite i
  inst.num_applicants = k * (k + 1);
  inst.lower.assign(inst.num_posts + 1, k);
  inst.upper.assign(inst.num_posts + 1, k);
  inst.lower[0] = inst.upper[0] = 0;

  // Applicant ids: 1..k are the first applicant of each satellite; the rest
  // of the satellite applicants follow, then the hub-only group.
  std::vector<std::vector<int>> satellite_members(k + 1);
  int next_id = 1;
  for (int i = 1; i <= k; ++i) satellite_members[i].push_back(next_id++);
  for (int i = 1; i <= k; ++i)
    for (int j = 2; j <= k; ++j) satellite_members[i].push_back(next_id++);
  std::vector<int> hub_only;
  for (int j = 1; j <= k; ++j) hub_only.push_back(next_id++);

  for (int i = 1; i <= k; ++i)
    for (int a : satellite_members[i]) {
      inst.edges.push_back({a, 1, 1});
      inst.edges.push_back({a, i + 1, 1});
    }
  for (int a : hub_only) inst.edges.push_back({a, 1, 1});
  require_valid(inst);
  return inst;
}

Instance gen_tight_b(int k, long long scale) {
  if (k < 2) throw std::invalid_argument("tight-b requires k >= 2");
  if (scale < 2 || scale > kMaxWeight)
    throw std::invalid_argument("tight-b scale out of range");
  // Complete bipartite with a heavy diagonal: greedy opens one post and
  // takes everyone (scale + k - 1), while the optimum scores k * scale on
  // the diagonal.
  Instance inst;
  inst.num_applicants = k;
  inst.num_posts = k;
  inst.lower.assign(k + 1, 0);
  inst.upper.assign(k + 1, k);
  inst.upper[0] = 0;
  for (int a = 1; a <= k; ++a)
    for (int p = 1; p <= k; ++p)
      inst.edges.push_back({a, p, a == p ? scale : 1});
  require_valid(inst);
  return inst;
}

Instance gen_mis_cubic(const GeneralGraph& g) {
  require_valid(g);
  std::vector<int> deg(g.num_vertices, 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (deg[v] != 3)
      throw std::invalid_argument("graph is not 3-regular");
  // Post per vertex with quota exactly 3, applicant per edge adjacent to
  // both endpoint posts. Two adjacent posts compete for their shared
  // applicant, so fully open posts form an independent set and the optimum
  // is 3 times the largest one.
  Instance inst;
  inst.num_posts = g.num_vertices;
  inst.num_applicants = static_cast<int>(g.edges.size());
  inst.lower.assign(inst.num_posts + 1, 3);
  inst.upper.assign(inst.num_posts + 1, 3);
  inst.lower[0] = inst.upper[0] = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int a = static_cast<int>(e) + 1;
    inst.edges.push_back({a, g.edges[e].u + 1, 1});
    inst.edges.push_back({a, g.edges[e].v + 1, 1});
  }
  require_valid(inst);
  return inst;
}

Instance gen_inapprox(const GeneralGraph& g) {
  require_valid(g);
  const int n = g.num_vertices;
  std::set<std::pair<int, int>> adjacent;
  for (const auto& e : g.edges)
    adjacent.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  // Post p_i wants n applicants a_{i,1..n}; applicants of graph-adjacent
  // posts are merged pairwise, so two adjacent posts cannot both fill up.
  // Opening a set of posts completely is possible exactly when the set is
  // independent, putting the optimum at n * MIS(g).
  Instance inst;
  inst.num_posts = n;
  inst.lower.assign(n + 1, n);
  inst.upper.assign(n + 1, n);
  inst.lower[0] = inst.upper[0] = 0;
  int next_id = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool merged = adjacent.count({std::min(i, j) - 1,
                                          std::max(i, j) - 1}) > 0;
      if (merged && i > j) continue;  // created when visited as (j, i)
      const int a = ++next_id;
      inst.edges.push_back({a, i, 1});
      if (merged) inst.edges.push_back({a, j, 1});
    }
  inst.num_applicants = next_id;
  require_valid(inst);
  return inst;
}

Instance gen_outdegree(const GeneralGraph& weighted, long long r,
                       const OutdegreeOptions& options) {
  require_valid(weighted);
  if (r < 0) throw std::invalid_argument("outdegree bound must be >= 0");
  long long total_applicants = 0;
  for (const auto& e : weighted.edges) {
    if (e.weight <= 0)
      throw std::invalid_argument("edge weights must be positive");
    total_applicants += 2 * e.weight + 1;
  }
  if (total_applicants > options.max_applicants)
    throw std::invalid_argument(
        "gadget would need " + std::to_string(total_applicants) +
        " applicants, limit is " + std::to_string(options.max_applicants));

  // Orientation gadget: each vertex gets a capacity-r post; each edge gets
  // two quota-(w+1) side posts sharing a single connector applicant, so at
  // most one side can open. The side that stays closed pushes its w load
  // applicants onto their vertex post. All applicants are served exactly
  // when the graph has an orientation with weighted outdegree at most r.
  Instance inst;
  const int n = weighted.num_vertices;
  const int m = static_cast<int>(weighted.edges.size());
  inst.num_posts = n + 2 * m;
  inst.num_applicants = static_cast<int>(total_applicants);
  inst.lower.assign(inst.num_posts + 1, 0);
  inst.upper.assign(inst.num_posts + 1, 0);
  for (int v = 1; v <= n; ++v) {
    inst.lower[v] = 0;
    inst.upper[v] = r;
  }
  int next_applicant = 0;
  for (int e = 0; e < m; ++e) {
    const long long w = weighted.edges[e].weight;
    const int side_u = n + 2 * e + 1;  // post guarding endpoint u of edge e
    const int side_v = n + 2 * e + 2;
    inst.lower[side_u] = inst.upper[side_u] = w + 1;
    inst.lower[side_v] = inst.upper[side_v] = w + 1;
    for (int side = 0; side < 2; ++side) {
      const int vertex_post =
          (side == 0 ? weighted.edges[e].u : weighted.edges[e].v) + 1;
      const int side_post = side == 0 ? side_u : side_v;
      for (long long i = 0; i < w; ++i) {
        const int a = ++next_applicant;
        inst.edges.push_back({a, vertex_post, 1});
        inst.edges.push_back({a, side_post, 1});
      }
    }
    const int connector = ++next_applicant;
    inst.edges.push_back({connector, side_u, 1});
    inst.edges.push_back({connector, side_v, 1});
  }
  require_valid(inst);
  return inst;
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.num_applicants < 0 || spec.num_posts < 0)
    throw std::invalid_argument("negative instance dimensions");
  if (spec.degree_min < 0 || spec.degree_min > spec.degree_max)
    throw std::invalid_argument("inconsistent degree range");
  if (spec.lower_min < 0 || spec.lower_min > spec.lower_max)
    throw std::invalid_argument("inconsistent lower quota range");
  if (spec.upper_min > spec.upper_max || spec.lower_max > spec.upper_max)
    throw std::invalid_argument("inconsistent upper quota range");
  if (spec.weight_min < 0 || spec.weight_min > spec.weight_max ||
      spec.weight_max > kMaxWeight)
    throw std::invalid_argument("inconsistent weight range");

  std::mt19937_64 rng(spec.seed);
  // Engine output is reduced by modulo instead of uniform_int_distribution
  // so that a given seed produces the same instance on every platform.
  auto bounded = [&rng](long long lo, long long hi) {
    return lo + static_cast<long long>(
                    rng() % static_cast<unsigned long long>(hi - lo + 1));
  };

  Instance inst;
  inst.num_applicants = spec.num_applicants;
  inst.num_posts = spec.num_posts;
  inst.lower.assign(inst.num_posts + 1, 0);
  inst.upper.assign(inst.num_posts + 1, 0);

  // Draw order matters for reproducibility across parameter tweaks: all
  // edges first, then quotas, then weights, so changing quota ranges keeps
  // the sampled graph identical.
  std::vector<int> pool(inst.num_posts);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= inst.num_applicants; ++a) {
    const long long cap = inst.num_posts;
    const long long lo = std::min<long long>(spec.degree_min, cap);
    const long long hi = std::min<long long>(spec.degree_max, cap);
    const int d = static_cast<int>(bounded(lo, hi));
    std::iota(pool.begin(), pool.end(), 1);
    for (int t = 0; t < d; ++t) {
      const int pick = t + static_cast<int>(bounded(0, cap - 1 - t));
      std::swap(pool[t], pool[pick]);
    }
    std::sort(pool.begin(), pool.begin() + d);
    for (int t = 0; t < d; ++t) pairs.push_back({a, pool[t]});
  }
  for (int p = 1; p <= inst.num_posts; ++p) {
    inst.lower[p] = bounded(spec.lower_min, spec.lower_max);
    inst.upper[p] =
        bounded(std::max<long long>(inst.lower[p], spec.upper_min),
                spec.upper_max);
  }
  for (const auto& [a, p] : pairs)
    inst.edges.push_back({a, p, bounded(spec.weight_min, spec.weight_max)});
  require_valid(inst);
  return inst;
}

}  // namespace wmlq
