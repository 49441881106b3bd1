#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "wmlq/core.hpp"
#include "wmlq/matching.hpp"

// Exhaustive reference implementations and small fixtures shared by the test
// binaries. Everything here is deliberately brute force and independent of
// the production code paths it is used to check.

namespace wmlq::testutil {

// lower/upper are given per post (no slot 0); the helper prepends it.
inline Instance make_instance(
    int num_applicants, int num_posts,
    const std::vector<std::tuple<int, int, long long>>& edges,
    const std::vector<long long>& lower, const std::vector<long long>& upper) {
  Instance inst;
  inst.num_applicants = num_applicants;
  inst.num_posts = num_posts;
  for (const auto& [a, p, w] : edges) inst.edges.push_back({a, p, w});
  inst.lower.push_back(0);
  inst.lower.insert(inst.lower.end(), lower.begin(), lower.end());
  inst.upper.push_back(0);
  inst.upper.insert(inst.upper.end(), upper.begin(), upper.end());
  return inst;
}

// Optimum of the quota model by trying all 2^|E| edge subsets.
inline long long exhaustive_wmlq_value(const Instance& inst) {
  const std::size_t m = inst.edges.size();
  long long best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> applicant_load(inst.num_applicants + 1, 0);
    std::vector<long long> post_load(inst.num_posts + 1, 0);
    long long weight = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = inst.edges[i];
      if (++applicant_load[e.applicant] > 1) ok = false;
      ++post_load[e.post];
      weight += e.weight;
    }
    for (int p = 1; p <= inst.num_posts && ok; ++p)
      if (post_load[p] != 0 &&
          (post_load[p] < inst.lower[p] || post_load[p] > inst.upper[p]))
        ok = false;
    if (ok) best = std::max(best, weight);
  }
  return best;
}

inline bool subset_is_matching(const GeneralGraph& g, std::uint64_t mask) {
  std::vector<int> deg(g.num_vertices, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (mask >> i & 1)
      if (++deg[g.edges[i].u] > 1 || ++deg[g.edges[i].v] > 1) return false;
  return true;
}

inline long long subset_weight(const GeneralGraph& g, std::uint64_t mask) {
  long long w = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (mask >> i & 1) w += g.edges[i].weight;
  return w;
}

inline long long exhaustive_matching_value(const GeneralGraph& g) {
  long long best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges.size());
       ++mask)
    if (subset_is_matching(g, mask))
      best = std::max(best, subset_weight(g, mask));
  return best;
}

inline std::optional<long long> exhaustive_perfect_value(
    const GeneralGraph& g) {
  std::optional<long long> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges.size());
       ++mask) {
    if (!subset_is_matching(g, mask)) continue;
    if (2 * std::popcount(mask) != static_cast<unsigned>(g.num_vertices))
      continue;
    const long long w = subset_weight(g, mask);
    if (!best || w > *best) best = w;
  }
  return best;
}

inline std::optional<long long> exhaustive_f_factor_value(
    const GeneralGraph& g, const std::vector<int>& target) {
  std::optional<long long> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges.size());
       ++mask) {
    std::vector<int> deg(g.num_vertices, 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (mask >> i & 1) {
        ++deg[g.edges[i].u];
        ++deg[g.edges[i].v];
      }
    if (deg != target) continue;
    const long long w = subset_weight(g, mask);
    if (!best || w > *best) best = w;
  }
  return best;
}

// Simple random graph with exactly min(m, n(n-1)/2) edges.
inline GeneralGraph random_graph(std::uint64_t seed, int n, int m,
                                 long long weight_min, long long weight_max) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  GeneralGraph g;
  g.num_vertices = n;
  const int count = std::min<int>(m, static_cast<int>(pairs.size()));
  for (int i = 0; i < count; ++i) {
    const auto span =
        static_cast<std::uint64_t>(weight_max - weight_min + 1);
    const long long w = weight_min + static_cast<long long>(rng() % span);
    g.edges.push_back({pairs[i].first, pairs[i].second, w});
  }
  return g;
}

inline GeneralGraph path_graph(int n) {
  GeneralGraph g;
  g.num_vertices = n;
  for (int v = 0; v + 1 < n; ++v) g.edges.push_back({v, v + 1, 1});
  return g;
}

inline GeneralGraph cycle_graph(int n) {
  GeneralGraph g = path_graph(n);
  if (n >= 3) g.edges.push_back({n - 1, 0, 1});
  return g;
}

inline GeneralGraph complete_graph(int n) {
  GeneralGraph g;
  g.num_vertices = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, 1});
  return g;
}

inline GeneralGraph complete_bipartite_graph(int a, int b) {
  GeneralGraph g;
  g.num_vertices = a + b;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.edges.push_back({u, a + v, 1});
  return g;
}

inline GeneralGraph petersen_graph() {
  GeneralGraph g;
  g.num_vertices = 10;
  for (int v = 0; v < 5; ++v) {
    g.edges.push_back({v, (v + 1) % 5, 1});        // outer cycle
    g.edges.push_back({v, v + 5, 1});              // spokes
    g.edges.push_back({v + 5, (v + 2) % 5 + 5, 1});  // inner pentagram
  }
  return g;
}

}  // namespace wmlq::testutil
