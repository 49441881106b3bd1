#include "wmlq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "wmlq/flow.hpp"

namespace wmlq {

namespace {

// Best assignment with exactly the given posts open, via min-cost flow.
// Open posts must host between max(lower, 1) and upper applicants; closed
// posts host none. Returns nothing if that is impossible.
std::optional<std::pair<long long, Assignment>> solve_forced(
    const Instance& inst, const std::vector<int>& open) {
  const int num_open = static_cast<int>(open.size());
  std::vector<int> open_index(inst.num_posts + 1, -1);
  for (int i = 0; i < num_open; ++i) {
    const int p = open[i];
    const long long lo = std::max<long long>(inst.lower[p], 1);
    if (lo > inst.upper[p]) return std::nullopt;
    open_index[p] = i;
  }

  const int source = inst.num_applicants + num_open;
  const int sink = source + 1;
  MinCostCirculation net(sink + 1);
  for (int a = 1; a <= inst.num_applicants; ++a)
    net.add_arc(source, a - 1, 0, 1, 0);
  std::vector<std::pair<int, std::size_t>> edge_arcs;  // arc id, edge index
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    if (open_index[e.post] < 0) continue;
    const int arc = net.add_arc(e.applicant - 1,
                                inst.num_applicants + open_index[e.post], 0,
                                1, -e.weight);
    edge_arcs.push_back({arc, i});
  }
  for (int i = 0; i < num_open; ++i) {
    const int p = open[i];
    net.add_arc(inst.num_applicants + i, sink,
                std::max<long long>(inst.lower[p], 1), inst.upper[p], 0);
  }
  net.add_arc(sink, source, 0, inst.num_applicants, 0);

  const auto outcome = net.solve();
  if (!outcome.feasible) return std::nullopt;
  Assignment pairs;
  for (const auto& [arc, idx] : edge_arcs)
    if (net.flow(arc) == 1)
      pairs.push_back({inst.edges[idx].applicant, inst.edges[idx].post});
  return std::make_pair(-outcome.cost, std::move(pairs));
}

// Sweeps every edge subset in Gray-code order, keeping feasibility counters
// so each step costs O(1). Returns the best feasible subset weight.
long long sweep_edge_subsets(const Instance& inst) {
  const int m = static_cast<int>(inst.edges.size());
  std::vector<int> cnt_a(inst.num_applicants + 1, 0);
  std::vector<long long> cnt_p(inst.num_posts + 1, 0);
  std::vector<bool> in_set(m, false);
  auto post_bad = [&](int p, long long c) {
    return c > 0 && (c < inst.lower[p] || c > inst.upper[p]);
  };
  int bad_applicants = 0;
  int bad_posts = 0;
  long long weight = 0;
  long long best = 0;  // the empty subset is always feasible
  for (unsigned long long k = 1; k < (1ULL << m); ++k) {
    const int j = std::countr_zero(k);
    const auto& e = inst.edges[j];
    const int delta = in_set[j] ? -1 : 1;
    in_set[j] = !in_set[j];
    weight += delta * e.weight;
    bad_applicants -= cnt_a[e.applicant] >= 2;
    cnt_a[e.applicant] += delta;
    bad_applicants += cnt_a[e.applicant] >= 2;
    bad_posts -= post_bad(e.post, cnt_p[e.post]);
    cnt_p[e.post] += delta;
    bad_posts += post_bad(e.post, cnt_p[e.post]);
    if (bad_applicants == 0 && bad_posts == 0) best = std::max(best, weight);
  }
  return best;
}

}  // namespace

std::optional<SolveResult> brute_force_forced_open(const Instance& inst,
                                                   const std::vector<int>& open) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(inst);
  std::set<int> seen;
  for (int p : open) {
    if (p < 1 || p > inst.num_posts)
      throw std::invalid_argument("open post id out of range");
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate open post id");
  }
  auto solved = solve_forced(inst, open);
  if (!solved) return std::nullopt;
  SolveResult result;
  result.objective = solved->first;
  result.assignment = std::move(solved->second);
  result.algorithm = "oracle-forced-open";
  result.exact = true;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

SolveResult brute_force(const Instance& inst, const OracleLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(inst);
  if (inst.num_posts > limits.max_posts)
    throw std::invalid_argument(
        "instance has " + std::to_string(inst.num_posts) +
        " posts, oracle limit is " + std::to_string(limits.max_posts));
  if (inst.edges.size() > limits.max_edges)
    throw std::invalid_argument(
        "instance has " + std::to_string(inst.edges.size()) +
        " edges, oracle limit is " + std::to_string(limits.max_edges));

  long long best = 0;
  Assignment best_pairs;
  for (unsigned long long mask = 0; mask < (1ULL << inst.num_posts); ++mask) {
    std::vector<int> open;
    for (int p = 1; p <= inst.num_posts; ++p)
      if (mask & (1ULL << (p - 1))) open.push_back(p);
    const auto solved = solve_forced(inst, open);
    if (solved && solved->first > best) {
      best = solved->first;
      best_pairs = solved->second;
    }
  }

  const std::size_t m = inst.edges.size();
  if (m <= limits.edge_enum_limit && m < 64) {
    const long long check = sweep_edge_subsets(inst);
    if (check != best)
      throw std::logic_error(
          "oracle cross-check failed: open-set sweep found " +
          std::to_string(best) + ", edge-subset sweep found " +
          std::to_string(check));
  }

  SolveResult result;
  result.objective = best;
  result.assignment = std::move(best_pairs);
  result.algorithm = "oracle";
  result.exact = true;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace wmlq
