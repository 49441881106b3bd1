#include "wmlq/flow.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace wmlq {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max();
}

MinCostCirculation::MinCostCirculation(int num_nodes)
    : num_nodes_(num_nodes),
      out_(num_nodes + 2),  // two extra slots: super source and super sink
      excess_(num_nodes + 2, 0) {
  if (num_nodes < 0) throw std::invalid_argument("negative node count");
}

void MinCostCirculation::add_residual(int from, int to, long long capacity,
                                      long long cost) {
  const int fwd = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, cost, fwd + 1});
  arcs_.push_back({from, 0, -cost, fwd});
  out_[from].push_back(fwd);
  out_[to].push_back(fwd + 1);
}

int MinCostCirculation::add_arc(int from, int to, long long lower,
                                long long upper, long long cost) {
  if (solved_) throw std::logic_error("add_arc after solve");
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_)
    throw std::invalid_argument("arc endpoint out of range");
  if (lower < 0 || lower > upper)
    throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= upper");

  // Pre-route flow so the remaining problem has nonnegative costs and no
  // lower bounds: mandatory lower-bound flow always, and the full capacity
  // of profitable (negative cost) arcs, which leaves only the option of
  // sending some of it back at positive cost.
  UserArc ua{};
  const long long preflow = cost < 0 ? upper : lower;
  base_cost_ += cost * preflow;
  excess_[from] -= preflow;
  excess_[to] += preflow;
  ua.preflow = preflow;
  ua.reversed = cost < 0;
  ua.residual = -1;
  if (upper - lower > 0) {
    ua.residual = static_cast<int>(arcs_.size());
    if (cost < 0)
      add_residual(to, from, upper - lower, -cost);
    else
      add_residual(from, to, upper - lower, cost);
  }
  user_arcs_.push_back(ua);
  return static_cast<int>(user_arcs_.size()) - 1;
}

MinCostCirculation::Outcome MinCostCirculation::solve() {
  if (solved_) throw std::logic_error("solve called twice");
  solved_ = true;

  const int source = num_nodes_;
  const int sink = num_nodes_ + 1;
  long long need = 0;
  for (int v = 0; v < num_nodes_; ++v) {
    if (excess_[v] > 0) {
      add_residual(source, v, excess_[v], 0);
      need += excess_[v];
    } else if (excess_[v] < 0) {
      add_residual(v, sink, -excess_[v], 0);
    }
  }

  // Successive shortest paths; every residual cost is nonnegative by
  // construction, so plain Dijkstra with potentials works from the start.
  std::vector<long long> potential(num_nodes_ + 2, 0);
  std::vector<long long> dist(num_nodes_ + 2);
  std::vector<int> reached_by(num_nodes_ + 2);
  long long sent = 0;
  long long path_cost_total = 0;

  while (sent < need) {
    dist.assign(num_nodes_ + 2, kInf);
    reached_by.assign(num_nodes_ + 2, -1);
    dist[source] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, source});
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[v]) continue;
      for (int idx : out_[v]) {
        const Arc& arc = arcs_[idx];
        if (arc.capacity <= 0) continue;
        const long long nd = d + arc.cost + potential[v] - potential[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          reached_by[arc.to] = idx;
          heap.push({nd, arc.to});
        }
      }
    }
    if (dist[sink] == kInf) break;  // cannot satisfy the remaining excess

    for (int v = 0; v < num_nodes_ + 2; ++v)
      potential[v] += std::min(dist[v], dist[sink]);

    long long bottleneck = need - sent;
    for (int v = sink; v != source;) {
      const Arc& arc = arcs_[reached_by[v]];
      bottleneck = std::min(bottleneck, arc.capacity);
      v = arcs_[arc.partner].to;
    }
    for (int v = sink; v != source;) {
      Arc& arc = arcs_[reached_by[v]];
      arc.capacity -= bottleneck;
      arcs_[arc.partner].capacity += bottleneck;
      path_cost_total += bottleneck * arc.cost;
      v = arcs_[arc.partner].to;
    }
    sent += bottleneck;
  }

  if (sent < need) return {false, 0};
  return {true, base_cost_ + path_cost_total};
}

long long MinCostCirculation::flow(int arc) const {
  if (!solved_) throw std::logic_error("flow before solve");
  const UserArc& ua = user_arcs_.at(arc);
  if (ua.residual < 0) return ua.preflow;
  // The partner arc accumulated exactly the units pushed through the
  // residual arc.
  const long long pushed = arcs_[arcs_[ua.residual].partner].capacity;
  return ua.reversed ? ua.preflow - pushed : ua.preflow + pushed;
}

}  // namespace wmlq
