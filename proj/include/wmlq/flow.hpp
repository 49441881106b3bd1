#pragma once

#include <vector>

// Minimum-cost circulation with per-arc lower bounds and arbitrary-sign
// costs. Plumbing for the all-open solver and the oracle's forced-open
// subproblems; nothing here is specific to the matching model.
//
// The usual two transformations are applied up front: lower bounds are
// pre-routed (shifting node excesses), and negative-cost arcs are saturated
// (leaving a positive-cost reverse arc). What remains is a nonnegative-cost
// min-cost-flow problem from a super source to a super sink, solved by
// successive shortest paths with Dijkstra over reduced costs. Costs and
// capacities are integers, so the optimum is integral.

namespace wmlq {

class MinCostCirculation {
 public:
  explicit MinCostCirculation(int num_nodes);

  // Adds an arc from `from` to `to` with flow bounds [lower, upper] and the
  // given per-unit cost. Returns an arc id for flow(). Requires
  // 0 <= lower <= upper.
  int add_arc(int from, int to, long long lower, long long upper,
              long long cost);

  struct Outcome {
    bool feasible = false;
    long long cost = 0;  // total cost of the circulation when feasible
  };

  // Finds a feasible circulation of minimum total cost. Call once.
  Outcome solve();

  // Flow on an arc after a feasible solve().
  long long flow(int arc) const;

 private:
  struct Arc {
    int to;
    long long capacity;  // residual
    long long cost;
    int partner;  // index of the reverse residual arc
  };

  void add_residual(int from, int to, long long capacity, long long cost);

  int num_nodes_;
  std::vector<std::vector<int>> out_;  // node -> residual arc indices
  std::vector<Arc> arcs_;
  std::vector<long long> excess_;
  long long base_cost_ = 0;

  // Per user arc: pre-routed amount, forward residual arc (or -1), and
  // whether flow() should count backwards from the pre-routed amount.
  struct UserArc {
    long long preflow;
    int residual;
    bool reversed;
  };
  std::vector<UserArc> user_arcs_;
  bool solved_ = false;
};

}  // namespace wmlq
