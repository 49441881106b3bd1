#pragma once

#include <optional>
#include <string>
#include <vector>

// Maximum-weight matching machinery on general (not necessarily bipartite)
// graphs, plus the degree-constrained-subgraph reduction on top of it. This
// is the engine behind the polynomial special cases of the quota solver.

namespace wmlq {

// Simple undirected graph with integer edge weights. Vertices are
// 0..num_vertices-1. No loops, no parallel edges; weights may be zero or
// negative (zero-weight edges are first-class citizens here, the reductions
// rely on them).
struct GeneralGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    long long weight = 0;
  };
  int num_vertices = 0;
  std::vector<Edge> edges;
};

std::vector<std::string> validate(const GeneralGraph& g);
void require_valid(const GeneralGraph& g);

// Maximum-weight matching, returned as indices into g.edges. Not necessarily
// perfect and never forced to use an edge: with nonnegative weights the
// result simply maximizes total weight. Implemented as the O(n^3) blossom
// algorithm with dual variables; optimality is asserted after every run via
// complementary slackness.
std::vector<int> max_weight_matching(const GeneralGraph& g);

// Maximum-weight matching among the perfect ones; nullopt when the graph has
// no perfect matching.
std::optional<std::vector<int>> max_weight_perfect_matching(
    const GeneralGraph& g);

// Degree-constrained subgraph problem: pick an edge set F maximizing total
// weight subject to deg_F(v) == target(v) for every vertex. target(v) must
// not exceed deg(v); that is checked at construction (necessary but of
// course not sufficient for feasibility).
class FFactorInstance {
 public:
  FFactorInstance(GeneralGraph graph, std::vector<int> target);

  const GeneralGraph& graph() const { return graph_; }
  const std::vector<int>& target() const { return target_; }

 private:
  GeneralGraph graph_;
  std::vector<int> target_;
};

// Solves the degree-constrained subgraph problem by the classical vertex
// expansion: vertex v becomes deg(v) external copies (one per incident edge)
// plus deg(v) - target(v) internal vertices joined to all of v's externals by
// zero-weight edges; original edges run between external copies. Perfect
// matchings of that gadget are exactly the f-factors. Returns edge indices
// into the original graph, or nullopt when no f-factor exists.
std::optional<std::vector<int>> max_weight_f_factor(const FFactorInstance& ff);

}  // namespace wmlq
