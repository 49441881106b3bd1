#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmlq/core.hpp"

// Tree decomposition machinery and the exact solver that runs dynamic
// programming over a nice decomposition. Tractable whenever width and upper
// quotas are both small: per-bag tables have one coordinate per bag vertex,
// with domain {0..min(u(v), deg(v))}.

namespace wmlq {

// Instance vertices in unified numbering: applicant a is vertex a-1, post p
// is vertex num_applicants + p - 1.
int applicant_vertex(const Instance& inst, int applicant);
int post_vertex(const Instance& inst, int post);

// Plain undirected graph, vertices 0..num_vertices-1, adjacency sorted.
struct AdjacencyGraph {
  int num_vertices = 0;
  std::vector<std::vector<int>> adj;
};

AdjacencyGraph instance_graph(const Instance& inst);
AdjacencyGraph make_graph(int num_vertices,
                          const std::vector<std::pair<int, int>>& edges);

struct TreeDecomposition {
  int num_vertices = 0;                     // of the decomposed graph
  std::vector<std::vector<int>> bags;       // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;  // undirected bag indices
};

// Width = max bag size - 1 (-1 for a bagless decomposition).
int width(const TreeDecomposition& td);

enum class DecomposeStrategy { kMinFill, kMinDegree, kExactSmall };

// Elimination-order based tree decomposition. kMinFill (default) and
// kMinDegree are the usual greedy heuristics with smallest-vertex-id tie
// breaks, so results are deterministic. kExactSmall finds a minimum-width
// order by branch and bound and refuses graphs with more than 20 vertices.
TreeDecomposition decompose(const AdjacencyGraph& g,
                            DecomposeStrategy strategy = DecomposeStrategy::kMinFill);

// All violated tree-decomposition properties (vertex coverage, edge
// coverage, connected occurrence subtrees, tree shape); empty means valid.
std::vector<std::string> check_decomposition(const AdjacencyGraph& g,
                                             const TreeDecomposition& td);

// Nice decompositions: rooted binary trees whose bags are one of
//   leaf       |b| = 1, no children (or the lone empty bag of an empty graph)
//   introduce  one child with bag b minus one vertex
//   forget     one child with bag b plus one vertex
//   join       two children, both with bag equal to b
// The root bag is always empty (a trailing chain of forgets).
enum class BagKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceBag {
  BagKind kind = BagKind::kLeaf;
  std::vector<int> vertices;   // sorted ascending
  int special = -1;            // the introduced / forgotten vertex
  std::vector<int> children;   // bag indices; empty, one, or two entries
};

struct NiceDecomposition {
  int num_vertices = 0;
  std::vector<NiceBag> bags;
  int root = -1;
};

// Converts any tree decomposition into a nice one of the same width with
// O(width * |V|) bags. The empty graph yields the lone empty leaf bag.
NiceDecomposition to_nice(const TreeDecomposition& td);

std::vector<std::string> check_nice(const AdjacencyGraph& g,
                                    const NiceDecomposition& nd);

// PACE-style serialization: header "s td <bags> <width+1> <vertices>",
// bag lines "b <bag-id> <v...>", then one "<i> <j>" line per tree edge.
// Ids are 1-based in the file; comment lines start with 'c'.
std::string render_decomposition(const TreeDecomposition& td);
TreeDecomposition parse_decomposition(const std::string& text);

// Exact number of table cells the DP would allocate:
//   sum over bags of prod over bag vertices of (min(u(v), deg(v)) + 1),
// saturating at 2^64-1 instead of overflowing.
unsigned long long estimate_cost(const NiceDecomposition& nd,
                                 const Instance& inst);

struct DpOptions {
  // dp_solve refuses to run when estimate_cost exceeds this.
  unsigned long long cell_budget = 100'000'000ULL;
};

// Thrown when a solver refuses a run that would blow the resource budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string message, unsigned long long estimate)
      : std::runtime_error(std::move(message)), estimate_(estimate) {}
  unsigned long long estimate() const { return estimate_; }

 private:
  unsigned long long estimate_;
};

// Exact solver. The decomposition must be a valid nice decomposition of
// instance_graph(inst). Throws BudgetError when the table estimate exceeds
// options.cell_budget.
SolveResult dp_solve(const Instance& inst, const NiceDecomposition& nd,
                     const DpOptions& options = {});

// The DP engine behind dp_solve, exposed so tests can audit every table
// entry and partial reconstruction, and so the bench can report cell counts.
//
// For a bag b let V_b be the union of bags in its subtree and
// E_b = E[V_b] \ E[b] the edges already committed below b. The table maps
// each assignment vector alpha over b (alpha(v) = number of chosen edges at
// v) to the best weight of a partial assignment M subseteq E_b realizing it,
// with every forgotten vertex's degree already feasible; kNegInf marks
// unreachable vectors. Additions treat kNegInf as absorbing rather than
// saturating, so genuine sums never overflow.
class DpRun {
 public:
  static constexpr long long kNegInf = std::numeric_limits<long long>::min();

  DpRun(const Instance& inst, const NiceDecomposition& nd,
        const DpOptions& options = {});

  // Fills every table bottom-up. Separate from the constructor so callers
  // can inspect the estimate first.
  void run();

  unsigned long long cells() const { return cells_; }

  // Table entry for a bag; alpha is aligned with the bag's sorted vertex
  // list.
  long long table_value(int bag, const std::vector<long long>& alpha) const;

  // Replays the recorded choices below (bag, alpha): the edge set M (indices
  // into inst.edges) whose per-vertex counts realize alpha. Only valid for
  // entries with finite table value.
  std::vector<std::size_t> reconstruct(int bag,
                                       const std::vector<long long>& alpha) const;

  // Full solve: bottom-up run, the root rule over S subseteq E[root] and
  // alpha (degenerate at the normalized empty root), then reconstruction.
  SolveResult solve();

  // The root rule on its own, usable for non-normalized roots: maximizes
  // w(S) + W_root(alpha) over S subseteq E[root] and compatible alpha, where
  // alpha(v) + deg_S(v) must be 0 or within v's quota interval for every
  // root vertex. Returns the objective and the maximizing choice.
  struct RootChoice {
    long long value = kNegInf;
    std::vector<std::size_t> bag_edges;      // chosen S, instance edge indices
    std::vector<long long> alpha;            // table vector it extends
  };
  RootChoice solve_root() const;

 private:
  void compute_leaf(int bag);
  void compute_introduce(int bag);
  void compute_forget(int bag);
  void compute_join(int bag);

  const Instance& inst_;
  const NiceDecomposition& nd_;
  DpOptions options_;

  AdjacencyGraph graph_;
  std::vector<long long> domain_;            // per vertex: min(u, deg)
  std::vector<long long> quota_lower_, quota_upper_;  // per vertex
  std::vector<std::vector<std::size_t>> incident_;    // vertex -> edge ids

  struct BagTable {
    std::vector<long long> strides;          // mixed radix over bag vertices
    std::vector<long long> value;
    // Reconstruction records, meaning depends on bag kind: forget stores
    // (edge subset mask, final degree i); join stores the left child's cell.
    std::vector<std::uint64_t> choice;
    std::vector<std::size_t> bag_edge_ids;   // forget: candidate edges to v'
  };
  std::vector<BagTable> tables_;
  std::vector<std::vector<std::uint64_t>> below_;  // vertex bitsets, per bag
  unsigned long long cells_ = 0;
  bool ran_ = false;

  std::size_t cell_index(int bag, const std::vector<long long>& alpha) const;
  void reconstruct_into(int bag, std::size_t cell,
                        std::vector<std::size_t>& out) const;
};

}  // namespace wmlq
