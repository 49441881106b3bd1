#pragma once

#include <optional>
#include <vector>

#include "wmlq/core.hpp"
#include "wmlq/matching.hpp"
#include "wmlq/oracle.hpp"
#include "wmlq/twdp.hpp"

// Polynomial special cases (posts of degree at most two; upper quotas at
// most two; all posts forced open) and the dispatcher that picks the right
// algorithm for an arbitrary instance.

namespace wmlq {

// Exact solver for instances where, after simplification, every post has at
// most two neighbours. Posts collapse into a helper graph: a post with
// lower = upper = 2 contracts its two edges into one applicant-applicant
// edge carrying the summed weight, a post with lower 1 and upper 2 splits
// into two independent single-slot posts, and single-slot posts join as
// matching partners. A maximum-weight matching of the helper graph (general
// matching: the contracted edges break bipartiteness) translates back
// weight-for-weight. Throws std::invalid_argument when some post keeps
// degree 3 or more after simplification.
SolveResult solve_degree2_posts(const Instance& inst);

// Exact solver for instances where, after simplification, every upper quota
// is at most two. Reduces to two degree-constrained subgraph problems: posts
// with lower < upper = 2 get one zero-weight dummy applicant to pin
// lower = upper = 2, a dummy post adjacent to every applicant absorbs the
// unassigned ones, two-slot posts carry a closing triangle, single-slot
// posts a closing path, and zero-weight triangles on the dummy post fix
// parity. The dummy post's degree target takes two candidate values; the
// better feasible one, restricted to original edges, is optimal. Throws
// std::invalid_argument when some post keeps upper quota 3 or more after
// simplification.
SolveResult solve_u2(const Instance& inst);

// Everything solve_u2 builds, exposed for inspection: the gadget graph, the
// degree targets (with the dummy post's slot left at parity_base; the solver
// tries parity_base and parity_base + 1), and the role bookkeeping needed to
// translate a gadget solution back.
struct U2Construction {
  GeneralGraph graph;
  std::vector<int> degree_target;
  int dummy_post = -1;       // vertex id of the dummy post
  int parity_base = 0;       // applicants plus single-slot posts
  int num_applicants = 0;    // original + dummy applicants = vertices 0..n-1
  std::vector<int> post_vertex;             // post id -> gadget vertex
  std::vector<std::size_t> original_edge;   // gadget edge -> instance edge, or npos
};

// Expects a simplified instance with u <= 2 (what solve_u2 feeds it).
U2Construction build_u2_gadget(const Instance& simplified);

// Maximum-weight assignment where every post must be open: each post
// receives between max(lower(p), 1) and upper(p) applicants. Solved as a
// min-cost circulation with lower bounds; integral by construction. Returns
// nullopt when no such assignment exists (e.g. a post with upper quota 0 or
// fewer neighbours than its lower quota).
std::optional<SolveResult> solve_all_open(const Instance& inst);

enum class Algorithm {
  kAuto,
  kGreedy,
  kTreeDp,
  kDegree2,
  kU2,
  kAllOpen,
  kOracle,
};

const char* algorithm_name(Algorithm a);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  // Cell budget for the tree DP (see DpOptions).
  unsigned long long cell_budget = 100'000'000ULL;
  DecomposeStrategy strategy = DecomposeStrategy::kMinFill;
  OracleLimits oracle_limits;
};

// Entry point the CLI uses. kAuto picks, on the simplified instance:
// u_max <= 2 -> solve_u2; max post degree <= 2 -> solve_degree2_posts;
// otherwise decompose, and dp_solve if the cell estimate fits the budget,
// else greedy (flagged approximate with factor min{|P|, |A|, u_max + 1}).
// nullopt means infeasible, which only the all-open mode can report; a
// forced tree DP over budget or an oversized oracle call throws BudgetError.
std::optional<SolveResult> solve(const Instance& inst,
                                 const SolveOptions& options = {});

}  // namespace wmlq
