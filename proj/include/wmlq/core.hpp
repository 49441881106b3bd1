#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Core model for maximum-weight many-to-one matching with lower and upper
// quotas (WMLQ). An instance is a bipartite graph between applicants and
// posts; an assignment gives each applicant at most one post and each post
// either no applicants at all (closed) or a number of applicants within its
// quota interval (open). The objective is the total weight of the chosen
// edges.

namespace wmlq {

// Hard caps from the model contract: weights fit 32 bits and instances stay
// small enough that any objective fits comfortably in 64-bit arithmetic.
inline constexpr long long kMaxWeight = 1LL << 31;
inline constexpr std::size_t kMaxEdges = std::size_t{1} << 20;

struct Edge {
  int applicant = 0;  // 1..num_applicants
  int post = 0;       // 1..num_posts (disjoint id space from applicants)
  long long weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Applicant ids are 1..num_applicants and post ids 1..num_posts, both dense.
// Quota vectors are indexed by post id; slot 0 is unused. Instances are plain
// values: nothing here mutates after construction, so sharing across threads
// is safe.
struct Instance {
  int num_applicants = 0;
  int num_posts = 0;
  std::vector<Edge> edges;
  std::vector<long long> lower;  // size num_posts + 1
  std::vector<long long> upper;  // size num_posts + 1

  friend bool operator==(const Instance&, const Instance&) = default;
};

// An assignment is a set of (applicant, post) pairs, each referring to an
// instance edge.
using Assignment = std::vector<std::pair<int, int>>;

// Returns all invariant violations of the instance (quota order, weight
// range, duplicate or dangling edges, size caps). Empty means valid.
std::vector<std::string> validate(const Instance& inst);

bool is_valid(const Instance& inst);

// Throws std::invalid_argument carrying the first violation, if any.
void require_valid(const Instance& inst);

// Result of simplify() when the caller needs to translate post ids back:
// deleting posts renumbers the survivors to keep ids dense, and
// original_post_id[p'] is the pre-simplification id of post p'.
struct SimplifyResult {
  Instance instance;
  std::vector<int> original_post_id;  // size num_posts + 1, slot 0 unused
};

// Applies the standard value-preserving reductions:
//   - posts whose lower quota exceeds their degree are deleted,
//   - upper quotas are capped at the degree,
//   - posts left with upper quota 0 are deleted,
//   - remaining lower quotas are raised to at least 1 (an open post has at
//     least one applicant anyway).
// The result satisfies 1 <= lower <= upper <= degree for every post and has
// the same optimum as the input. Idempotent. Applicants are never removed,
// isolated ones included.
SimplifyResult simplify_mapped(const Instance& inst);
Instance simplify(const Instance& inst);

struct EvaluateResult {
  bool feasible = false;
  long long weight = 0;     // meaningful only when feasible
  std::string violation;    // first violated constraint otherwise
};

// Checks an assignment against the instance and computes its weight.
// Pairs that do not correspond to instance edges are reported as violations.
EvaluateResult evaluate(const Instance& inst, const Assignment& assignment);

// Outcome shared by every solver entry point. `algorithm` names the branch
// that actually ran; `guarantee_factor` is set when the result is only
// approximate (objective * factor >= optimum).
struct SolveResult {
  Assignment assignment;
  long long objective = 0;
  std::string algorithm;
  bool exact = true;
  std::optional<long long> guarantee_factor;
  std::optional<unsigned long long> dp_cells;  // table cells, tree DP only
  double elapsed_ms = 0.0;
};

// Degree helpers, indexed by id (slot 0 unused).
std::vector<int> post_degrees(const Instance& inst);
std::vector<int> applicant_degrees(const Instance& inst);

// Largest upper quota, 0 for instances without posts.
long long max_upper_quota(const Instance& inst);

}  // namespace wmlq
