#pragma once

#include <cstdint>

#include "wmlq/core.hpp"
#include "wmlq/matching.hpp"

// Instance families: reductions with known optima for correctness tests and
// adversarial inputs that realize the greedy bounds. All deterministic; the
// random family is reproducible bit-for-bit from its seed.

namespace wmlq {

// k+1 posts with lower = upper = k over k(k+1) unit-weight applicants.
// Post 1 sees every applicant; posts 2..k+1 see k private ones each, and one
// of those private applicants doubles as a neighbour of post 1. Applicant
// ids are laid out so the deterministic greedy opens post 1 first and ends
// at k while the optimum is k*k+k: the approximation ratio is exactly
// 1/(k+1).
Instance gen_tight_a(int k);

// k posts with lower 0 and upper k on a complete bipartite graph with k
// applicants; edge (a_i, p_i) weighs `scale`, everything else 1. Greedy
// collects scale + k - 1, the optimum is k*scale.
Instance gen_tight_b(int k, long long scale);

// From a cubic graph: one post per vertex (lower = upper = 3), one
// unit-weight applicant per edge applying to both endpoint posts. The
// optimum is 3 times the size of a maximum independent set. Rejects
// non-cubic input.
Instance gen_mis_cubic(const GeneralGraph& cubic);

// From any simple graph on n vertices: n posts with lower = upper = n and n
// per-post applicant slots, where the slots of adjacent vertices are merged
// pairwise, giving n^2 - m unit-weight applicants. The optimum is n times
// the size of a maximum independent set, which makes the family
// inapproximable within a reasonable factor unless that problem is easy.
Instance gen_inapprox(const GeneralGraph& g);

struct OutdegreeOptions {
  // Rejects constructions that would exceed this many applicants; the
  // reduction is unary in the edge weights, so large weights blow up.
  long long max_applicants = 1'000'000;
};

// From an edge-weighted graph and a bound r: decides "orient all edges with
// weighted outdegree at most r everywhere" through service levels. Vertex v
// becomes a post with lower 0 and upper r; edge e = {v, v'} of weight w
// becomes two posts with lower = upper = w+1, w applicant slots per side,
// and a shared applicant z_e wedged between them. Unit weights; every
// applicant is servable iff the orientation exists. Edge weights must be
// positive.
Instance gen_outdegree(const GeneralGraph& weighted, long long r,
                       const OutdegreeOptions& options = {});

struct RandomSpec {
  std::uint64_t seed = 1;
  int num_applicants = 0;
  int num_posts = 0;
  // Per-applicant degree range; draws are capped at num_posts and neighbour
  // sets are sampled without replacement, so there are no duplicate edges.
  int degree_min = 0;
  int degree_max = 0;
  // Lower quotas are drawn from [lower_min, lower_max], upper quotas from
  // [max(lower, upper_min), upper_max]; the spec is rejected when upper_max
  // cannot accommodate lower_max.
  long long lower_min = 0;
  long long lower_max = 0;
  long long upper_min = 1;
  long long upper_max = 1;
  long long weight_min = 1;
  long long weight_max = 1;
};

// Seeded random instance; identical spec, identical instance, always.
Instance gen_random(const RandomSpec& spec);

}  // namespace wmlq
