#pragma once

#include <optional>
#include <vector>

#include "wmlq/core.hpp"

// Exhaustive reference solvers. Deliberately built on different machinery
// than the production algorithms (open-set enumeration over small flow
// problems, plus a raw edge-subset sweep) so the two can check each other.

namespace wmlq {

struct OracleLimits {
  // brute_force refuses instances above these sizes.
  int max_posts = 12;
  std::size_t max_edges = 24;
  // The full 2^|E| edge-subset sweep additionally runs (and is cross-checked
  // against the open-set enumeration) when |E| is at most this.
  std::size_t edge_enum_limit = 20;
};

// Exact optimum by enumerating all 2^|P| subsets of open posts and solving
// each restriction as a flow problem with lower bounds. Throws
// std::invalid_argument when the instance exceeds the limits, std::logic_error
// if the two strategies ever disagree.
SolveResult brute_force(const Instance& inst, const OracleLimits& limits = {});

// Optimum over assignments whose set of open posts is exactly `open`
// (1-based post ids, each at least one applicant); nullopt when no such
// assignment exists. Posts outside `open` must stay empty.
std::optional<SolveResult> brute_force_forced_open(const Instance& inst,
                                                   const std::vector<int>& open);

}  // namespace wmlq
