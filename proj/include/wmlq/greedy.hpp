#pragma once

#include <optional>
#include <vector>

#include "wmlq/core.hpp"

namespace wmlq {

// Opening-based greedy approximation. Repeatedly opens the admissible post
// with the largest assignable weight, assigns it the best applicants it can
// still get, and removes them from the pool. A post is admissible while it is
// not yet open and at least lower(p) of its neighbours are unassigned.
//
// Guarantees: objective * min{|P|, |A|, u_max + 1} >= optimum, and for unit
// weights objective * (ceil(sqrt(|A|)) + 1) >= optimum. Both bounds are
// tight on the adversarial generator families.
//
// Deterministic: ties on assignable weight open the smallest post id, and
// the applicants taken are the top-u(p) prefix of the neighbour list ordered
// by weight descending, then applicant id ascending. Runs in
// O(|E| log |E|) via a lazily revalidated max-heap.
SolveResult solve_greedy(const Instance& inst);

// Assignable weight of one post: the sum of the top-min(u(p), available)
// weights among p's still-unassigned neighbours, or nullopt when p is not
// admissible (fewer than lower(p) of them are left). `assigned` is indexed
// by applicant id; slot 0 is ignored.
std::optional<long long> assignable_weight(const Instance& inst, int post,
                                           const std::vector<bool>& assigned);

}  // namespace wmlq
