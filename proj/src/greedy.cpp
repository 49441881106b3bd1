#include "wmlq/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

namespace wmlq {

namespace {

// Per-post view of its neighbors, kept sorted by weight (descending, then
// applicant id). The window is the prefix holding the min(u, unassigned)
// heaviest unassigned neighbors; window_sum is the post's selection key.
struct PostState {
  struct Entry {
    long long weight;
    int applicant;
  };
  std::vector<Entry> order;
  int upper = 0;
  int lower = 0;
  int unassigned = 0;
  int window_end = 0;  // exclusive scan frontier into order
  int window_size = 0;
  long long window_sum = 0;
  bool open = false;

  int target() const { return std::min(upper, unassigned); }
};

}  // namespace

std::optional<long long> assignable_weight(const Instance& inst, int post,
                                           const std::vector<bool>& assigned) {
  if (post < 1 || post > inst.num_posts)
    throw std::invalid_argument("post id out of range");
  if (assigned.size() != static_cast<std::size_t>(inst.num_applicants) + 1)
    throw std::invalid_argument("assigned vector has wrong size");
  std::vector<std::pair<long long, int>> free_neighbors;
  for (const auto& e : inst.edges)
    if (e.post == post && !assigned[e.applicant])
      free_neighbors.push_back({e.weight, e.applicant});
  if (static_cast<long long>(free_neighbors.size()) < inst.lower[post])
    return std::nullopt;
  std::sort(free_neighbors.begin(), free_neighbors.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first > b.first
                                        : a.second < b.second;
            });
  const std::size_t take = std::min<std::size_t>(
      free_neighbors.size(), static_cast<std::size_t>(inst.upper[post]));
  long long sum = 0;
  for (std::size_t i = 0; i < take; ++i) sum += free_neighbors[i].first;
  return sum;
}

SolveResult solve_greedy(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(inst);
  const SimplifyResult simplified = simplify_mapped(inst);
  const Instance& s = simplified.instance;

  std::vector<PostState> posts(s.num_posts + 1);
  for (int p = 1; p <= s.num_posts; ++p) {
    posts[p].upper = static_cast<int>(s.upper[p]);
    posts[p].lower = static_cast<int>(s.lower[p]);
  }
  for (const auto& e : s.edges)
    posts[e.post].order.push_back({e.weight, e.applicant});
  // Position of each applicant within each adjacent post's sorted order, so
  // removals are O(1) lookups.
  std::vector<std::vector<std::pair<int, int>>> touches(s.num_applicants + 1);
  for (int p = 1; p <= s.num_posts; ++p) {
    auto& st = posts[p];
    std::sort(st.order.begin(), st.order.end(),
              [](const PostState::Entry& a, const PostState::Entry& b) {
                return a.weight != b.weight ? a.weight > b.weight
                                            : a.applicant < b.applicant;
              });
    st.unassigned = static_cast<int>(st.order.size());
    st.window_end = std::min<int>(st.target(), st.order.size());
    st.window_size = st.window_end;
    for (int i = 0; i < st.window_end; ++i)
      st.window_sum += st.order[i].weight;
    for (int i = 0; i < static_cast<int>(st.order.size()); ++i)
      touches[st.order[i].applicant].push_back({p, i});
  }

  std::vector<bool> assigned(s.num_applicants + 1, false);

  // Max-heap of (key, post); stale entries are re-validated on pop. Keys
  // only ever decrease, so a popped entry matching the live key is the true
  // maximum. Ties go to the smallest post id.
  using HeapEntry = std::pair<long long, int>;
  auto cmp = [](const HeapEntry& a, const HeapEntry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(cmp)> heap(
      cmp);
  for (int p = 1; p <= s.num_posts; ++p)
    heap.push({posts[p].window_sum, p});

  // Removes the entry at position i of post q's order after its applicant
  // was assigned elsewhere, keeping the window exactly target()-sized.
  auto remove_at = [&](int q, int i) {
    auto& st = posts[q];
    --st.unassigned;
    if (i < st.window_end) {
      st.window_sum -= st.order[i].weight;
      --st.window_size;
    }
    while (st.window_size < st.target() &&
           st.window_end < static_cast<int>(st.order.size())) {
      const auto& entry = st.order[st.window_end];
      if (!assigned[entry.applicant]) {
        st.window_sum += entry.weight;
        ++st.window_size;
      }
      ++st.window_end;
    }
  };

  Assignment result_pairs;
  long long objective = 0;
  while (!heap.empty()) {
    const auto [key, p] = heap.top();
    heap.pop();
    auto& st = posts[p];
    if (st.open) continue;
    if (st.unassigned < st.lower) continue;  // permanently inadmissible
    if (key != st.window_sum) {
      heap.push({st.window_sum, p});  // stale entry; re-queue the live key
      continue;
    }
    st.open = true;
    std::vector<int> winners;
    for (int i = 0; i < st.window_end; ++i)
      if (!assigned[st.order[i].applicant])
        winners.push_back(st.order[i].applicant);
    objective += st.window_sum;
    // Assign and propagate one winner at a time: a batch of assignments
    // followed by a batch of removals would let a refill scan past a
    // just-assigned winner (skipping it) whose later removal then subtracts
    // a weight the window never counted.
    for (int a : winners) {
      assigned[a] = true;
      result_pairs.push_back({a, simplified.original_post_id[p]});
      for (const auto& [q, pos] : touches[a])
        if (q != p && !posts[q].open) remove_at(q, pos);
    }
  }

  SolveResult result;
  result.assignment = std::move(result_pairs);
  result.objective = objective;
  result.algorithm = "greedy";
  result.exact = false;
  const long long u_max = max_upper_quota(s);
  result.guarantee_factor =
      std::min<long long>({s.num_posts, s.num_applicants, u_max + 1});
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace wmlq
