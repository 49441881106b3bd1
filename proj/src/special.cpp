#include "wmlq/special.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "wmlq/greedy.hpp"

namespace wmlq {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Maps a result computed on a simplified instance back to original post ids.
void translate_posts(SolveResult& result, const SimplifyResult& simplified) {
  for (auto& [a, p] : result.assignment)
    p = simplified.original_post_id[p];
}

}  // namespace

SolveResult solve_degree2_posts(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(inst);
  const SimplifyResult simplified = simplify_mapped(inst);
  const Instance& s = simplified.instance;

  std::vector<std::vector<std::size_t>> post_edges(s.num_posts + 1);
  for (std::size_t i = 0; i < s.edges.size(); ++i)
    post_edges[s.edges[i].post].push_back(i);
  for (int p = 1; p <= s.num_posts; ++p)
    if (post_edges[p].size() > 2)
      throw std::invalid_argument(
          "post " + std::to_string(simplified.original_post_id[p]) +
          " has degree " + std::to_string(post_edges[p].size()) +
          " after simplification");

  // Helper graph: applicants are vertices 0..nA-1; single-slot choices get a
  // fresh partner vertex each; lower = upper = 2 posts contract to one
  // applicant-applicant edge carrying the summed weight.
  GeneralGraph helper;
  helper.num_vertices = s.num_applicants;
  struct Provenance {
    int post = 0;
    bool contracted = false;
    int applicant = 0;  // the served applicant when not contracted
  };
  std::vector<Provenance> provenance;
  std::map<std::pair<int, int>, std::size_t> contracted_at;

  auto add_partner = [&](int applicant, int post, long long weight) {
    const int partner = helper.num_vertices++;
    helper.edges.push_back({applicant - 1, partner, weight});
    provenance.push_back({post, false, applicant});
  };

  for (int p = 1; p <= s.num_posts; ++p) {
    const auto& ids = post_edges[p];
    if (ids.size() == 1 || s.upper[p] == 1) {
      // One slot to give out, possibly to either of two neighbours.
      const int partner = helper.num_vertices++;
      for (std::size_t e : ids) {
        helper.edges.push_back(
            {s.edges[e].applicant - 1, partner, s.edges[e].weight});
        provenance.push_back({p, false, s.edges[e].applicant});
      }
    } else if (s.lower[p] == 1) {
      // Sizes one and two are both fine, so the two slots are independent.
      for (std::size_t e : ids)
        add_partner(s.edges[e].applicant, p, s.edges[e].weight);
    } else {
      // lower = upper = 2: both neighbours or none.
      const int a1 = s.edges[ids[0]].applicant;
      const int a2 = s.edges[ids[1]].applicant;
      const long long weight = s.edges[ids[0]].weight + s.edges[ids[1]].weight;
      const std::pair<int, int> key{std::min(a1, a2) - 1,
                                    std::max(a1, a2) - 1};
      const auto it = contracted_at.find(key);
      if (it == contracted_at.end()) {
        contracted_at[key] = helper.edges.size();
        helper.edges.push_back({key.first, key.second, weight});
        provenance.push_back({p, true, 0});
      } else if (weight > helper.edges[it->second].weight) {
        // Two such posts fight over the same applicant pair; only the
        // heavier one can ever be worth opening.
        helper.edges[it->second].weight = weight;
        provenance[it->second] = {p, true, 0};
      }
    }
  }

  const std::vector<int> matched = max_weight_matching(helper);

  SolveResult result;
  result.objective = 0;
  for (int k : matched) {
    result.objective += helper.edges[k].weight;
    const Provenance& origin = provenance[k];
    const int original_post = simplified.original_post_id[origin.post];
    if (origin.contracted) {
      result.assignment.push_back(
          {helper.edges[k].u + 1, original_post});
      result.assignment.push_back(
          {helper.edges[k].v + 1, original_post});
    } else {
      result.assignment.push_back({origin.applicant, original_post});
    }
  }
  result.algorithm = "degree2";
  result.exact = true;

  const EvaluateResult eval = evaluate(inst, result.assignment);
  if (!eval.feasible || eval.weight != result.objective)
    throw std::logic_error("helper matching translated to an infeasible assignment");
  result.elapsed_ms = ms_since(start);
  return result;
}

U2Construction build_u2_gadget(const Instance& simplified) {
  const Instance& s = simplified;
  for (int p = 1; p <= s.num_posts; ++p) {
    if (s.upper[p] > 2)
      throw std::invalid_argument("post " + std::to_string(p) +
                                  " has upper quota above 2");
    if (s.upper[p] < 1)
      throw std::invalid_argument("post " + std::to_string(p) +
                                  " has upper quota 0; simplify first");
  }

  U2Construction cons;
  GeneralGraph& g = cons.graph;

  // Vertices 0..: original applicants, dummy applicants (one per post that
  // is normalized from l < u = 2 to l = u = 2), posts, per-post closing
  // helpers, the dummy post, parity triangles.
  std::vector<int> dummy_of(s.num_posts + 1, -1);
  int next = s.num_applicants;
  int p1_count = 0;
  for (int p = 1; p <= s.num_posts; ++p) {
    if (s.upper[p] == 2 && s.lower[p] < 2) dummy_of[p] = next++;
    if (s.upper[p] == 1) ++p1_count;
  }
  cons.num_applicants = next;
  cons.post_vertex.assign(s.num_posts + 1, -1);
  for (int p = 1; p <= s.num_posts; ++p) cons.post_vertex[p] = next++;
  std::vector<std::pair<int, int>> closers(s.num_posts + 1, {-1, -1});
  for (int p = 1; p <= s.num_posts; ++p) {
    if (s.upper[p] == 1)
      closers[p] = {next++, -1};  // path helper
    else
      closers[p] = {next++, next++};  // triangle helpers
  }
  cons.dummy_post = next++;
  cons.parity_base = cons.num_applicants + p1_count;
  const int triangles = (cons.parity_base + 1) / 2;
  std::vector<std::pair<int, int>> parity(triangles);
  for (auto& pair : parity) pair = {next++, next++};
  g.num_vertices = next;

  constexpr std::size_t kNoOrigin = static_cast<std::size_t>(-1);
  auto add_edge = [&](int u, int v, long long w, std::size_t origin) {
    g.edges.push_back({u, v, w});
    cons.original_edge.push_back(origin);
  };

  for (std::size_t i = 0; i < s.edges.size(); ++i)
    add_edge(s.edges[i].applicant - 1, cons.post_vertex[s.edges[i].post],
             s.edges[i].weight, i);
  for (int p = 1; p <= s.num_posts; ++p)
    if (dummy_of[p] != -1)
      add_edge(dummy_of[p], cons.post_vertex[p], 0, kNoOrigin);
  for (int a = 0; a < cons.num_applicants; ++a)
    add_edge(a, cons.dummy_post, 0, kNoOrigin);
  for (int p = 1; p <= s.num_posts; ++p) {
    const auto [q1, q2] = closers[p];
    if (q2 == -1) {
      // Path p - q1 - dummy post: q1 occupies the slot of a closed post and
      // parks at the dummy post otherwise.
      add_edge(cons.post_vertex[p], q1, 0, kNoOrigin);
      add_edge(q1, cons.dummy_post, 0, kNoOrigin);
    } else {
      // Triangle p, q1, q2: a two-slot post either closes onto both helpers
      // or serves two applicants while the helpers pair up.
      add_edge(cons.post_vertex[p], q1, 0, kNoOrigin);
      add_edge(cons.post_vertex[p], q2, 0, kNoOrigin);
      add_edge(q1, q2, 0, kNoOrigin);
    }
  }
  for (const auto& [r1, r2] : parity) {
    add_edge(cons.dummy_post, r1, 0, kNoOrigin);
    add_edge(cons.dummy_post, r2, 0, kNoOrigin);
    add_edge(r1, r2, 0, kNoOrigin);
  }

  cons.degree_target.assign(g.num_vertices, 1);
  for (int p = 1; p <= s.num_posts; ++p)
    cons.degree_target[cons.post_vertex[p]] =
        static_cast<int>(s.upper[p] == 2 && s.lower[p] < 2 ? 2 : s.upper[p]);
  cons.degree_target[cons.dummy_post] = cons.parity_base;
  return cons;
}

SolveResult solve_u2(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(inst);
  const SimplifyResult simplified = simplify_mapped(inst);
  const Instance& s = simplified.instance;
  for (int p = 1; p <= s.num_posts; ++p)
    if (s.upper[p] > 2)
      throw std::invalid_argument(
          "post " + std::to_string(simplified.original_post_id[p]) +
          " has upper quota " + std::to_string(s.upper[p]) +
          " after simplification");

  SolveResult result;
  result.algorithm = "u2";
  result.exact = true;
  if (s.num_posts == 0) {  // nothing left to open
    result.objective = 0;
    result.elapsed_ms = ms_since(start);
    return result;
  }

  U2Construction cons = build_u2_gadget(s);
  constexpr std::size_t kNoOrigin = static_cast<std::size_t>(-1);

  // The dummy post's exact degree is determined up to the number of parity
  // triangles it consumes, so only two candidate targets exist and exactly
  // one of them admits an f-factor.
  bool found = false;
  long long best = 0;
  std::vector<int> best_edges;
  for (int bump = 0; bump <= 1; ++bump) {
    std::vector<int> target = cons.degree_target;
    target[cons.dummy_post] = cons.parity_base + bump;
    const auto factor =
        max_weight_f_factor(FFactorInstance(cons.graph, target));
    if (!factor) continue;
    long long value = 0;
    for (int k : *factor) value += cons.graph.edges[k].weight;
    if (!found || value > best) {
      found = true;
      best = value;
      best_edges = *factor;
    }
  }
  if (!found)
    throw std::logic_error("neither parity target admits an f-factor");

  result.objective = best;
  for (int k : best_edges) {
    const std::size_t origin = cons.original_edge[k];
    if (origin == kNoOrigin) continue;
    result.assignment.push_back(
        {s.edges[origin].applicant,
         simplified.original_post_id[s.edges[origin].post]});
  }

  const EvaluateResult eval = evaluate(inst, result.assignment);
  if (!eval.feasible || eval.weight != result.objective)
    throw std::logic_error("f-factor restriction is not a feasible assignment");
  result.elapsed_ms = ms_since(start);
  return result;
}

std::optional<SolveResult> solve_all_open(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<int> all(inst.num_posts);
  for (int p = 1; p <= inst.num_posts; ++p) all[p - 1] = p;
  auto result = brute_force_forced_open(inst, all);
  if (!result) return std::nullopt;
  result->algorithm = "all-open";
  result->elapsed_ms = ms_since(start);
  return result;
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kAuto:
      return "auto";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kTreeDp:
      return "twdp";
    case Algorithm::kDegree2:
      return "degree2";
    case Algorithm::kU2:
      return "u2";
    case Algorithm::kAllOpen:
      return "all-open";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

namespace {

SolveResult solve_tree_dp(const Instance& inst, const SolveOptions& options) {
  const SimplifyResult simplified = simplify_mapped(inst);
  const auto graph = instance_graph(simplified.instance);
  const auto td = decompose(graph, options.strategy);
  const auto nd = to_nice(td);
  SolveResult result =
      dp_solve(simplified.instance, nd, DpOptions{options.cell_budget});
  translate_posts(result, simplified);
  return result;
}

}  // namespace

std::optional<SolveResult> solve(const Instance& inst,
                                 const SolveOptions& options) {
  require_valid(inst);
  switch (options.algorithm) {
    case Algorithm::kGreedy:
      return solve_greedy(inst);
    case Algorithm::kDegree2:
      return solve_degree2_posts(inst);
    case Algorithm::kU2:
      return solve_u2(inst);
    case Algorithm::kAllOpen:
      return solve_all_open(inst);
    case Algorithm::kOracle:
      if (inst.num_posts > options.oracle_limits.max_posts ||
          inst.edges.size() > options.oracle_limits.max_edges)
        throw BudgetError(
            "oracle limit exceeded: " + std::to_string(inst.num_posts) +
                " posts / " + std::to_string(inst.edges.size()) + " edges",
            1ULL << std::min(inst.num_posts, 63));
      return brute_force(inst, options.oracle_limits);
    case Algorithm::kTreeDp:
      return solve_tree_dp(inst, options);
    case Algorithm::kAuto:
      break;
  }

  // Routing happens on the simplified instance; the chosen solver gets the
  // original and simplifies again on its own.
  const SimplifyResult simplified = simplify_mapped(inst);
  const Instance& s = simplified.instance;
  if (max_upper_quota(s) <= 2) return solve_u2(inst);
  const auto degrees = post_degrees(s);
  if (*std::max_element(degrees.begin() + 1, degrees.end()) <= 2)
    return solve_degree2_posts(inst);

  // Decomposing huge graphs is pointless (their tables cannot fit any sane
  // budget) and the greedy heuristics are quadratic, so skip straight to
  // the approximation beyond this size.
  const int vertices = s.num_applicants + s.num_posts;
  if (vertices <= 5000 && s.edges.size() <= 20000) {
    const auto graph = instance_graph(s);
    const auto td = decompose(graph, options.strategy);
    const auto nd = to_nice(td);
    if (estimate_cost(nd, s) <= options.cell_budget) {
      SolveResult result = dp_solve(s, nd, DpOptions{options.cell_budget});
      translate_posts(result, simplified);
      return result;
    }
  }
  return solve_greedy(inst);
}

}  // namespace wmlq
