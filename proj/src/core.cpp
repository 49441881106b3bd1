#include "wmlq/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wmlq {

std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.num_applicants < 0) out.push_back("negative applicant count");
  if (inst.num_posts < 0) out.push_back("negative post count");
  const auto want = static_cast<std::size_t>(std::max(inst.num_posts, 0)) + 1;
  if (inst.lower.size() != want || inst.upper.size() != want) {
    out.push_back("quota vectors must have one slot per post id");
    return out;  // quota checks below would index out of bounds
  }
  for (int p = 1; p <= inst.num_posts; ++p) {
    if (inst.lower[p] < 0)
      out.push_back("post " + std::to_string(p) + ": negative lower quota");
    if (inst.lower[p] > inst.upper[p])
      out.push_back("post " + std::to_string(p) +
                    ": quota order violated (lower > upper)");
  }
  if (inst.edges.size() > kMaxEdges)
    out.push_back("edge count exceeds " + std::to_string(kMaxEdges));
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const Edge& e = inst.edges[i];
    const std::string where = "edge " + std::to_string(i + 1);
    if (e.applicant < 1 || e.applicant > inst.num_applicants)
      out.push_back(where + ": dangling applicant id " +
                    std::to_string(e.applicant));
    if (e.post < 1 || e.post > inst.num_posts)
      out.push_back(where + ": dangling post id " + std::to_string(e.post));
    if (e.weight < 0 || e.weight > kMaxWeight)
      out.push_back(where + ": weight out of range");
    if (!seen.insert({e.applicant, e.post}).second)
      out.push_back(where + ": duplicate edge (" +
                    std::to_string(e.applicant) + ", " +
                    std::to_string(e.post) + ")");
  }
  return out;
}

bool is_valid(const Instance& inst) { return validate(inst).empty(); }

void require_valid(const Instance& inst) {
  auto violations = validate(inst);
  if (!violations.empty())
    throw std::invalid_argument("invalid instance: " + violations.front());
}

std::vector<int> post_degrees(const Instance& inst) {
  std::vector<int> deg(inst.num_posts + 1, 0);
  for (const Edge& e : inst.edges) ++deg[e.post];
  return deg;
}

std::vector<int> applicant_degrees(const Instance& inst) {
  std::vector<int> deg(inst.num_applicants + 1, 0);
  for (const Edge& e : inst.edges) ++deg[e.applicant];
  return deg;
}

long long max_upper_quota(const Instance& inst) {
  long long u = 0;
  for (int p = 1; p <= inst.num_posts; ++p) u = std::max(u, inst.upper[p]);
  return u;
}

SimplifyResult simplify_mapped(const Instance& inst) {
  require_valid(inst);
  const auto deg = post_degrees(inst);

  SimplifyResult res;
  res.instance.num_applicants = inst.num_applicants;
  res.instance.lower.push_back(0);
  res.instance.upper.push_back(0);
  res.original_post_id.push_back(0);

  std::vector<int> new_id(inst.num_posts + 1, 0);
  for (int p = 1; p <= inst.num_posts; ++p) {
    if (inst.lower[p] > deg[p]) continue;  // can never be opened
    const long long u = std::min<long long>(inst.upper[p], deg[p]);
    if (u == 0) continue;  // can never take anyone
    const long long l = std::max<long long>(inst.lower[p], 1);
    new_id[p] = ++res.instance.num_posts;
    res.instance.lower.push_back(l);
    res.instance.upper.push_back(u);
    res.original_post_id.push_back(p);
  }
  for (const Edge& e : inst.edges)
    if (new_id[e.post] != 0)
      res.instance.edges.push_back({e.applicant, new_id[e.post], e.weight});
  return res;
}

Instance simplify(const Instance& inst) {
  return simplify_mapped(inst).instance;
}

EvaluateResult evaluate(const Instance& inst, const Assignment& assignment) {
  require_valid(inst);
  std::map<std::pair<int, int>, long long> weight_of;
  for (const Edge& e : inst.edges) weight_of[{e.applicant, e.post}] = e.weight;

  EvaluateResult res;
  std::vector<long long> post_count(inst.num_posts + 1, 0);
  std::vector<int> applicant_count(inst.num_applicants + 1, 0);
  long long total = 0;
  for (const auto& [a, p] : assignment) {
    auto it = weight_of.find({a, p});
    if (it == weight_of.end()) {
      res.violation = "pair (" + std::to_string(a) + ", " + std::to_string(p) +
                      ") is not an instance edge";
      return res;
    }
    if (++applicant_count[a] > 1) {
      res.violation = "applicant " + std::to_string(a) + " assigned twice";
      return res;
    }
    ++post_count[p];
    total += it->second;
  }
  for (int p = 1; p <= inst.num_posts; ++p) {
    if (post_count[p] == 0) continue;  // closed posts are always fine
    if (post_count[p] < inst.lower[p]) {
      res.violation = "post " + std::to_string(p) + " below lower quota";
      return res;
    }
    if (post_count[p] > inst.upper[p]) {
      res.violation = "post " + std::to_string(p) + " above upper quota";
      return res;
    }
  }
  res.feasible = true;
  res.weight = total;
  return res;
}

}  // namespace wmlq
