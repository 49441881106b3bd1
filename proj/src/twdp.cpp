#include "wmlq/twdp.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "wmlq/io.hpp"

namespace wmlq {

int applicant_vertex(const Instance& inst, int applicant) {
  (void)inst;
  return applicant - 1;
}

int post_vertex(const Instance& inst, int post) {
  return inst.num_applicants + post - 1;
}

AdjacencyGraph make_graph(int num_vertices,
                          const std::vector<std::pair<int, int>>& edges) {
  AdjacencyGraph g;
  g.num_vertices = num_vertices;
  g.adj.assign(num_vertices, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices || u == v)
      throw std::invalid_argument("bad edge endpoints");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

AdjacencyGraph instance_graph(const Instance& inst) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(inst.edges.size());
  for (const auto& e : inst.edges)
    edges.push_back({applicant_vertex(inst, e.applicant),
                     post_vertex(inst, e.post)});
  return make_graph(inst.num_applicants + inst.num_posts, edges);
}

int width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& bag : td.bags)
    w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

namespace {

// Builds the decomposition induced by an elimination order: the bag of v is
// v plus its neighborhood at elimination time, its parent is the bag of the
// earliest-eliminated of those neighbors. Roots of different components are
// chained so the result is one tree.
TreeDecomposition build_from_order(const AdjacencyGraph& g,
                                   const std::vector<int>& order) {
  const int n = g.num_vertices;
  std::vector<std::set<int>> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = {g.adj[v].begin(), g.adj[v].end()};

  TreeDecomposition td;
  td.num_vertices = n;
  std::vector<int> position(n, -1);
  for (int step = 0; step < n; ++step) position[order[step]] = step;

  std::vector<std::vector<int>> live_nbrs(n);
  for (int step = 0; step < n; ++step) {
    const int v = order[step];
    std::vector<int> bag(nbr[v].begin(), nbr[v].end());
    live_nbrs[v] = bag;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    for (int x : nbr[v])
      for (int y : nbr[v])
        if (x < y) {
          nbr[x].insert(y);
          nbr[y].insert(x);
        }
    for (int x : nbr[v]) nbr[x].erase(v);
  }

  std::vector<int> roots;
  for (int step = 0; step < n; ++step) {
    const int v = order[step];
    if (live_nbrs[v].empty()) {
      roots.push_back(step);
      continue;
    }
    int first = live_nbrs[v][0];
    for (int x : live_nbrs[v])
      if (position[x] < position[first]) first = x;
    td.tree_edges.push_back({step, position[first]});
  }
  for (std::size_t i = 1; i < roots.size(); ++i)
    td.tree_edges.push_back({roots[i - 1], roots[i]});
  return td;
}

// Number of missing edges among the current neighbors of v.
long long fill_count(const std::vector<std::set<int>>& nbr, int v) {
  long long missing = 0;
  for (auto it = nbr[v].begin(); it != nbr[v].end(); ++it)
    for (auto jt = std::next(it); jt != nbr[v].end(); ++jt)
      if (!nbr[*it].count(*jt)) ++missing;
  return missing;
}

std::vector<int> greedy_order(const AdjacencyGraph& g, bool by_fill) {
  const int n = g.num_vertices;
  std::vector<std::set<int>> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = {g.adj[v].begin(), g.adj[v].end()};
  std::vector<bool> gone(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_score = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      const long long score =
          by_fill ? fill_count(nbr, v) : static_cast<long long>(nbr[v].size());
      if (best == -1 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    gone[best] = true;
    for (int x : nbr[best])
      for (int y : nbr[best])
        if (x < y) {
          nbr[x].insert(y);
          nbr[y].insert(x);
        }
    for (int x : nbr[best]) nbr[x].erase(best);
  }
  return order;
}

// Max over an elimination of the minimum degree; a classic treewidth lower
// bound used to prune the exact search.
int mmd_lower_bound(std::vector<std::set<int>> nbr,
                    const std::vector<bool>& gone) {
  std::vector<bool> removed = gone;
  int bound = 0;
  const int n = static_cast<int>(nbr.size());
  while (true) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] &&
          (best == -1 || nbr[v].size() < nbr[best].size()))
        best = v;
    if (best == -1) break;
    bound = std::max(bound, static_cast<int>(nbr[best].size()));
    removed[best] = true;
    for (int x : nbr[best]) nbr[x].erase(best);
    nbr[best].clear();
  }
  return bound;
}

class ExactOrderSearch {
 public:
  explicit ExactOrderSearch(const AdjacencyGraph& g)
      : n_(g.num_vertices), nbr_(n_), gone_(n_, false) {
    for (int v = 0; v < n_; ++v)
      nbr_[v] = {g.adj[v].begin(), g.adj[v].end()};
  }

  // Iterative deepening over the target width; a state is the set of
  // already-eliminated vertices, whose fill graph is order-independent, so
  // failed sets are memoized per target.
  std::vector<int> run() {
    const int lb = mmd_lower_bound(nbr_, gone_);
    for (int target = lb; target <= std::max(0, n_ - 1); ++target) {
      target_ = target;
      failed_.clear();
      order_.clear();
      if (dfs(0)) return order_;
    }
    return {};  // n_ == 0
  }

 private:
  bool dfs(std::uint32_t mask) {
    if (static_cast<int>(order_.size()) == n_) return true;
    if (failed_.count(mask)) return false;
    if (mmd_lower_bound(nbr_, gone_) > target_) {
      failed_.insert(mask);
      return false;
    }
    for (int v = 0; v < n_; ++v) {
      if (gone_[v] || static_cast<int>(nbr_[v].size()) > target_) continue;
      const auto saved = nbr_[v];
      std::vector<std::pair<int, int>> added;
      for (int x : saved)
        for (int y : saved)
          if (x < y && nbr_[x].insert(y).second) {
            nbr_[y].insert(x);
            added.push_back({x, y});
          }
      for (int x : saved) nbr_[x].erase(v);
      gone_[v] = true;
      order_.push_back(v);

      if (dfs(mask | (1u << v))) return true;

      order_.pop_back();
      gone_[v] = false;
      for (const auto& [x, y] : added) {
        nbr_[x].erase(y);
        nbr_[y].erase(x);
      }
      for (int x : saved) nbr_[x].insert(v);
    }
    failed_.insert(mask);
    return false;
  }

  const int n_;
  int target_ = 0;
  std::vector<std::set<int>> nbr_;
  std::vector<bool> gone_;
  std::vector<int> order_;
  std::unordered_set<std::uint32_t> failed_;
};

}  // namespace

TreeDecomposition decompose(const AdjacencyGraph& g,
                            DecomposeStrategy strategy) {
  if (strategy == DecomposeStrategy::kExactSmall) {
    if (g.num_vertices > 20)
      throw std::invalid_argument(
          "exact decomposition is limited to 20 vertices");
    return build_from_order(g, ExactOrderSearch(g).run());
  }
  return build_from_order(
      g, greedy_order(g, strategy == DecomposeStrategy::kMinFill));
}

std::vector<std::string> check_decomposition(const AdjacencyGraph& g,
                                             const TreeDecomposition& td) {
  std::vector<std::string> out;
  const int n = g.num_vertices;
  const int nb = static_cast<int>(td.bags.size());
  if (td.num_vertices != n)
    out.push_back("decomposition is for a different vertex count");

  for (int b = 0; b < nb; ++b)
    for (int v : td.bags[b])
      if (v < 0 || v >= n) {
        out.push_back("bag " + std::to_string(b) +
                      " contains out-of-range vertex " + std::to_string(v));
        return out;
      }
  for (const auto& [a, b] : td.tree_edges)
    if (a < 0 || a >= nb || b < 0 || b >= nb || a == b) {
      out.push_back("tree edge on invalid bag ids");
      return out;
    }

  std::vector<std::vector<int>> occurs(n);
  for (int b = 0; b < nb; ++b)
    for (int v : td.bags[b]) occurs[v].push_back(b);
  for (int v = 0; v < n; ++v)
    if (occurs[v].empty())
      out.push_back("vertex " + std::to_string(v) + " appears in no bag");

  std::vector<std::set<int>> in_bag(nb);
  for (int b = 0; b < nb; ++b)
    in_bag[b] = {td.bags[b].begin(), td.bags[b].end()};
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      bool covered = false;
      for (int b : occurs[u])
        if (in_bag[b].count(v)) {
          covered = true;
          break;
        }
      if (!covered)
        out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " is covered by no bag");
    }

  if (nb == 0) {
    if (!td.tree_edges.empty()) out.push_back("tree edges without bags");
    return out;
  }
  if (static_cast<int>(td.tree_edges.size()) != nb - 1)
    out.push_back("bag tree has " + std::to_string(td.tree_edges.size()) +
                  " edges, expected " + std::to_string(nb - 1));
  std::vector<std::vector<int>> tree_adj(nb);
  for (const auto& [a, b] : td.tree_edges) {
    tree_adj[a].push_back(b);
    tree_adj[b].push_back(a);
  }
  {
    std::vector<bool> seen(nb, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      ++reached;
      for (int c : tree_adj[b])
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
    }
    if (reached != nb) out.push_back("bag tree is disconnected");
  }
  for (int v = 0; v < n; ++v) {
    if (occurs[v].empty()) continue;
    std::set<int> members(occurs[v].begin(), occurs[v].end());
    std::vector<int> stack{occurs[v][0]};
    std::set<int> seen{occurs[v][0]};
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (int c : tree_adj[b])
        if (members.count(c) && !seen.count(c)) {
          seen.insert(c);
          stack.push_back(c);
        }
    }
    if (seen.size() != members.size())
      out.push_back("occurrences of vertex " + std::to_string(v) +
                    " are disconnected");
  }
  return out;
}

NiceDecomposition to_nice(const TreeDecomposition& td) {
  NiceDecomposition nd;
  nd.num_vertices = td.num_vertices;
  if (td.bags.empty()) {
    nd.bags.push_back({BagKind::kLeaf, {}, -1, {}});
    nd.root = 0;
    return nd;
  }

  const int nb = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> tree_adj(nb);
  for (const auto& [a, b] : td.tree_edges) {
    tree_adj[a].push_back(b);
    tree_adj[b].push_back(a);
  }

  auto add_bag = [&nd](BagKind kind, std::vector<int> vertices, int special,
                       std::vector<int> children) {
    nd.bags.push_back({kind, std::move(vertices), special,
                       std::move(children)});
    return static_cast<int>(nd.bags.size()) - 1;
  };

  // Chain of leaf + introduces realizing the given content from scratch.
  auto build_ground = [&](const std::vector<int>& content) {
    if (content.empty()) return add_bag(BagKind::kLeaf, {}, -1, {});
    int cur = add_bag(BagKind::kLeaf, {content[0]}, -1, {});
    std::vector<int> have{content[0]};
    for (std::size_t i = 1; i < content.size(); ++i) {
      have.push_back(content[i]);  // content is sorted, so have stays sorted
      cur = add_bag(BagKind::kIntroduce, have, content[i], {cur});
    }
    return cur;
  };

  // Forgets then introduces turning a chain topped with `from` into one
  // topped with `to`.
  auto adapt = [&](int node, std::vector<int> from,
                   const std::vector<int>& to) {
    std::vector<int> drop, gain;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                        std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                        std::back_inserter(gain));
    for (int v : drop) {
      from.erase(std::find(from.begin(), from.end(), v));
      node = add_bag(BagKind::kForget, from, v, {node});
    }
    for (int v : gain) {
      from.insert(std::upper_bound(from.begin(), from.end(), v), v);
      node = add_bag(BagKind::kIntroduce, from, v, {node});
    }
    return node;
  };

  // Iterative post-order over the original tree, rooted at bag 0.
  std::vector<int> result(nb, -1);
  std::vector<std::pair<int, int>> stack{{0, -1}};
  std::vector<std::pair<int, int>> post;  // (bag, parent)
  while (!stack.empty()) {
    const auto [b, parent] = stack.back();
    stack.pop_back();
    post.push_back({b, parent});
    for (int c : tree_adj[b])
      if (c != parent) stack.push_back({c, b});
  }
  std::reverse(post.begin(), post.end());
  for (const auto& [b, parent] : post) {
    std::vector<int> content = td.bags[b];
    std::sort(content.begin(), content.end());
    int cur = -1;
    for (int c : tree_adj[b]) {
      if (c == parent) continue;
      std::vector<int> child_content = td.bags[c];
      std::sort(child_content.begin(), child_content.end());
      const int adapted = adapt(result[c], child_content, content);
      cur = cur == -1 ? adapted
                      : add_bag(BagKind::kJoin, content, -1, {cur, adapted});
    }
    if (cur == -1) cur = build_ground(content);
    result[b] = cur;
  }

  int root = result[0];
  std::vector<int> remaining = td.bags[0];
  std::sort(remaining.begin(), remaining.end());
  while (!remaining.empty()) {
    const int v = remaining.back();
    remaining.pop_back();
    root = add_bag(BagKind::kForget, remaining, v, {root});
  }
  nd.root = root;
  return nd;
}

std::vector<std::string> check_nice(const AdjacencyGraph& g,
                                    const NiceDecomposition& nd) {
  std::vector<std::string> out;
  const int nb = static_cast<int>(nd.bags.size());
  if (nb == 0) {
    out.push_back("no bags");
    return out;
  }
  if (nd.root < 0 || nd.root >= nb) {
    out.push_back("root index out of range");
    return out;
  }

  for (int b = 0; b < nb; ++b) {
    const auto& bag = nd.bags[b];
    const std::string where = "bag " + std::to_string(b);
    if (!std::is_sorted(bag.vertices.begin(), bag.vertices.end()) ||
        std::adjacent_find(bag.vertices.begin(), bag.vertices.end()) !=
            bag.vertices.end())
      out.push_back(where + ": vertices not sorted and distinct");
    for (int c : bag.children)
      if (c < 0 || c >= nb) {
        out.push_back(where + ": child index out of range");
        return out;
      }
  }

  std::vector<int> parent_count(nb, 0);
  for (const auto& bag : nd.bags)
    for (int c : bag.children) ++parent_count[c];
  for (int b = 0; b < nb; ++b) {
    if (b == nd.root && parent_count[b] != 0)
      out.push_back("root has a parent");
    else if (b != nd.root && parent_count[b] != 1)
      out.push_back("bag " + std::to_string(b) +
                    " has " + std::to_string(parent_count[b]) + " parents");
  }

  auto merged_with = [](const std::vector<int>& base, int extra) {
    std::vector<int> merged = base;
    merged.insert(std::upper_bound(merged.begin(), merged.end(), extra),
                  extra);
    return merged;
  };
  for (int b = 0; b < nb; ++b) {
    const auto& bag = nd.bags[b];
    const std::string where = "bag " + std::to_string(b);
    switch (bag.kind) {
      case BagKind::kLeaf:
        if (!bag.children.empty()) out.push_back(where + ": leaf with children");
        if (bag.vertices.size() > 1)
          out.push_back(where + ": leaf holds more than one vertex");
        break;
      case BagKind::kIntroduce: {
        if (bag.children.size() != 1) {
          out.push_back(where + ": introduce needs one child");
          break;
        }
        const auto& child = nd.bags[bag.children[0]];
        if (bag.special < 0 ||
            merged_with(child.vertices, bag.special) != bag.vertices ||
            std::binary_search(child.vertices.begin(), child.vertices.end(),
                               bag.special))
          out.push_back(where + ": not the child bag plus one new vertex");
        break;
      }
      case BagKind::kForget: {
        if (bag.children.size() != 1) {
          out.push_back(where + ": forget needs one child");
          break;
        }
        const auto& child = nd.bags[bag.children[0]];
        if (bag.special < 0 ||
            merged_with(bag.vertices, bag.special) != child.vertices)
          out.push_back(where + ": not the child bag minus one vertex");
        break;
      }
      case BagKind::kJoin: {
        if (bag.children.size() != 2) {
          out.push_back(where + ": join needs two children");
          break;
        }
        if (nd.bags[bag.children[0]].vertices != bag.vertices ||
            nd.bags[bag.children[1]].vertices != bag.vertices)
          out.push_back(where + ": children bags differ from the join bag");
        break;
      }
    }
  }
  if (!out.empty()) return out;

  TreeDecomposition td;
  td.num_vertices = nd.num_vertices;
  for (const auto& bag : nd.bags) td.bags.push_back(bag.vertices);
  for (int b = 0; b < nb; ++b)
    for (int c : nd.bags[b].children) td.tree_edges.push_back({b, c});
  if (nd.num_vertices != g.num_vertices)
    out.push_back("decomposition is for a different vertex count");
  auto td_violations = check_decomposition(g, td);
  out.insert(out.end(), td_violations.begin(), td_violations.end());
  return out;
}

std::string render_decomposition(const TreeDecomposition& td) {
  std::ostringstream out;
  std::size_t max_bag = 0;
  for (const auto& bag : td.bags) max_bag = std::max(max_bag, bag.size());
  out << "s td " << td.bags.size() << ' ' << max_bag << ' '
      << td.num_vertices << '\n';
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    out << "b " << b + 1;
    for (int v : td.bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges)
    out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

namespace {

std::vector<std::pair<int, std::vector<std::string>>> significant_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty() || tokens[0] == "c") continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

long long parse_int(const std::string& token, int line) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" +
                     token + "'");
  return value;
}

}  // namespace

TreeDecomposition parse_decomposition(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty decomposition");
  auto fail = [](int line, const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  };

  const auto& [header_line, header] = lines[0];
  if (header.size() != 5 || header[0] != "s" || header[1] != "td")
    fail(header_line, "expected header 's td <bags> <size> <vertices>'");
  const long long nb = parse_int(header[2], header_line);
  const long long declared_size = parse_int(header[3], header_line);
  const long long n = parse_int(header[4], header_line);
  if (nb < 0 || n < 0 || declared_size < 0)
    fail(header_line, "negative counts in header");

  TreeDecomposition td;
  td.num_vertices = static_cast<int>(n);
  td.bags.assign(nb, {});
  std::vector<bool> seen_bag(nb, false);
  std::size_t next = 1;
  for (long long i = 0; i < nb; ++i, ++next) {
    if (next >= lines.size()) throw ParseError("missing bag lines");
    const auto& [line, tokens] = lines[next];
    if (tokens[0] != "b" || tokens.size() < 2)
      fail(line, "expected bag line 'b <id> <vertices>'");
    const long long id = parse_int(tokens[1], line);
    if (id < 1 || id > nb) fail(line, "bag id out of range");
    if (seen_bag[id - 1]) fail(line, "duplicate bag id");
    seen_bag[id - 1] = true;
    std::vector<int> bag;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      const long long v = parse_int(tokens[t], line);
      if (v < 1 || v > n) fail(line, "vertex id out of range");
      bag.push_back(static_cast<int>(v - 1));
    }
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      fail(line, "duplicate vertex in bag");
    if (static_cast<long long>(bag.size()) > declared_size)
      fail(line, "bag exceeds declared maximum size");
    td.bags[id - 1] = std::move(bag);
  }
  const long long expected_edges = nb > 0 ? nb - 1 : 0;
  for (long long i = 0; i < expected_edges; ++i, ++next) {
    if (next >= lines.size()) throw ParseError("missing tree edge lines");
    const auto& [line, tokens] = lines[next];
    if (tokens.size() != 2) fail(line, "expected tree edge '<i> <j>'");
    const long long a = parse_int(tokens[0], line);
    const long long b = parse_int(tokens[1], line);
    if (a < 1 || a > nb || b < 1 || b > nb || a == b)
      fail(line, "tree edge on invalid bag ids");
    td.tree_edges.push_back({static_cast<int>(a - 1),
                             static_cast<int>(b - 1)});
  }
  if (next < lines.size())
    fail(lines[next].first, "unexpected trailing content");
  return td;
}

namespace {

// Per-vertex table domain sizes: a vertex can host at most min(u, deg)
// chosen edges, and applicants have an implicit upper quota of 1.
std::vector<long long> domain_sizes(const Instance& inst) {
  const int n = inst.num_applicants + inst.num_posts;
  std::vector<long long> deg(n, 0);
  for (const auto& e : inst.edges) {
    ++deg[applicant_vertex(inst, e.applicant)];
    ++deg[post_vertex(inst, e.post)];
  }
  std::vector<long long> domain(n, 0);
  for (int a = 1; a <= inst.num_applicants; ++a) {
    const int v = applicant_vertex(inst, a);
    domain[v] = std::min<long long>(1, deg[v]);
  }
  for (int p = 1; p <= inst.num_posts; ++p) {
    const int v = post_vertex(inst, p);
    domain[v] = std::min<long long>(inst.upper[p], deg[v]);
  }
  return domain;
}

}  // namespace

unsigned long long estimate_cost(const NiceDecomposition& nd,
                                 const Instance& inst) {
  constexpr unsigned long long kMax =
      std::numeric_limits<unsigned long long>::max();
  const auto domain = domain_sizes(inst);
  unsigned long long total = 0;
  for (const auto& bag : nd.bags) {
    unsigned long long cells = 1;
    for (int v : bag.vertices) {
      if (v < 0 || v >= static_cast<int>(domain.size()))
        throw std::invalid_argument("bag vertex outside the instance");
      const unsigned long long d =
          static_cast<unsigned long long>(domain[v]) + 1;
      if (cells > kMax / d) {
        cells = kMax;
        break;
      }
      cells *= d;
    }
    if (total > kMax - cells) return kMax;
    total += cells;
  }
  return total;
}

DpRun::DpRun(const Instance& inst, const NiceDecomposition& nd,
             const DpOptions& options)
    : inst_(inst), nd_(nd), options_(options) {
  require_valid(inst_);
  graph_ = instance_graph(inst_);
  const auto violations = check_nice(graph_, nd_);
  if (!violations.empty())
    throw std::invalid_argument("invalid nice decomposition: " +
                                violations.front());

  const int n = graph_.num_vertices;
  domain_ = domain_sizes(inst_);
  quota_lower_.assign(n, 0);
  quota_upper_.assign(n, 0);
  for (int a = 1; a <= inst_.num_applicants; ++a) {
    quota_lower_[applicant_vertex(inst_, a)] = 0;
    quota_upper_[applicant_vertex(inst_, a)] = 1;
  }
  for (int p = 1; p <= inst_.num_posts; ++p) {
    quota_lower_[post_vertex(inst_, p)] = inst_.lower[p];
    quota_upper_[post_vertex(inst_, p)] = inst_.upper[p];
  }
  incident_.assign(n, {});
  for (std::size_t i = 0; i < inst_.edges.size(); ++i) {
    incident_[applicant_vertex(inst_, inst_.edges[i].applicant)].push_back(i);
    incident_[post_vertex(inst_, inst_.edges[i].post)].push_back(i);
  }
  tables_.resize(nd_.bags.size());
  below_.resize(nd_.bags.size());
}

std::size_t DpRun::cell_index(int bag, const std::vector<long long>& alpha) const {
  const auto& vertices = nd_.bags[bag].vertices;
  const auto& table = tables_[bag];
  if (alpha.size() != vertices.size())
    throw std::invalid_argument("assignment vector has wrong arity");
  std::size_t index = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 || alpha[i] > domain_[vertices[i]])
      throw std::invalid_argument("assignment value outside vertex domain");
    index += static_cast<std::size_t>(alpha[i]) *
             static_cast<std::size_t>(table.strides[i]);
  }
  return index;
}

void DpRun::run() {
  if (ran_) return;

  // Children strictly precede parents in a post-order walk from the root.
  std::vector<int> order;
  {
    std::vector<int> stack{nd_.root};
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      order.push_back(b);
      for (int c : nd_.bags[b].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
  }

  const std::size_t words = (graph_.num_vertices + 63) / 64;
  for (int bag : order) {
    // Allocate the table: one dimension per bag vertex.
    auto& table = tables_[bag];
    const auto& vertices = nd_.bags[bag].vertices;
    table.strides.assign(vertices.size(), 1);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      table.strides[i] = static_cast<long long>(cells);
      const std::size_t d = static_cast<std::size_t>(domain_[vertices[i]] + 1);
      if (cells > (std::size_t{1} << 40) / d)
        throw std::runtime_error("dp table too large to allocate");
      cells *= d;
    }
    table.value.assign(cells, kNegInf);
    table.choice.assign(cells, 0);
    cells_ += cells;

    below_[bag].assign(words, 0);
    for (int c : nd_.bags[bag].children)
      for (std::size_t w = 0; w < words; ++w) below_[bag][w] |= below_[c][w];
    for (int v : vertices) below_[bag][v / 64] |= 1ULL << (v % 64);

    switch (nd_.bags[bag].kind) {
      case BagKind::kLeaf:
        compute_leaf(bag);
        break;
      case BagKind::kIntroduce:
        compute_introduce(bag);
        break;
      case BagKind::kForget:
        compute_forget(bag);
        break;
      case BagKind::kJoin:
        compute_join(bag);
        break;
    }
  }
  ran_ = true;
}

void DpRun::compute_leaf(int bag) {
  tables_[bag].value[0] = 0;  // no edges below, so only the all-zero vector
}

void DpRun::compute_introduce(int bag) {
  const auto& node = nd_.bags[bag];
  const int child = node.children[0];
  const auto& child_vertices = nd_.bags[child].vertices;
  const int v_new = node.special;

  // A valid decomposition keeps the new vertex away from everything already
  // forgotten below; edges to the child bag itself are still pending.
  for (int u : graph_.adj[v_new]) {
    const bool in_below = (below_[child][u / 64] >> (u % 64)) & 1;
    const bool in_child_bag =
        std::binary_search(child_vertices.begin(), child_vertices.end(), u);
    if (in_below && !in_child_bag)
      throw std::logic_error(
          "introduced vertex is adjacent to a forgotten vertex");
  }

  auto& table = tables_[bag];
  const auto& child_table = tables_[child];
  const auto& vertices = node.vertices;
  const std::size_t pv =
      std::lower_bound(vertices.begin(), vertices.end(), v_new) -
      vertices.begin();

  // Child stride aligned with each parent dimension (new vertex: none).
  std::vector<long long> child_stride(vertices.size(), 0);
  for (std::size_t i = 0, j = 0; i < vertices.size(); ++i)
    if (i != pv) child_stride[i] = child_table.strides[j++];

  std::vector<long long> alpha(vertices.size(), 0);
  for (std::size_t cell = 0; cell < table.value.size(); ++cell) {
    if (alpha[pv] == 0) {
      std::size_t child_cell = 0;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        child_cell += static_cast<std::size_t>(alpha[i] * child_stride[i]);
      table.value[cell] = child_table.value[child_cell];
      table.choice[cell] = child_cell;
    }
    for (std::size_t d = 0; d < vertices.size(); ++d) {
      if (alpha[d] < domain_[vertices[d]]) {
        ++alpha[d];
        break;
      }
      alpha[d] = 0;
    }
  }
}

void DpRun::compute_forget(int bag) {
  const auto& node = nd_.bags[bag];
  const int child = node.children[0];
  const auto& child_table = tables_[child];
  const auto& child_vertices = nd_.bags[child].vertices;
  const int v_old = node.special;
  const auto& vertices = node.vertices;
  auto& table = tables_[bag];

  const std::size_t pv =
      std::lower_bound(child_vertices.begin(), child_vertices.end(), v_old) -
      child_vertices.begin();
  const long long v_stride = child_table.strides[pv];

  // Parent dimension -> child stride (child has v_old inserted at pv).
  std::vector<long long> child_stride(vertices.size(), 0);
  for (std::size_t i = 0, j = 0; i < vertices.size(); ++i) {
    if (j == pv) ++j;
    child_stride[i] = child_table.strides[j++];
  }

  // Candidate edges from the dying vertex into the remaining bag. These are
  // exactly the edges committed at this node.
  struct Candidate {
    std::size_t edge_id;
    std::size_t bag_pos;
    long long weight;
  };
  std::vector<Candidate> candidates;
  for (std::size_t e : incident_[v_old]) {
    const int a = applicant_vertex(inst_, inst_.edges[e].applicant);
    const int p = post_vertex(inst_, inst_.edges[e].post);
    const int other = a == v_old ? p : a;
    const auto it =
        std::lower_bound(vertices.begin(), vertices.end(), other);
    if (it != vertices.end() && *it == other) {
      candidates.push_back({e, static_cast<std::size_t>(it - vertices.begin()),
                            inst_.edges[e].weight});
      table.bag_edge_ids.push_back(e);
    }
  }
  if (candidates.size() > 32)
    throw std::runtime_error("bag too wide for edge subset enumeration");

  const long long lo = quota_lower_[v_old];
  const long long hi = quota_upper_[v_old];
  std::vector<long long> alpha(vertices.size(), 0);
  for (std::size_t cell = 0; cell < table.value.size(); ++cell) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      base += static_cast<std::size_t>(alpha[i] * child_stride[i]);

    long long best = kNegInf;
    std::uint64_t best_choice = 0;
    for (std::uint32_t mask = 0; mask < (1u << candidates.size()); ++mask) {
      long long added = 0;
      std::size_t sub_base = base;
      bool ok = true;
      for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        const auto& cand = candidates[std::countr_zero(m)];
        if (alpha[cand.bag_pos] == 0) {
          ok = false;  // this vector has no room for the edge's other end
          break;
        }
        added += cand.weight;
        sub_base -= static_cast<std::size_t>(child_stride[cand.bag_pos]);
      }
      if (!ok) continue;
      const long long taken = std::popcount(mask);
      // Final degree of the forgotten vertex: zero, or within quota. It is
      // also at most the edges taken now plus what the child table can hold.
      const long long cap = std::min(hi, taken + domain_[v_old]);
      for (long long total = 0; total <= cap; ++total) {
        if (total > 0 && total < std::max<long long>(lo, taken)) continue;
        if (total < taken) continue;
        const long long prev = total - taken;
        if (prev > domain_[v_old]) continue;
        const long long below_val =
            child_table.value[sub_base +
                              static_cast<std::size_t>(prev * v_stride)];
        if (below_val == kNegInf) continue;
        if (below_val + added > best) {
          best = below_val + added;
          best_choice = (static_cast<std::uint64_t>(total) << 32) | mask;
        }
      }
    }
    table.value[cell] = best;
    table.choice[cell] = best_choice;

    for (std::size_t d = 0; d < vertices.size(); ++d) {
      if (alpha[d] < domain_[vertices[d]]) {
        ++alpha[d];
        break;
      }
      alpha[d] = 0;
    }
  }
}

void DpRun::compute_join(int bag) {
  const auto& node = nd_.bags[bag];
  const int left = node.children[0];
  const int right = node.children[1];
  const auto& vertices = node.vertices;
  auto& table = tables_[bag];
  const auto& left_table = tables_[left];
  const auto& right_table = tables_[right];

  // Valid decompositions overlap the two subtrees exactly in the join bag,
  // which is what makes the edge sets below them disjoint.
  for (std::size_t w = 0; w < below_[left].size(); ++w) {
    std::uint64_t common = below_[left][w] & below_[right][w];
    std::uint64_t bagbits = 0;
    for (int v : vertices)
      if (static_cast<std::size_t>(v / 64) == w) bagbits |= 1ULL << (v % 64);
    if (common != bagbits)
      throw std::logic_error("join subtrees overlap outside the bag");
  }

  std::vector<long long> alpha(vertices.size(), 0);
  for (std::size_t cell = 0; cell < table.value.size(); ++cell) {
    long long best = kNegInf;
    std::uint64_t best_choice = 0;
    // Split alpha across the children; index arithmetic is linear, so the
    // right child's cell is just the difference.
    std::vector<long long> sub(vertices.size(), 0);
    std::size_t sub_cell = 0;
    while (true) {
      const long long lv = left_table.value[sub_cell];
      const long long rv = right_table.value[cell - sub_cell];
      if (lv != kNegInf && rv != kNegInf && lv + rv > best) {
        best = lv + rv;
        best_choice = sub_cell;
      }
      std::size_t d = 0;
      while (d < sub.size() && sub[d] == alpha[d]) {
        sub_cell -= static_cast<std::size_t>(sub[d] * table.strides[d]);
        sub[d] = 0;
        ++d;
      }
      if (d == sub.size()) break;
      ++sub[d];
      sub_cell += static_cast<std::size_t>(table.strides[d]);
    }
    table.value[cell] = best;
    table.choice[cell] = best_choice;

    for (std::size_t d = 0; d < vertices.size(); ++d) {
      if (alpha[d] < domain_[vertices[d]]) {
        ++alpha[d];
        break;
      }
      alpha[d] = 0;
    }
  }
}

long long DpRun::table_value(int bag,
                             const std::vector<long long>& alpha) const {
  if (!ran_) throw std::logic_error("tables not computed yet");
  if (bag < 0 || bag >= static_cast<int>(tables_.size()))
    throw std::invalid_argument("bag index out of range");
  return tables_[bag].value[cell_index(bag, alpha)];
}

void DpRun::reconstruct_into(int bag, std::size_t cell,
                             std::vector<std::size_t>& out) const {
  std::vector<std::pair<int, std::size_t>> stack{{bag, cell}};
  while (!stack.empty()) {
    const auto [b, c] = stack.back();
    stack.pop_back();
    const auto& node = nd_.bags[b];
    const auto& table = tables_[b];
    if (table.value[c] == kNegInf)
      throw std::invalid_argument("cell is not realizable");
    switch (node.kind) {
      case BagKind::kLeaf:
        break;
      case BagKind::kIntroduce:
        stack.push_back({node.children[0], table.choice[c]});
        break;
      case BagKind::kForget: {
        const std::uint64_t choice = table.choice[c];
        const std::uint32_t mask = static_cast<std::uint32_t>(choice);
        const long long total = static_cast<long long>(choice >> 32);

        const int child = node.children[0];
        const auto& child_vertices = nd_.bags[child].vertices;
        const auto& child_table = tables_[child];
        const std::size_t pv =
            std::lower_bound(child_vertices.begin(), child_vertices.end(),
                             node.special) -
            child_vertices.begin();
        std::vector<long long> child_stride(node.vertices.size(), 0);
        for (std::size_t i = 0, j = 0; i < node.vertices.size(); ++i) {
          if (j == pv) ++j;
          child_stride[i] = child_table.strides[j++];
        }
        // Decode alpha of this cell, then rebuild the child cell the same
        // way compute_forget found it.
        std::size_t rest = c;
        std::size_t base = 0;
        for (std::size_t i = node.vertices.size(); i-- > 0;) {
          const long long a = static_cast<long long>(
              rest / static_cast<std::size_t>(table.strides[i]));
          rest %= static_cast<std::size_t>(table.strides[i]);
          base += static_cast<std::size_t>(a * child_stride[i]);
        }
        long long taken = 0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
          const std::size_t e =
              table.bag_edge_ids[std::countr_zero(m)];
          out.push_back(e);
          ++taken;
          const int a = applicant_vertex(inst_, inst_.edges[e].applicant);
          const int p = post_vertex(inst_, inst_.edges[e].post);
          const int other = a == node.special ? p : a;
          const std::size_t pos =
              std::lower_bound(node.vertices.begin(), node.vertices.end(),
                               other) -
              node.vertices.begin();
          base -= static_cast<std::size_t>(child_stride[pos]);
        }
        const long long prev = total - taken;
        stack.push_back(
            {child,
             base + static_cast<std::size_t>(prev * child_table.strides[pv])});
        break;
      }
      case BagKind::kJoin: {
        const std::size_t left_cell = table.choice[c];
        stack.push_back({node.children[0], left_cell});
        stack.push_back({node.children[1], c - left_cell});
        break;
      }
    }
  }
}

std::vector<std::size_t> DpRun::reconstruct(
    int bag, const std::vector<long long>& alpha) const {
  if (!ran_) throw std::logic_error("tables not computed yet");
  if (bag < 0 || bag >= static_cast<int>(tables_.size()))
    throw std::invalid_argument("bag index out of range");
  std::vector<std::size_t> out;
  reconstruct_into(bag, cell_index(bag, alpha), out);
  std::sort(out.begin(), out.end());
  return out;
}

DpRun::RootChoice DpRun::solve_root() const {
  if (!ran_) throw std::logic_error("tables not computed yet");
  const int root = nd_.root;
  const auto& vertices = nd_.bags[root].vertices;
  const auto& table = tables_[root];

  // Edges with both endpoints still in the root bag were never committed by
  // a forget, so they are decided here.
  std::vector<std::size_t> inside;
  for (std::size_t e = 0; e < inst_.edges.size(); ++e) {
    const int a = applicant_vertex(inst_, inst_.edges[e].applicant);
    const int p = post_vertex(inst_, inst_.edges[e].post);
    if (std::binary_search(vertices.begin(), vertices.end(), a) &&
        std::binary_search(vertices.begin(), vertices.end(), p))
      inside.push_back(e);
  }
  if (inside.size() > 32)
    throw std::runtime_error("root bag too wide for edge subset enumeration");

  RootChoice best;
  for (std::uint32_t mask = 0; mask < (1u << inside.size()); ++mask) {
    std::vector<long long> deg(vertices.size(), 0);
    long long added = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const std::size_t e = inside[std::countr_zero(m)];
      added += inst_.edges[e].weight;
      const int a = applicant_vertex(inst_, inst_.edges[e].applicant);
      const int p = post_vertex(inst_, inst_.edges[e].post);
      for (const int v : {a, p})
        ++deg[std::lower_bound(vertices.begin(), vertices.end(), v) -
              vertices.begin()];
    }

    std::vector<long long> alpha(vertices.size(), 0);
    for (std::size_t cell = 0; cell < table.value.size(); ++cell) {
      bool ok = table.value[cell] != kNegInf;
      for (std::size_t i = 0; ok && i < vertices.size(); ++i) {
        const long long final_deg = alpha[i] + deg[i];
        const int v = vertices[i];
        if (final_deg != 0 &&
            (final_deg < quota_lower_[v] || final_deg > quota_upper_[v]))
          ok = false;
      }
      if (ok && table.value[cell] + added > best.value) {
        best.value = table.value[cell] + added;
        best.alpha = alpha;
        best.bag_edges.clear();
        for (std::uint32_t m = mask; m != 0; m &= m - 1)
          best.bag_edges.push_back(inside[std::countr_zero(m)]);
      }
      for (std::size_t d = 0; d < vertices.size(); ++d) {
        if (alpha[d] < domain_[vertices[d]]) {
          ++alpha[d];
          break;
        }
        alpha[d] = 0;
      }
    }
  }
  return best;
}

SolveResult DpRun::solve() {
  const auto start = std::chrono::steady_clock::now();
  run();
  const RootChoice root = solve_root();
  if (root.value == kNegInf)
    throw std::logic_error("dp found no realizable assignment");

  std::vector<std::size_t> chosen = reconstruct(nd_.root, root.alpha);
  chosen.insert(chosen.end(), root.bag_edges.begin(), root.bag_edges.end());
  std::sort(chosen.begin(), chosen.end());

  SolveResult result;
  for (std::size_t e : chosen)
    result.assignment.push_back(
        {inst_.edges[e].applicant, inst_.edges[e].post});
  result.objective = root.value;
  result.algorithm = "twdp";
  result.exact = true;
  result.dp_cells = cells_;

  const EvaluateResult eval = evaluate(inst_, result.assignment);
  if (!eval.feasible || eval.weight != root.value)
    throw std::logic_error("reconstructed assignment does not match the dp value");

  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

SolveResult dp_solve(const Instance& inst, const NiceDecomposition& nd,
                     const DpOptions& options) {
  const unsigned long long estimate = estimate_cost(nd, inst);
  if (estimate > options.cell_budget)
    throw BudgetError("dp table estimate " + std::to_string(estimate) +
                          " exceeds the budget of " +
                          std::to_string(options.cell_budget) + " cells",
                      estimate);
  DpRun run(inst, nd, options);
  return run.solve();
}

}  // namespace wmlq
