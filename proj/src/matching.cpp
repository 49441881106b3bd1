#include "wmlq/matching.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "wmlq/core.hpp"

namespace wmlq {

std::vector<std::string> validate(const GeneralGraph& g) {
  std::vector<std::string> out;
  if (g.num_vertices < 0) out.push_back("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const std::string where = "edge " + std::to_string(i + 1);
    if (e.u < 0 || e.u >= g.num_vertices || e.v < 0 || e.v >= g.num_vertices)
      out.push_back(where + ": endpoint out of range");
    else if (e.u == e.v)
      out.push_back(where + ": loop");
    else if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
      out.push_back(where + ": parallel edge");
    if (e.weight < -kMaxWeight || e.weight > kMaxWeight)
      out.push_back(where + ": weight out of range");
  }
  return out;
}

void require_valid(const GeneralGraph& g) {
  auto violations = validate(g);
  if (!violations.empty())
    throw std::invalid_argument("invalid graph: " + violations.front());
}

namespace {

void check(bool condition, const char* what) {
  if (!condition)
    throw std::logic_error(std::string("blossom invariant violated: ") + what);
}

// O(n^3) maximum-weight matching with blossoms and dual variables, in the
// classical endpoint-array formulation: edge k has endpoints 2k and 2k+1,
// mate[] stores the remote endpoint of the matched edge, and slots n..2n-1
// hold nontrivial blossoms. With max_cardinality set, the matching first
// maximizes its size and only then its weight, which is what the perfect
// matching wrapper needs. All arithmetic is exact: duals stay integers
// because edge weights enter the slack doubled.
class BlossomMatcher {
 public:
  BlossomMatcher(const GeneralGraph& g, bool max_cardinality)
      : n_(g.num_vertices),
        edges_(g.edges),
        max_cardinality_(max_cardinality) {}

  // mate as vertex ids, -1 for unmatched
  std::vector<int> solve() {
    const int nedge = static_cast<int>(edges_.size());
    if (n_ == 0) return {};

    endpoint_.resize(2 * nedge);
    for (int k = 0; k < nedge; ++k) {
      endpoint_[2 * k] = edges_[k].u;
      endpoint_[2 * k + 1] = edges_[k].v;
    }
    neighbend_.assign(n_, {});
    for (int k = 0; k < nedge; ++k) {
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }

    long long maxweight = 0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);

    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n_, -1);
    blossomchilds_.assign(2 * n_, {});
    blossombase_.resize(2 * n_);
    for (int v = 0; v < n_; ++v) blossombase_[v] = v;
    for (int b = n_; b < 2 * n_; ++b) blossombase_[b] = -1;
    blossomendps_.assign(2 * n_, {});
    bestedge_.assign(2 * n_, -1);
    blossombestedges_.assign(2 * n_, {});
    has_bestedges_.assign(2 * n_, false);
    unusedblossoms_.clear();
    for (int b = n_; b < 2 * n_; ++b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
    allowedge_.assign(nedge, false);

    // Main loop: one stage per augmentation, at most n of them.
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) has_bestedges_[b] = false;
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();

      for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0)
          assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          check(label_[inblossom_[v]] == 1, "queued vertex not in S");
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            long long kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                check(label_[inblossom_[w]] == 2, "expected T-blossom");
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        // No augmenting path with the current duals; compute the largest
        // safe dual change.
        int deltatype = -1;
        long long delta = 0;
        int deltaedge = -1, deltablossom = -1;
        if (!max_cardinality_) {
          deltatype = 1;
          delta = std::max<long long>(
              0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const long long d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 &&
              bestedge_[b] != -1) {
            const long long kslack = slack(bestedge_[b]);
            check(kslack % 2 == 0, "odd slack between S-blossoms");
            const long long d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
              label_[b] == 2 && (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // Max-cardinality mode with nothing to grow: make the optimum
          // verifiable and stop.
          check(max_cardinality_, "no delta in max-weight mode");
          deltatype = 1;
          delta = std::max<long long>(
              0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
        }

        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 1)
            dualvar_[v] -= delta;
          else if (label_[inblossom_[v]] == 2)
            dualvar_[v] += delta;
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }
        }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = edges_[deltaedge].u;
          if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].v;
          check(label_[inblossom_[i]] == 1, "delta2 edge without S side");
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          const int i = edges_[deltaedge].u;
          check(label_[inblossom_[i]] == 1, "delta3 edge without S side");
          queue_.push_back(i);
        } else if (deltatype == 4) {
          expand_blossom(deltablossom, false);
        }
      }

      if (!augmented) break;

      // Stage cleanup: S-blossoms whose dual hit zero are no longer useful.
      for (int b = n_; b < 2 * n_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }

    verify_optimum();

    std::vector<int> mate_vertex(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (mate_[v] >= 0) mate_vertex[v] = endpoint_[mate_[v]];
    for (int v = 0; v < n_; ++v)
      check(mate_vertex[v] == -1 || mate_vertex[mate_vertex[v]] == v,
            "mate array not symmetric");
    return mate_vertex;
  }

  // Matched edge indices, valid after solve().
  std::vector<int> matched_edges() const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k)
      if (mate_[edges_[k].u] == 2 * k + 1) {
        check(mate_[edges_[k].v] == 2 * k, "half-matched edge");
        out.push_back(k);
      }
    return out;
  }

 private:
  long long slack(int k) const {
    return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] -
           2 * edges_[k].weight;
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int child : blossomchilds_[b]) blossom_leaves(child, out);
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    check(label_[w] == 0 && label_[b] == 0, "relabeling a labeled vertex");
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      std::vector<int> leaves;
      blossom_leaves(b, leaves);
      queue_.insert(queue_.end(), leaves.begin(), leaves.end());
    } else {
      // T-label: the base's matched edge leads to the next S-vertex.
      const int base = blossombase_[b];
      check(mate_[base] >= 0, "T-labeled blossom with unmatched base");
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Traces back from both ends of a tight S-S edge; returns the base of the
  // new blossom, or -1 if the paths reach two different roots (an
  // augmenting path).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      check(label_[b] == 1, "backtracking through non-S blossom");
      path.push_back(b);
      label_[b] = 5;
      check(labelend_[b] == mate_[blossombase_[b]],
            "S-blossom labelend mismatch");
      if (labelend_[b] == -1) {
        v = -1;  // reached a root
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        check(label_[b] == 2, "expected T-blossom on the path");
        check(labelend_[b] >= 0, "T-blossom without entry edge");
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    check(!unusedblossoms_.empty(), "out of blossom slots");
    const int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();

    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;

    std::vector<int> path;
    std::vector<int> endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      check(label_[bv] == 2 ||
                (label_[bv] == 1 &&
                 labelend_[bv] == mate_[blossombase_[bv]]),
            "unexpected label while collecting blossom");
      check(labelend_[bv] >= 0, "blossom child without entry edge");
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      check(label_[bw] == 2 ||
                (label_[bw] == 1 &&
                 labelend_[bw] == mate_[blossombase_[bw]]),
            "unexpected label while collecting blossom");
      check(labelend_[bw] >= 0, "blossom child without entry edge");
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    blossomchilds_[b] = std::move(path);
    blossomendps_[b] = std::move(endps);

    check(label_[bb] == 1, "blossom base not in S");
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;

    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int leaf : leaves) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }

    // Merge the children's least-slack edge lists.
    std::vector<int> bestedgeto(2 * n_, -1);
    for (int bv2 : blossomchilds_[b]) {
      std::vector<std::vector<int>> nblists;
      if (has_bestedges_[bv2]) {
        nblists.push_back(std::move(blossombestedges_[bv2]));
      } else {
        std::vector<int> child_leaves;
        blossom_leaves(bv2, child_leaves);
        for (int leaf : child_leaves) {
          nblists.emplace_back();
          for (int p : neighbend_[leaf]) nblists.back().push_back(p / 2);
        }
      }
      for (const auto& nblist : nblists) {
        for (int k2 : nblist) {
          int i = edges_[k2].u;
          int j = edges_[k2].v;
          if (inblossom_[j] == b) std::swap(i, j);
          const int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || slack(k2) < slack(bestedgeto[bj])))
            bestedgeto[bj] = k2;
        }
      }
      blossombestedges_[bv2].clear();
      has_bestedges_[bv2] = false;
      bestedge_[bv2] = -1;
    }
    blossombestedges_[b].clear();
    for (int k2 : bestedgeto)
      if (k2 != -1) blossombestedges_[b].push_back(k2);
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int k2 : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(k2) < slack(bestedge_[b]))
        bestedge_[b] = k2;
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> leaves;
        blossom_leaves(s, leaves);
        for (int v : leaves) inblossom_[v] = s;
      }
    }

    if (!endstage && label_[b] == 2) {
      // The expanded blossom sat on an alternating path; relabel the even
      // half of its cycle and let the odd half go free.
      check(labelend_[b] >= 0, "T-blossom without entry edge");
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      const int len = static_cast<int>(blossomchilds_[b].size());
      int j = 0;
      while (blossomchilds_[b][j] != entrychild) ++j;
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      auto at = [&](int idx) {
        return idx < 0 ? idx + len : idx;  // python-style negative indexing
      };
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[blossomendps_[b][at(j - endptrick)] ^ endptrick ^
                         1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[blossomendps_[b][at(j - endptrick)] / 2] = true;
        j += jstep;
        p = blossomendps_[b][at(j - endptrick)] ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      const int bv = blossomchilds_[b][0];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (blossomchilds_[b][at(j)] != entrychild) {
        const int bv2 = blossomchilds_[b][at(j)];
        if (label_[bv2] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> leaves;
        blossom_leaves(bv2, leaves);
        int labeled = -1;
        for (int v : leaves)
          if (label_[v] != 0) {
            labeled = v;
            break;
          }
        if (labeled >= 0) {
          check(label_[labeled] == 2, "unexpected label inside blossom");
          check(inblossom_[labeled] == bv2, "stale inblossom entry");
          label_[labeled] = 0;
          label_[endpoint_[mate_[blossombase_[bv2]]]] = 0;
          assign_label(labeled, 2, labelend_[labeled]);
        }
        j += jstep;
      }
    }

    label_[b] = -1;
    labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  // Rotates blossom b so that vertex v becomes the base, flipping matched
  // and unmatched edges along the even half of the cycle.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);

    const int len = static_cast<int>(blossomchilds_[b].size());
    int i = 0;
    while (blossomchilds_[b][i] != t) ++i;
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    auto at = [&](int idx) { return idx < 0 ? idx + len : idx; };
    while (j != 0) {
      j += jstep;
      t = blossomchilds_[b][at(j)];
      const int p = blossomendps_[b][at(j - endptrick)] ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = blossomchilds_[b][at(j)];
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i,
                blossomchilds_[b].end());
    std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i,
                blossomendps_[b].end());
    blossombase_[b] = blossombase_[blossomchilds_[b][0]];
    check(blossombase_[b] == v, "rotation missed the new base");
  }

  void augment_matching(int k) {
    for (int side = 0; side < 2; ++side) {
      int s = side == 0 ? edges_[k].u : edges_[k].v;
      int p = side == 0 ? 2 * k + 1 : 2 * k;
      while (true) {
        const int bs = inblossom_[s];
        check(label_[bs] == 1, "augmenting through non-S blossom");
        check(labelend_[bs] == mate_[blossombase_[bs]],
              "S-blossom labelend mismatch");
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;  // reached the tree root
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        check(label_[bt] == 2, "expected T-blossom on augmenting path");
        check(labelend_[bt] >= 0, "T-blossom without entry edge");
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        check(blossombase_[bt] == t, "T-blossom base mismatch");
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  // Complementary slackness of the final duals; certifies optimality.
  void verify_optimum() const {
    long long vdualoffset = 0;
    if (max_cardinality_) {
      const long long mindual =
          *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
      vdualoffset = std::max<long long>(0, -mindual);
    }
    for (int v = 0; v < n_; ++v)
      check(dualvar_[v] + vdualoffset >= 0, "negative vertex dual");
    for (int b = n_; b < 2 * n_; ++b)
      check(blossombase_[b] < 0 || dualvar_[b] >= 0, "negative blossom dual");
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
      const int i = edges_[k].u;
      const int j = edges_[k].v;
      long long s = dualvar_[i] + dualvar_[j] - 2 * edges_[k].weight;
      std::vector<int> iblossoms{i}, jblossoms{j};
      while (blossomparent_[iblossoms.back()] != -1)
        iblossoms.push_back(blossomparent_[iblossoms.back()]);
      while (blossomparent_[jblossoms.back()] != -1)
        jblossoms.push_back(blossomparent_[jblossoms.back()]);
      std::reverse(iblossoms.begin(), iblossoms.end());
      std::reverse(jblossoms.begin(), jblossoms.end());
      for (std::size_t d = 0;
           d < std::min(iblossoms.size(), jblossoms.size()); ++d) {
        if (iblossoms[d] != jblossoms[d]) break;
        s += 2 * dualvar_[iblossoms[d]];
      }
      check(s >= 0, "negative edge slack");
      const bool mi = mate_[i] >= 0 && mate_[i] / 2 == k;
      const bool mj = mate_[j] >= 0 && mate_[j] / 2 == k;
      if (mi || mj) {
        check(mi && mj, "half-matched edge");
        check(s == 0, "matched edge with positive slack");
      }
    }
    for (int v = 0; v < n_; ++v)
      check(mate_[v] >= 0 || dualvar_[v] + vdualoffset == 0,
            "unmatched vertex with positive dual");
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossombase_[b] >= 0 && dualvar_[b] > 0) {
        check(blossomendps_[b].size() % 2 == 1,
              "blossom with even edge count");
        for (std::size_t idx = 1; idx < blossomendps_[b].size(); idx += 2) {
          const int p = blossomendps_[b][idx];
          check(mate_[endpoint_[p]] == (p ^ 1), "loose blossom edge");
          check(mate_[endpoint_[p ^ 1]] == p, "loose blossom edge");
        }
      }
    }
  }

  const int n_;
  std::vector<GeneralGraph::Edge> edges_;
  const bool max_cardinality_;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;  // remote endpoint of matched edge, by vertex
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<long long> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching(const GeneralGraph& g) {
  require_valid(g);
  BlossomMatcher matcher(g, /*max_cardinality=*/false);
  matcher.solve();
  return matcher.matched_edges();
}

std::optional<std::vector<int>> max_weight_perfect_matching(
    const GeneralGraph& g) {
  require_valid(g);
  BlossomMatcher matcher(g, /*max_cardinality=*/true);
  const auto mate = matcher.solve();
  for (int v = 0; v < g.num_vertices; ++v)
    if (mate[v] == -1) return std::nullopt;
  return matcher.matched_edges();
}

FFactorInstance::FFactorInstance(GeneralGraph graph, std::vector<int> target)
    : graph_(std::move(graph)), target_(std::move(target)) {
  require_valid(graph_);
  if (target_.size() != static_cast<std::size_t>(graph_.num_vertices))
    throw std::invalid_argument("degree target size mismatch");
  std::vector<int> deg(graph_.num_vertices, 0);
  for (const auto& e : graph_.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < graph_.num_vertices; ++v)
    if (target_[v] < 0 || target_[v] > deg[v])
      throw std::invalid_argument(
          "degree target of vertex " + std::to_string(v) +
          " outside [0, deg]");
}

std::optional<std::vector<int>> max_weight_f_factor(const FFactorInstance& ff) {
  const GeneralGraph& g = ff.graph();
  const std::vector<int>& f = ff.target();

  std::vector<int> deg(g.num_vertices, 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }

  // Vertex expansion: per vertex, one external copy per incident edge and
  // deg - f internal vertices wired to all of them with zero weight. A
  // perfect matching leaves exactly f(v) externals matched across original
  // edges.
  GeneralGraph gadget;
  std::vector<int> external_base(g.num_vertices, 0);
  std::vector<int> internal_base(g.num_vertices, 0);
  int next = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    external_base[v] = next;
    next += deg[v];
    internal_base[v] = next;
    next += deg[v] - f[v];
  }
  gadget.num_vertices = next;

  std::vector<int> slot(g.num_vertices, 0);  // next unused external copy
  std::vector<std::size_t> original_of;      // gadget edge -> original edge
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    const int xu = external_base[e.u] + slot[e.u]++;
    const int xv = external_base[e.v] + slot[e.v]++;
    gadget.edges.push_back({xu, xv, e.weight});
    original_of.push_back(k);
  }
  for (int v = 0; v < g.num_vertices; ++v)
    for (int t = 0; t < deg[v] - f[v]; ++t)
      for (int c = 0; c < deg[v]; ++c) {
        gadget.edges.push_back(
            {internal_base[v] + t, external_base[v] + c, 0});
        original_of.push_back(g.edges.size());  // sentinel: gadget-only
      }

  // Size check: the expansion is quadratic in the degrees, nothing more.
  std::size_t expected = g.edges.size();
  for (int v = 0; v < g.num_vertices; ++v)
    expected += static_cast<std::size_t>(deg[v]) * (deg[v] - f[v]);
  if (gadget.edges.size() != expected)
    throw std::logic_error("vertex expansion size mismatch");

  const auto perfect = max_weight_perfect_matching(gadget);
  if (!perfect) return std::nullopt;

  std::vector<int> chosen;
  for (int k : *perfect)
    if (original_of[k] < g.edges.size())
      chosen.push_back(static_cast<int>(original_of[k]));

  std::vector<int> result_deg(g.num_vertices, 0);
  for (int k : chosen) {
    ++result_deg[g.edges[k].u];
    ++result_deg[g.edges[k].v];
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (result_deg[v] != f[v])
      throw std::logic_error("projected subgraph misses its degree target");
  return chosen;
}

}  // namespace wmlq
