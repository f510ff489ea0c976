#ifndef TTP2_MATCHING_HPP
#define TTP2_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "ttp2/errors.hpp"
#include "ttp2/instance.hpp"

namespace ttp2 {

// A perfect matching on {0..k-1} together with its total weight.
// Pairs are stored (lo, hi) and sorted by first element.
struct PairMatching {
  std::vector<std::pair<int, int>> pairs;
  Dist weight = 0;
};

namespace detail {

// Primal-dual blossom algorithm for maximum-weight matching on a dense
// graph, O(V^3). 1-indexed internally; edges with weight 0 are absent.
class MaxWeightMatcher {
 public:
  explicit MaxWeightMatcher(int n)
      : n_(n),
        cap_(2 * n + 2),
        g_(cap_, std::vector<Edge>(cap_)),
        lab_(cap_, 0),
        match_(cap_, 0),
        slack_(cap_, 0),
        st_(cap_, 0),
        pa_(cap_, 0),
        flower_from_(cap_, std::vector<int>(cap_, 0)),
        S_(cap_, 0),
        vis_(cap_, 0),
        flower_(cap_) {
    for (int u = 0; u < cap_; ++u)
      for (int v = 0; v < cap_; ++v) g_[u][v] = Edge{u, v, 0};
  }

  void set_weight(int u, int v, long long w) {  // 1-based
    g_[u][v].w = w;
    g_[v][u].w = w;
  }

  // Returns total weight of a maximum-weight matching; match(u) gives the
  // 1-based partner of u, or 0 if unmatched.
  long long solve() {
    std::fill(match_.begin(), match_.end(), 0);
    n_x_ = n_;
    long long w_max = 0;
    for (int u = 0; u <= n_; ++u) {
      st_[u] = u;
      flower_[u].clear();
    }
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) {
        flower_from_[u][v] = (u == v ? u : 0);
        w_max = std::max(w_max, g_[u][v].w);
      }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (matching()) {
    }
    long long tot = 0;
    for (int u = 1; u <= n_; ++u)
      if (match_[u] && match_[u] < u) tot += g_[u][match_[u]].w;
    return tot;
  }

  int match(int u) const { return match_[u]; }

 private:
  struct Edge {
    int u, v;
    long long w;
  };

  static constexpr long long kInf = (long long)4e18;

  long long e_delta(const Edge& e) const {
    return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2;
  }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x])) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (g_[u][x].w > 0 && st_[u] != x && S_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_)
      q_.push_back(x);
    else
      for (int y : flower_[x]) q_push(y);
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int y : flower_[x]) set_st(y, b);
  }

  int get_pr(int b, int xr) {
    int pr = int(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                 flower_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower_[b].begin() + 1, flower_[b].end());
      return int(flower_[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = g_[u][v].v;
    if (u > n_) {
      const Edge& e = g_[u][v];
      int xr = flower_from_[u][e.u];
      int pr = get_pr(u, xr);
      for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
      set_match(xr, v);
      std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    ++timer_;
    for (; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == timer_) return u;
      vis_[u] = timer_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    S_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      g_[b][x].w = 0;
      g_[x][b].w = 0;
    }
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
          g_[b][x] = g_[xs][x];
          g_[x][b] = g_[x][xs];
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int x : flower_[b]) set_st(x, x);
    int xr = flower_from_[b][g_[b][pa_[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i];
      int xns = flower_[b][i + 1];
      pa_[xs] = g_[xns][xs].u;
      S_[xs] = 1;
      S_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    S_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
      int xs = flower_[b][i];
      S_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const Edge& e) {
    int u = st_[e.u];
    int v = st_[e.v];
    if (S_[v] == -1) {
      pa_[v] = e.u;
      S_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      S_[nu] = 0;
      q_push(nu);
    } else if (S_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching() {
    std::fill(S_.begin() + 1, S_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        S_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (S_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (g_[u][v].w > 0 && st_[u] != st_[v]) {
            if (e_delta(g_[u][v]) == 0) {
              if (on_found_edge(g_[u][v])) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      long long d = kInf;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && S_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (S_[x] == -1)
            d = std::min(d, e_delta(g_[slack_[x]][x]));
          else if (S_[x] == 0)
            d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (S_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (S_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (S_[b] == 0)
            lab_[b] += d * 2;
          else if (S_[b] == 1)
            lab_[b] -= d * 2;
        }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            e_delta(g_[slack_[x]][x]) == 0)
          if (on_found_edge(g_[slack_[x]][x])) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && S_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int n_x_ = 0;
  int cap_;
  int timer_ = 0;
  std::vector<std::vector<Edge>> g_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, st_, pa_;
  std::vector<std::vector<int>> flower_from_;
  std::vector<int> S_, vis_;
  std::vector<std::vector<int>> flower_;
  std::deque<int> q_;
};

// Minimum-weight perfect matching weight on the complete graph induced by
// the rows/cols of `w` listed in `verts`. Reduction: maximize (BIG - w)
// with BIG large enough that maximum cardinality dominates.
inline Dist min_perfect_matching_weight(const std::vector<std::vector<Dist>>& w,
                                        const std::vector<int>& verts) {
  int k = (int)verts.size();
  if (k == 0) return 0;
  Dist w_max = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      w_max = std::max(w_max, w[verts[i]][verts[j]]);
  long long big = (long long)(k / 2 + 1) * (w_max + 1) + 1;
  MaxWeightMatcher mm(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      mm.set_weight(i + 1, j + 1, big - w[verts[i]][verts[j]]);
  long long tot = mm.solve();
  for (int u = 1; u <= k; ++u)
    if (!mm.match(u)) throw internal_error("matching left a vertex unmatched");
  return (Dist)((long long)(k / 2) * big - tot);
}

inline void check_weight_table(const std::vector<std::vector<Dist>>& w) {
  int k = (int)w.size();
  if (k < 2 || k % 2 != 0)
    throw unsupported_size_error("perfect matching requires even k >= 2, got " +
                                 std::to_string(k));
  for (int i = 0; i < k; ++i) {
    if ((int)w[i].size() != k) throw validation_error("weight table is not square");
    for (int j = 0; j < k; ++j) {
      if (w[i][j] != w[j][i]) throw validation_error("weight table is asymmetric");
      if (w[i][j] < 0) throw validation_error("negative weight");
    }
  }
}

}  // namespace detail

// Exact minimum-weight perfect matching with a fixed tie-break: among all
// minimum-weight matchings, the lexicographically smallest pair sequence.
// The tie-break is realized by greedily fixing the smallest free vertex to
// its smallest partner that preserves the optimal total, re-solving the
// remainder each time; each fix re-verifies the optimum.
inline PairMatching min_perfect_matching(const std::vector<std::vector<Dist>>& w) {
  detail::check_weight_table(w);
  int k = (int)w.size();
  std::vector<int> rem(k);
  for (int i = 0; i < k; ++i) rem[i] = i;
  PairMatching out;
  Dist target = detail::min_perfect_matching_weight(w, rem);
  out.weight = target;
  while (!rem.empty()) {
    int u = rem.front();
    bool fixed = false;
    for (std::size_t vi = 1; vi < rem.size() && !fixed; ++vi) {
      int v = rem[vi];
      std::vector<int> sub;
      for (int x : rem)
        if (x != u && x != v) sub.push_back(x);
      Dist rest = detail::min_perfect_matching_weight(w, sub);
      if (rest + w[u][v] == target) {
        out.pairs.emplace_back(u, v);
        rem = std::move(sub);
        target = rest;
        fixed = true;
      }
    }
    if (!fixed) throw internal_error("matching refinement found no consistent partner");
  }
  return out;
}

// Exhaustive (k-1)!! enumeration; same tie-break rule. Test oracle.
inline PairMatching brute_force_matching(const std::vector<std::vector<Dist>>& w) {
  detail::check_weight_table(w);
  int k = (int)w.size();
  if (k > 12) throw unsupported_size_error("brute-force matching is guarded to k <= 12");
  std::vector<bool> used(k, false);
  std::vector<std::pair<int, int>> cur;
  PairMatching best;
  bool have = false;
  Dist cur_w = 0;
  auto rec = [&](auto&& self) -> void {
    int u = -1;
    for (int i = 0; i < k; ++i)
      if (!used[i]) {
        u = i;
        break;
      }
    if (u < 0) {
      if (!have || cur_w < best.weight) {
        best.pairs = cur;
        best.weight = cur_w;
        have = true;
      }
      return;
    }
    used[u] = true;
    for (int v = u + 1; v < k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.emplace_back(u, v);
      cur_w += w[u][v];
      self(self);
      cur_w -= w[u][v];
      cur.pop_back();
      used[v] = false;
    }
    used[u] = false;
  };
  rec(rec);
  return best;
}

// Convenience overload on a distance matrix (graph G).
inline PairMatching min_perfect_matching(const DistanceMatrix& dm) {
  std::vector<std::vector<Dist>> w(dm.n(), std::vector<Dist>(dm.n()));
  for (int i = 0; i < dm.n(); ++i)
    for (int j = 0; j < dm.n(); ++j) w[i][j] = dm.at(i, j);
  return min_perfect_matching(w);
}

}  // namespace ttp2

#endif  // TTP2_MATCHING_HPP
