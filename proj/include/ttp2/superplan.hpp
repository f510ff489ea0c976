#ifndef TTP2_SUPERPLAN_HPP
#define TTP2_SUPERPLAN_HPP

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "ttp2/errors.hpp"
#include "ttp2/instance.hpp"
#include "ttp2/matching.hpp"

namespace ttp2 {

// Super-teams u_1..u_m (1-based labels), each an ordered pair of teams,
// with the super-distance table. Labels are chosen so that (u_i, u_{m+1-i})
// is always an edge of the minimum matching M_H on the super-distances.
struct SuperLayout {
  int m = 0;
  // teams[i] = ordered team pair of label i+1 (0-based storage).
  std::vector<std::array<int, 2>> teams;
  std::vector<std::vector<Dist>> superdist;  // by label, 0-based
  std::vector<Dist> pair_weight;             // matching-edge weight inside each label

  Dist sd(int label_a, int label_b) const {  // 1-based labels
    return superdist[label_a - 1][label_b - 1];
  }
  Dist pw(int label) const { return pair_weight[label - 1]; }
  const std::array<int, 2>& pair(int label) const { return teams[label - 1]; }
};

enum class SuperGameKind { Normal, Left, Last };

// One super-game. `a` leads: for Normal it is the home-first side (plays
// HHAA), for Left it is always u_m, for Last it is the side hosting day 1.
struct SuperGame {
  SuperGameKind kind;
  int a = 0;  // 1-based label
  int b = 0;
  int slot = 0;  // 1-based
};

struct SuperTimetable {
  int m = 0;
  std::vector<std::vector<SuperGame>> slots;  // slots[q-1], q = 1..m-1
};

namespace detail {

// Position of white super-team x on the rotating cycle in slot q.
inline int white_position(int x, int q, int m) {
  return ((x - m + q) % (m - 1) + (m - 1)) % (m - 1);
}

}  // namespace detail

// Slot-by-slot super-game pairings and orientations. Whites u_1..u_{m-1}
// rotate on the circle-method cycle; u_m stays fixed and meets u_{m-q} in
// slot q. The last slot pairs (u_i, u_{m+1-i}).
inline SuperTimetable build_timetable(int m) {
  if (m < 4 || m % 2 != 0)
    throw unsupported_size_error("super-timetable requires even m >= 4, got " +
                                 std::to_string(m));
  SuperTimetable tt;
  tt.m = m;
  tt.slots.resize(m - 1);
  for (int q = 1; q <= m - 2; ++q) {
    auto& slot = tt.slots[q - 1];
    int opp = m - q;  // u_m's opponent
    if (q == 1) {
      slot.push_back({SuperGameKind::Normal, m, opp, q});
    } else {
      slot.push_back({SuperGameKind::Left, m, opp, q});
    }
    for (int i = 1; i <= m - 1; ++i) {
      if (i == opp) continue;
      for (int j = i + 1; j <= m - 1; ++j) {
        if (j == opp) continue;
        if ((i + j) % (m - 1) != (2 * (m - q)) % (m - 1)) continue;
        // Home-first side is the white with (position + q) even.
        int pi = detail::white_position(i, q, m);
        bool i_first = (pi + q) % 2 == 0;
        slot.push_back({SuperGameKind::Normal, i_first ? i : j, i_first ? j : i, q});
      }
    }
  }
  auto& last = tt.slots[m - 2];
  for (int i = 1; i <= m / 2; ++i) {
    int j = m + 1 - i;
    // a-side hosts day 1: u_1 against u_m, the even label otherwise.
    int a = (i == 1) ? 1 : (i % 2 == 0 ? i : j);
    int b = (a == i) ? j : i;
    last.push_back({SuperGameKind::Last, a, b, m - 1});
  }
  return tt;
}

namespace detail {

inline std::vector<std::vector<Dist>> super_distances(
    const DistanceMatrix& dm, const std::vector<std::array<int, 2>>& pairs) {
  int m = (int)pairs.size();
  std::vector<std::vector<Dist>> sd(m, std::vector<Dist>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Dist s = 0;
      for (int a : pairs[i])
        for (int b : pairs[j]) s += dm.at(a, b);
      sd[i][j] = sd[j][i] = s;
    }
  return sd;
}

inline SuperLayout layout_from_labels(const DistanceMatrix& dm,
                                      const std::vector<std::array<int, 2>>& by_label) {
  SuperLayout lay;
  lay.m = (int)by_label.size();
  lay.teams = by_label;
  lay.superdist = super_distances(dm, by_label);
  lay.pair_weight.resize(lay.m);
  for (int i = 0; i < lay.m; ++i)
    lay.pair_weight[i] = dm.at(by_label[i][0], by_label[i][1]);
  return lay;
}

}  // namespace detail

// Layout with u_i = (t_{2i-1}, t_{2i}) and no relabeling (the reference n=8
// presentation; also used by tests).
inline SuperLayout make_identity_layout(const DistanceMatrix& dm) {
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < dm.n(); i += 2) pairs.push_back({i, i + 1});
  return detail::layout_from_labels(dm, pairs);
}

// Full labeling: super-teams from the minimum matching on G; last-slot
// pairing from the minimum matching M_H on the super-distances; u_m chosen
// to minimize the middle-slot sum, u_{m-1} as the farthest from u_m.
inline SuperLayout build_layout(const DistanceMatrix& dm) {
  int n = dm.n();
  if (n < 8 || n % 4 != 0)
    throw unsupported_size_error(
        "super-team construction requires n = 0 (mod 4), n >= 8; got " +
        std::to_string(n));
  PairMatching M = min_perfect_matching(dm);
  int m = n / 2;
  std::vector<std::array<int, 2>> orig(m);  // original super index order
  for (int i = 0; i < m; ++i) orig[i] = {M.pairs[i].first, M.pairs[i].second};
  std::vector<std::vector<Dist>> sd = detail::super_distances(dm, orig);

  PairMatching MH = min_perfect_matching(sd);
  std::vector<int> partner(m);
  for (auto [a, b] : MH.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<Dist> dtot(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) dtot[i] += sd[i][j];

  // u_m: minimize sum of super-distances to everyone except its M_H partner.
  int um = 0;
  for (int s = 1; s < m; ++s)
    if (dtot[s] - sd[s][partner[s]] < dtot[um] - sd[um][partner[um]]) um = s;
  int u1 = partner[um];

  // u_{m-1}: farthest from u_m among the rest; its partner becomes u_2.
  int um1 = -1;
  for (int s = 0; s < m; ++s) {
    if (s == um || s == u1) continue;
    if (um1 < 0 || sd[um][s] > sd[um][um1]) um1 = s;
  }
  int u2 = partner[um1];

  std::vector<int> label_of(m + 1, -1);  // 1-based label -> original index
  label_of[m] = um;
  label_of[1] = u1;
  label_of[m - 1] = um1;
  label_of[2] = u2;

  // Remaining M_H pairs take labels (i, m+1-i), i = 3..m/2, in ascending
  // order of their smallest original index; the smaller-sum member (total
  // super-distance) of each pair gets the smaller label.
  std::vector<std::pair<int, int>> rest;
  for (auto [a, b] : MH.pairs) {
    if (a == um || a == u1 || a == um1 || a == u2) continue;
    rest.emplace_back(a, b);  // a < b already
  }
  std::sort(rest.begin(), rest.end());
  int next = 3;
  for (auto [a, b] : rest) {
    int lo = a, hi = b;
    if (dtot[b] < dtot[a]) std::swap(lo, hi);
    label_of[next] = lo;
    label_of[m + 1 - next] = hi;
    ++next;
  }

  std::vector<std::array<int, 2>> by_label(m);
  for (int lbl = 1; lbl <= m; ++lbl) by_label[lbl - 1] = orig[label_of[lbl]];
  return detail::layout_from_labels(dm, by_label);
}

// E1 aggregate: total super-distance from u_m to its left-game opponents.
inline Dist e1_aggregate(const SuperLayout& lay) {
  Dist s = 0;
  for (int i = 2; i <= lay.m - 2; ++i) s += lay.sd(lay.m, i);
  return s;
}

// E2 aggregate: weight of the last-slot pairing, i.e. D_{M_H}.
inline Dist e2_aggregate(const SuperLayout& lay) {
  Dist s = 0;
  for (int i = 1; i <= lay.m / 2; ++i) s += lay.sd(i, lay.m + 1 - i);
  return s;
}

// D_H = D_G - D_M, recomputed from the table.
inline Dist total_super_weight(const SuperLayout& lay) {
  Dist s = 0;
  for (int i = 1; i <= lay.m; ++i)
    for (int j = i + 1; j <= lay.m; ++j) s += lay.sd(i, j);
  return s;
}

}  // namespace ttp2

#endif  // TTP2_SUPERPLAN_HPP
