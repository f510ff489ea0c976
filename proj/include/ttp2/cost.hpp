#ifndef TTP2_COST_HPP
#define TTP2_COST_HPP

#include <algorithm>
#include <vector>

#include "ttp2/errors.hpp"
#include "ttp2/instance.hpp"
#include "ttp2/matching.hpp"
#include "ttp2/rational.hpp"
#include "ttp2/schedule.hpp"
#include "ttp2/superplan.hpp"

namespace ttp2 {

struct ItineraryCost {
  Dist total = 0;
  std::vector<Dist> per_team;
};

// Direct-traveling simulation: every team starts at home, walks its venue
// sequence day by day, and returns home at the end.
inline ItineraryCost itinerary_cost(const Schedule& s, const DistanceMatrix& dm) {
  ItineraryCost ic;
  ic.per_team.assign(s.n, 0);
  for (int i = 0; i < s.n; ++i) {
    int pos = i;
    Dist t = 0;
    for (int d = 0; d < s.days(); ++d) {
      int venue = s.grid[i][d].venue == Venue::Home ? i : s.grid[i][d].opponent;
      t += dm.at(pos, venue);
      pos = venue;
    }
    t += dm.at(pos, i);
    ic.per_team[i] = t;
    ic.total += t;
  }
  return ic;
}

struct LowerBound {
  Dist lb = 0;
  std::vector<Dist> per_team;  // LB_i = D_i + D_M
  PairMatching matching;       // M
};

// Independent lower bound: LB = 2 D_G + n D_M.
inline LowerBound independent_lower_bound(const DistanceMatrix& dm) {
  LowerBound out;
  out.matching = min_perfect_matching(dm);
  Dist dm_weight = out.matching.weight;
  out.per_team.resize(dm.n());
  for (int i = 0; i < dm.n(); ++i) {
    out.per_team[i] = dm.row_sum(i) + dm_weight;
    out.lb += out.per_team[i];
  }
  return out;
}

// The optimal itinerary of one team under the matching-pair structure: one
// two-stop road trip per other matched pair and a single-stop trip to the
// team's own partner. Total cost is LB_i.
inline std::vector<std::vector<int>> optimal_itinerary(int team, const SuperLayout& lay) {
  std::vector<std::vector<int>> trips;
  int own = -1;
  for (int lbl = 1; lbl <= lay.m; ++lbl) {
    const auto& p = lay.pair(lbl);
    if (p[0] == team || p[1] == team)
      own = lbl;
  }
  trips.push_back({lay.pair(own)[0] == team ? lay.pair(own)[1] : lay.pair(own)[0]});
  for (int lbl = 1; lbl <= lay.m; ++lbl) {
    if (lbl == own) continue;
    trips.push_back({lay.pair(lbl)[0], lay.pair(lbl)[1]});
  }
  return trips;
}

inline Dist trip_cost(int team, const std::vector<int>& trip, const DistanceMatrix& dm) {
  Dist c = 0;
  int pos = team;
  for (int v : trip) {
    c += dm.at(pos, v);
    pos = v;
  }
  return c + dm.at(pos, team);
}

struct BlockExtra {
  SuperGameKind kind;
  int slot;  // 1-based
  int a, b;  // labels
  Dist extra;
};

struct CostReport {
  Dist lb = 0;
  std::vector<Dist> per_team_lb;
  Dist total = 0;
  std::vector<BlockExtra> extras;
  Dist extra_sum = 0;
  Dist e1 = 0;  // sum of D(u_m, u_i) over left-game opponents
  Dist e2 = 0;  // D_{M_H}, the last-slot pairing weight
  Rational ratio;  // total / lb
  Rational gap;    // (total - lb) / lb
};

// Closed-form block extras, cross-checked against trip simulation below.
// Left: the HAAH side travels optimally; the other side pays
// D(u_m, u_c) - 2 * (pair weight of the HAAH side).
inline Dist left_extra_closed_form(const SuperLayout& lay, int q, int c_label) {
  int haah = (q % 2 == 0) ? lay.m : c_label;
  return lay.sd(lay.m, c_label) - 2 * lay.pw(haah);
}

// Last: with the a-side hosting day 1,
// 2 D(a1,b2) + D(a2,b1) + D(a2,b2) - 2 w_a - w_b.
inline Dist last_extra_closed_form(const DistanceMatrix& dm, const std::array<int, 2>& A,
                                   const std::array<int, 2>& B) {
  auto [a1, a2] = A;
  auto [b1, b2] = B;
  return 2 * dm.at(a1, b2) + dm.at(a2, b1) + dm.at(a2, b2) - 2 * dm.at(a1, a2) -
         dm.at(b1, b2);
}

namespace detail {

// Actual travel of `team` over days [d0, d1], home-bounded, plus the list
// of away venues visited (deduplicated, in visit order).
inline std::pair<Dist, std::vector<int>> block_travel(const Schedule& s,
                                                      const DistanceMatrix& dm, int team,
                                                      int d0, int d1) {
  Dist c = 0;
  int pos = team;
  std::vector<int> visited;
  for (int d = d0; d <= d1; ++d) {
    int venue = s.grid[team][d].venue == Venue::Home ? team : s.grid[team][d].opponent;
    c += dm.at(pos, venue);
    pos = venue;
    if (venue != team &&
        std::find(visited.begin(), visited.end(), venue) == visited.end())
      visited.push_back(venue);
  }
  c += dm.at(pos, team);
  return {c, visited};
}

// Cost of the coincident sub-itinerary of the optimal itinerary: the
// visited set must decompose into whole matched pairs plus possibly the
// team's own partner.
inline Dist coincident_optimal(const DistanceMatrix& dm, const SuperLayout& lay, int team,
                               const std::vector<int>& visited) {
  std::vector<int> label_of_team(2 * lay.m, 0);
  for (int lbl = 1; lbl <= lay.m; ++lbl)
    for (int t : lay.pair(lbl)) label_of_team[t] = lbl;
  int own = label_of_team[team];
  Dist c = 0;
  std::vector<int> seen;
  for (int v : visited) {
    int lbl = label_of_team[v];
    if (std::find(seen.begin(), seen.end(), lbl) != seen.end()) continue;
    seen.push_back(lbl);
    if (lbl == own) {
      c += 2 * dm.at(team, v);
    } else {
      const auto& p = lay.pair(lbl);
      bool both = std::find(visited.begin(), visited.end(), p[0]) != visited.end() &&
                  std::find(visited.begin(), visited.end(), p[1]) != visited.end();
      if (!both)
        throw internal_error("block visits only part of an opposing super-team");
      c += dm.at(team, p[0]) + dm.at(p[0], p[1]) + dm.at(p[1], team);
    }
  }
  return c;
}

}  // namespace detail

// Per-block extra costs by trip-level simulation (authoritative), with the
// closed forms cross-asserted and the exact identity
// total = LB + sum(extras) enforced.
inline CostReport extra_cost_accounting(const Schedule& s, const SuperLayout& lay,
                                        const SuperTimetable& tt,
                                        const DistanceMatrix& dm) {
  CostReport rep;
  LowerBound lb = independent_lower_bound(dm);
  rep.lb = lb.lb;
  rep.per_team_lb = std::move(lb.per_team);
  ItineraryCost ic = itinerary_cost(s, dm);
  rep.total = ic.total;

  for (int q = 1; q <= tt.m - 1; ++q) {
    int d0 = (q - 1) * 4;
    for (const SuperGame& sg : tt.slots[q - 1]) {
      int d1 = d0 + (sg.kind == SuperGameKind::Last ? 5 : 3);
      Dist extra = 0;
      for (int lbl : {sg.a, sg.b})
        for (int t : lay.pair(lbl)) {
          auto [actual, visited] = detail::block_travel(s, dm, t, d0, d1);
          extra += actual - detail::coincident_optimal(dm, lay, t, visited);
        }
      if (sg.kind == SuperGameKind::Normal && extra != 0)
        throw internal_error("normal super-game produced nonzero extra");
      if (sg.kind == SuperGameKind::Left &&
          extra != left_extra_closed_form(lay, q, sg.b))
        throw internal_error("left extra closed form disagrees with simulation");
      rep.extras.push_back({sg.kind, q, sg.a, sg.b, extra});
      rep.extra_sum += extra;
    }
  }
  if (rep.total != rep.lb + rep.extra_sum)
    throw internal_error("cost identity violated: total != LB + extras");
  rep.e1 = e1_aggregate(lay);
  rep.e2 = e2_aggregate(lay);
  rep.ratio = Rational(rep.total, rep.lb ? rep.lb : 1);
  rep.gap = Rational(rep.total - rep.lb, rep.lb ? rep.lb : 1);
  return rep;
}

// Worst-case approximation ratio of the construction: 1 + 3/n - 6/(n(n-2)).
inline Rational approx_ratio_bound(int n) {
  return Rational(1) + Rational(3, n) - Rational(6, (std::int64_t)n * (n - 2));
}

}  // namespace ttp2

#endif  // TTP2_COST_HPP
