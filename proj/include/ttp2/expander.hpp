#ifndef TTP2_EXPANDER_HPP
#define TTP2_EXPANDER_HPP

#include <array>
#include <vector>

#include "ttp2/cost.hpp"
#include "ttp2/errors.hpp"
#include "ttp2/instance.hpp"
#include "ttp2/schedule.hpp"
#include "ttp2/superplan.hpp"

namespace ttp2 {

using TeamPair = std::array<int, 2>;

// Normal super-game: 8 games on days d..d+3 (0-based). The host-first side
// A plays HHAA, B plays AAHH. Zero extra travel for all four teams.
inline void expand_normal(Schedule& s, const TeamPair& A, const TeamPair& B, int d) {
  auto [a1, a2] = A;
  auto [b1, b2] = B;
  s.set_game(d, a1, b1);
  s.set_game(d, a2, b2);
  s.set_game(d + 1, a1, b2);
  s.set_game(d + 1, a2, b1);
  s.set_game(d + 2, b1, a1);
  s.set_game(d + 2, b2, a2);
  s.set_game(d + 3, b2, a1);
  s.set_game(d + 3, b1, a2);
}

// Left super-game of u_m against C in slot q: u_m plays HAAH when q is
// even, AHHA when q is odd.
inline void expand_left(Schedule& s, const TeamPair& Mpair, const TeamPair& C, int d,
                        int q) {
  auto [m1, m2] = Mpair;
  auto [c1, c2] = C;
  if (q % 2 != 0) {
    std::swap(m1, c1);
    std::swap(m2, c2);
  }
  s.set_game(d, m1, c1);
  s.set_game(d, m2, c2);
  s.set_game(d + 1, c2, m1);
  s.set_game(d + 1, c1, m2);
  s.set_game(d + 2, c1, m1);
  s.set_game(d + 2, c2, m2);
  s.set_game(d + 3, m1, c2);
  s.set_game(d + 3, m2, c1);
}

// Last super-game: 12 games on days d..d+5, including the intra-pair games
// of both sides. The a-side hosts day 1.
inline void expand_last(Schedule& s, const TeamPair& A, const TeamPair& B, int d) {
  auto [a1, a2] = A;
  auto [b1, b2] = B;
  s.set_game(d, a1, b1);
  s.set_game(d, a2, b2);
  s.set_game(d + 1, a2, a1);
  s.set_game(d + 1, b2, b1);
  s.set_game(d + 2, a1, b2);
  s.set_game(d + 2, b1, a2);
  s.set_game(d + 3, b1, a1);
  s.set_game(d + 3, b2, a2);
  s.set_game(d + 4, b2, a1);
  s.set_game(d + 4, a2, b1);
  s.set_game(d + 5, a1, a2);
  s.set_game(d + 5, b1, b2);
}

// Optional per-label reversal of the team order inside a super-team,
// applied to last super-games only (the local search toggles these).
using PairFlips = std::vector<bool>;  // by label, 0-based; empty = none

inline TeamPair oriented_pair(const SuperLayout& lay, int label, const PairFlips& flips,
                              bool is_last) {
  TeamPair p = lay.pair(label);
  if (is_last && !flips.empty() && flips[label - 1]) std::swap(p[0], p[1]);
  return p;
}

inline Schedule expand_schedule(const SuperLayout& lay, const SuperTimetable& tt,
                                const PairFlips& flips = {}) {
  Schedule s(lay.m * 2);
  for (int q = 1; q <= tt.m - 1; ++q) {
    int d = (q - 1) * 4;
    for (const SuperGame& sg : tt.slots[q - 1]) {
      switch (sg.kind) {
        case SuperGameKind::Normal:
          expand_normal(s, lay.pair(sg.a), lay.pair(sg.b), d);
          break;
        case SuperGameKind::Left:
          expand_left(s, lay.pair(sg.a), lay.pair(sg.b), d, q);
          break;
        case SuperGameKind::Last:
          expand_last(s, oriented_pair(lay, sg.a, flips, true),
                      oriented_pair(lay, sg.b, flips, true), d);
          break;
      }
    }
  }
  return s;
}

struct ConstructionResult {
  Schedule schedule;
  SuperLayout layout;
  SuperTimetable timetable;
};

// Full pipeline: minimum matching -> labeling -> timetable -> expansion.
inline ConstructionResult build_schedule(const DistanceMatrix& dm) {
  SuperLayout lay = build_layout(dm);
  SuperTimetable tt = build_timetable(lay.m);
  return {expand_schedule(lay, tt), std::move(lay), std::move(tt)};
}

// n=4 has no super-team construction; the feasible space is tiny, so take
// the cheapest feasible double round-robin by exhaustive day-by-day search.
inline Schedule solve_n4(const DistanceMatrix& dm) {
  if (dm.n() != 4) throw unsupported_size_error("solve_n4 requires n = 4");
  // All 12 day options: 3 pairings x 2 venues x 2 venues.
  static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  struct DayOption {
    int home[2], away[2];
  };
  std::vector<DayOption> opts;
  for (const auto& p : pairings)
    for (int v0 = 0; v0 < 2; ++v0)
      for (int v1 = 0; v1 < 2; ++v1) {
        DayOption o;
        o.home[0] = v0 ? p[1] : p[0];
        o.away[0] = v0 ? p[0] : p[1];
        o.home[1] = v1 ? p[3] : p[2];
        o.away[1] = v1 ? p[2] : p[3];
        opts.push_back(o);
      }
  Schedule best(4), cur(4);
  Dist best_cost = -1;
  bool used[4][4] = {};  // used[h][a]: h hosted a already
  auto rec = [&](auto&& self, int day) -> void {
    if (day == 6) {
      Dist c = itinerary_cost(cur, dm).total;
      if (best_cost < 0 || c < best_cost) {
        best_cost = c;
        best = cur;
      }
      return;
    }
    for (const DayOption& o : opts) {
      bool ok = true;
      for (int g = 0; g < 2 && ok; ++g) {
        if (used[o.home[g]][o.away[g]]) ok = false;
        // no-repeat
        if (ok && day > 0 && cur.grid[o.home[g]][day - 1].opponent == o.away[g])
          ok = false;
      }
      if (!ok) continue;
      // streaks
      for (int g = 0; g < 2 && ok; ++g)
        for (int t : {o.home[g], o.away[g]}) {
          Venue v = (t == o.home[g]) ? Venue::Home : Venue::Away;
          if (day >= 2 && cur.grid[t][day - 1].venue == v &&
              cur.grid[t][day - 2].venue == v)
            ok = false;
        }
      if (!ok) continue;
      for (int g = 0; g < 2; ++g) {
        used[o.home[g]][o.away[g]] = true;
        cur.set_game(day, o.home[g], o.away[g]);
      }
      self(self, day + 1);
      for (int g = 0; g < 2; ++g) used[o.home[g]][o.away[g]] = false;
    }
  };
  rec(rec, 0);
  if (best_cost < 0) throw internal_error("n=4 search found no feasible schedule");
  return best;
}

}  // namespace ttp2

#endif  // TTP2_EXPANDER_HPP
