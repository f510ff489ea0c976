#ifndef TTP2_LOCALSEARCH_HPP
#define TTP2_LOCALSEARCH_HPP

#include <utility>
#include <vector>

#include "ttp2/cost.hpp"
#include "ttp2/expander.hpp"
#include "ttp2/superplan.hpp"

namespace ttp2 {

// Mutable solver state for the two improvement moves. Only the labeling
// (which super-team sits at which label) and the per-label team orders for
// last super-games change; the timetable is fixed by m.
struct SearchState {
  SuperLayout layout;
  SuperTimetable timetable;
  PairFlips flips;  // last-game team-order reversals, by label

  explicit SearchState(SuperLayout lay, SuperTimetable tt)
      : layout(std::move(lay)), timetable(std::move(tt)),
        flips(layout.m, false) {}

  Schedule expand() const { return expand_schedule(layout, timetable, flips); }
};

namespace detail {

inline void swap_labels(SuperLayout& lay, PairFlips& flips, int i, int j) {
  std::swap(lay.teams[i - 1], lay.teams[j - 1]);
  std::swap(lay.pair_weight[i - 1], lay.pair_weight[j - 1]);
  std::swap(flips[i - 1], flips[j - 1]);
  for (auto& row : lay.superdist) std::swap(row[i - 1], row[j - 1]);
  std::swap(lay.superdist[i - 1], lay.superdist[j - 1]);
}

// Total extra cost of the state via the closed forms (normal blocks are 0).
inline Dist state_extras(const SearchState& st, const DistanceMatrix& dm) {
  const SuperLayout& lay = st.layout;
  Dist sum = 0;
  for (int q = 2; q <= lay.m - 2; ++q) sum += left_extra_closed_form(lay, q, lay.m - q);
  for (const SuperGame& sg : st.timetable.slots[lay.m - 2])
    sum += last_extra_closed_form(dm, oriented_pair(lay, sg.a, st.flips, true),
                                  oriented_pair(lay, sg.b, st.flips, true));
  return sum;
}

}  // namespace detail

// First-improvement scan over all label pairs (i, j) in lexicographic
// order; an accepted swap restarts the scan. Terminates at a local optimum.
inline void swap_super_teams(SearchState& st, const DistanceMatrix& dm) {
  Dist cur = detail::state_extras(st, dm);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 1; i <= st.layout.m && !improved; ++i)
      for (int j = i + 1; j <= st.layout.m && !improved; ++j) {
        detail::swap_labels(st.layout, st.flips, i, j);
        Dist cand = detail::state_extras(st, dm);
        if (cand < cur) {
          cur = cand;
          improved = true;
        } else {
          detail::swap_labels(st.layout, st.flips, i, j);
        }
      }
  }
}

// For each last super-game independently, evaluate the four intra-pair
// orderings and keep the cheapest; ties keep the current order. Normal and
// left blocks are unaffected by these flips.
inline void swap_within_pairs(SearchState& st, const DistanceMatrix& dm) {
  for (const SuperGame& sg : st.timetable.slots[st.layout.m - 2]) {
    bool a0 = st.flips[sg.a - 1], b0 = st.flips[sg.b - 1];
    bool best_a = a0, best_b = b0;
    Dist best = 0;
    bool first = true;
    for (auto [fa, fb] : {std::pair{a0, b0}, {a0, !b0}, {!a0, b0}, {!a0, !b0}}) {
      st.flips[sg.a - 1] = fa;
      st.flips[sg.b - 1] = fb;
      Dist c = last_extra_closed_form(dm, oriented_pair(st.layout, sg.a, st.flips, true),
                                      oriented_pair(st.layout, sg.b, st.flips, true));
      if (first || c < best) {
        first = false;
        best = c;
        best_a = fa;
        best_b = fb;
      }
    }
    st.flips[sg.a - 1] = best_a;
    st.flips[sg.b - 1] = best_b;
  }
}

// The composed heuristic: super-team swaps to a fixpoint, then the
// independent per-last-game orderings.
inline void improve(SearchState& st, const DistanceMatrix& dm) {
  swap_super_teams(st, dm);
  swap_within_pairs(st, dm);
}

}  // namespace ttp2

#endif  // TTP2_LOCALSEARCH_HPP
