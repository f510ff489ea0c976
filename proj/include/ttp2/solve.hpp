#ifndef TTP2_SOLVE_HPP
#define TTP2_SOLVE_HPP

#include <optional>

#include "ttp2/cost.hpp"
#include "ttp2/expander.hpp"
#include "ttp2/localsearch.hpp"

namespace ttp2 {

struct Solution {
  Schedule schedule{0};
  std::optional<SuperLayout> layout;
  std::optional<SuperTimetable> timetable;
  CostReport report;                    // final schedule
  std::optional<Dist> cost_before_ls;   // construction cost, when LS ran
};

// End-to-end solve: construction, then (optionally) the local search.
// n = 4 is handled by exhaustive search and reports no block breakdown.
inline Solution solve(const DistanceMatrix& dm, bool local_search = true) {
  Solution sol;
  if (dm.n() == 4) {
    sol.schedule = solve_n4(dm);
    LowerBound lb = independent_lower_bound(dm);
    sol.report.lb = lb.lb;
    sol.report.per_team_lb = std::move(lb.per_team);
    sol.report.total = itinerary_cost(sol.schedule, dm).total;
    sol.report.extra_sum = sol.report.total - sol.report.lb;
    sol.report.ratio = Rational(sol.report.total, sol.report.lb ? sol.report.lb : 1);
    sol.report.gap =
        Rational(sol.report.total - sol.report.lb, sol.report.lb ? sol.report.lb : 1);
    return sol;
  }
  ConstructionResult cr = build_schedule(dm);
  SearchState st(std::move(cr.layout), std::move(cr.timetable));
  if (local_search) {
    sol.cost_before_ls = itinerary_cost(cr.schedule, dm).total;
    improve(st, dm);
  }
  sol.schedule = st.expand();
  sol.report = extra_cost_accounting(sol.schedule, st.layout, st.timetable, dm);
  sol.layout = std::move(st.layout);
  sol.timetable = std::move(st.timetable);
  return sol;
}

}  // namespace ttp2

#endif  // TTP2_SOLVE_HPP
