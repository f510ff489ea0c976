#include <catch2/catch_amalgamated.hpp>

#include "reference_grid_fixture.hpp"
#include "ttp2/cost.hpp"
#include "ttp2/expander.hpp"

using namespace ttp2;

TEST_CASE("zero metric makes any schedule free") {
  Schedule s = decode_schedule(kReferenceGridText);
  DistanceMatrix zeros(8, 0);
  CHECK(itinerary_cost(s, zeros).total == 0);
}

TEST_CASE("worst-case n=8 totals") {
  DistanceMatrix dm = gen_worst_case(8);
  ConstructionResult cr = build_schedule(dm);
  CHECK(itinerary_cost(cr.schedule, dm).total == 60);
  // the reference grid with identity pairing has the same block structure
  Schedule ref = decode_schedule(kReferenceGridText);
  CHECK(itinerary_cost(ref, dm).total == 60);
}

TEST_CASE("independent lower bound on the worst-case family") {
  for (int n : {8, 12, 16, 24, 40}) {
    LowerBound lb = independent_lower_bound(gen_worst_case(n));
    CHECK(lb.lb == (Dist)n * (n - 2));
  }
}

TEST_CASE("per-team lower bounds sum to LB") {
  DistanceMatrix dm = gen_random_metric(12, 8);
  LowerBound lb = independent_lower_bound(dm);
  Dist sum = 0;
  for (Dist v : lb.per_team) sum += v;
  CHECK(sum == lb.lb);
  CHECK(lb.lb == 2 * dm.total_edge_weight() + dm.n() * lb.matching.weight);
}

TEST_CASE("optimal itinerary trips and costs") {
  DistanceMatrix dm = gen_worst_case(8);
  SuperLayout lay = make_identity_layout(dm);
  auto trips = optimal_itinerary(0, lay);  // team t1
  REQUIRE(trips.size() == 4);
  CHECK(trips[0] == std::vector<int>{1});
  Dist total = 0;
  for (const auto& t : trips) total += trip_cost(0, t, dm);
  CHECK(total == 6);  // 0 + 2 + 2 + 2 = LB_1
  CHECK(total == independent_lower_bound(dm).per_team[0]);

  // sum over all teams equals LB
  Dist all = 0;
  for (int i = 0; i < 8; ++i)
    for (const auto& t : optimal_itinerary(i, lay)) all += trip_cost(i, t, dm);
  CHECK(all == 48);

  // smallest case: n=4 identity pairs
  DistanceMatrix d4 = gen_worst_case(4);
  auto t4 = optimal_itinerary(0, make_identity_layout(d4));
  REQUIRE(t4.size() == 2);
  CHECK(t4[0] == std::vector<int>{1});
  CHECK(t4[1] == std::vector<int>{2, 3});
}

TEST_CASE("exact cost identity and aggregates") {
  for (std::uint64_t seed : {1, 9, 17}) {
    for (int n : {8, 12, 16}) {
      DistanceMatrix dm = gen_random_metric(n, seed);
      ConstructionResult cr = build_schedule(dm);
      // extra_cost_accounting throws internal_error if the identity fails
      CostReport rep = extra_cost_accounting(cr.schedule, cr.layout, cr.timetable, dm);
      CHECK(rep.total == rep.lb + rep.extra_sum);
      CHECK(rep.e2 == e2_aggregate(cr.layout));

      // aggregate-extra bounds and the overall ratio bound, all exact arithmetic
      int m = n / 2;
      Dist dh = total_super_weight(cr.layout);
      // e1 * m(m-2) <= 2(m-3)(D_H - D_MH)
      CHECK((__int128)rep.e1 * m * (m - 2) <= (__int128)2 * (m - 3) * (dh - rep.e2));
      Rational bound = approx_ratio_bound(n);
      CHECK(rep.ratio <= bound);
      // e1 + e2 <= (3/n - 6/(n(n-2))) * lb
      Rational slack = bound - Rational(1);
      CHECK(Rational(rep.e1 + rep.e2) <= slack * Rational(rep.lb));
    }
  }
}

TEST_CASE("any feasible schedule is within 2x of LB on metric instances") {
  DistanceMatrix dm = gen_random_metric(8, 3);
  LowerBound lb = independent_lower_bound(dm);
  ConstructionResult cr = build_schedule(dm);
  CHECK(itinerary_cost(cr.schedule, dm).total <= 2 * lb.lb);
  // a mutated-but-feasible schedule: relabel two teams throughout
  Schedule s = cr.schedule;
  for (int d = 0; d < s.days(); ++d) {
    std::swap(s.grid[0][d], s.grid[1][d]);
    for (int t = 0; t < s.n; ++t) {
      if (s.grid[t][d].opponent == 0)
        s.grid[t][d].opponent = 1;
      else if (s.grid[t][d].opponent == 1)
        s.grid[t][d].opponent = 0;
    }
  }
  REQUIRE(validate_schedule(s).empty());
  CHECK(itinerary_cost(s, dm).total <= 2 * lb.lb);
}

TEST_CASE("ratio formatting is exact-rational based") {
  CHECK(Rational(60, 48).to_decimal(4) == "1.2500");
  CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
  CHECK((Rational(60 - 48, 48) * Rational(100)).to_decimal(2) == "25.00");
  CHECK(approx_ratio_bound(8) == Rational(60, 48));
}
