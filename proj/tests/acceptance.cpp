// Acceptance suite: one pass/fail line per criterion. Criteria that need
// the 17 third-party benchmark files are skipped (with a notice) when no
// instance directory is available; point TTP2_BENCH_DIR at one to run them.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reference_grid_fixture.hpp"
#include "ttp2/solve.hpp"

using namespace ttp2;
namespace fs = std::filesystem;

#ifndef TTP2_SOURCE_DIR
#define TTP2_SOURCE_DIR "."
#endif

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

void skip(int criterion, const std::string& what, const std::string& why) {
  std::cout << "SKIP criterion " << criterion << ": " << what << " [" << why << "]\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// |x - ref| <= 1% of ref, exact integer arithmetic.
bool within_one_percent(Dist x, Dist ref) {
  Dist diff = x > ref ? x - ref : ref - x;
  return 100 * diff <= ref;
}

struct BenchExpect {
  std::string name;
  Dist ilb, previous, before, after;
  fs::path file;
};

std::vector<BenchExpect> load_manifest() {
  std::ifstream in(fs::path(TTP2_SOURCE_DIR) / "data" / "benchmark_manifest.json");
  nlohmann::json j;
  in >> j;
  std::vector<BenchExpect> out;
  for (const auto& e : j.at("instances"))
    out.push_back({e.at("name").get<std::string>(), e.at("ilb").get<Dist>(),
                   e.at("previous").get<Dist>(), e.at("before_swapping").get<Dist>(),
                   e.at("after_swapping").get<Dist>(), {}});
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

}  // namespace

int main() {
  // 1. Golden schedule
  {
    SuperLayout lay = make_identity_layout(gen_worst_case(8));
    Schedule s = expand_schedule(lay, build_timetable(4));
    report(1, encode_schedule(s) == kReferenceGridText,
           "identity-layout n=8 grid equals the published reference grid");
  }

  // 2/4/5/10 share the random-instance sweep.
  {
    bool feasible = true, bound_ok = true, identity_ok = true, two_approx = true;
    auto t0 = std::chrono::steady_clock::now();
    double build_secs = 0;
    std::vector<ConstructionResult> kept;
    std::vector<DistanceMatrix> kept_dm;
    for (int n = 8; n <= 40; n += 4) {
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        DistanceMatrix dm = gen_random_metric(n, seed);
        auto b0 = std::chrono::steady_clock::now();
        ConstructionResult cr = build_schedule(dm);
        if (!validate_schedule(cr.schedule).empty()) feasible = false;
        build_secs += seconds_since(b0);
        try {
          CostReport rep =
              extra_cost_accounting(cr.schedule, cr.layout, cr.timetable, dm);
          if (!(rep.ratio <= approx_ratio_bound(n))) bound_ok = false;
          if (rep.total != rep.lb + rep.extra_sum) identity_ok = false;
          if (rep.total > 2 * rep.lb) two_approx = false;
          if (seed == 1) {
            kept.push_back(std::move(cr));
            kept_dm.push_back(std::move(dm));
          }
        } catch (const internal_error& e) {
          identity_ok = false;
        }
      }
    }
    (void)seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "construction+validation %.2fs", build_secs);
    report(2, feasible && build_secs < 10.0,
           "zero violations on 25 random metric instances per n in {8..40}", buf);
    report(4, bound_ok, "total <= (1 + 3/n - 6/(n(n-2))) * LB on every instance");

    // local-search runs count toward criteria 5 and 10, with intermediate
    // states sampled via explicit label swaps.
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const DistanceMatrix& dm = kept_dm[i];
      SearchState st(kept[i].layout, kept[i].timetable);
      LowerBound lb = independent_lower_bound(dm);
      auto check_state = [&](const SearchState& s) {
        Schedule sch = s.expand();
        if (!validate_schedule(sch).empty()) feasible = false;
        Dist c = itinerary_cost(sch, dm).total;
        if (c > 2 * lb.lb) two_approx = false;
      };
      check_state(st);
      // sampled intermediates: individual label swaps are exactly the
      // states the first move scans
      for (auto [a, b] : {std::pair{1, 2}, {2, st.layout.m}, {1, st.layout.m - 1}}) {
        SearchState tmp = st;
        detail::swap_labels(tmp.layout, tmp.flips, a, b);
        check_state(tmp);
      }
      improve(st, dm);
      check_state(st);
      try {
        CostReport rep = extra_cost_accounting(st.expand(), st.layout, st.timetable, dm);
        if (rep.total != rep.lb + rep.extra_sum) identity_ok = false;
      } catch (const internal_error&) {
        identity_ok = false;
      }
    }
    report(5, identity_ok, "total = LB + sum of block extras, exact, on every solve");
    report(10, two_approx,
           "cost <= 2*LB for all produced schedules incl. sampled intermediates");
  }

  // 3. Worst-case family, exact equalities
  {
    bool ok = true;
    for (int n = 8; n <= 40; n += 4) {
      DistanceMatrix dm = gen_worst_case(n);
      ConstructionResult cr = build_schedule(dm);
      CostReport rep = extra_cost_accounting(cr.schedule, cr.layout, cr.timetable, dm);
      Dist expect_lb = (Dist)n * (n - 2);
      Dist expect_total = expect_lb + 3 * n - 12;
      if (rep.lb != expect_lb || rep.total != expect_total) ok = false;
      if (!(rep.ratio == approx_ratio_bound(n))) ok = false;
    }
    report(3, ok, "worst-case family: cost = n(n-2)+3n-12, LB = n(n-2), exact ratio");
  }

  // 6. Matching oracle
  {
    std::mt19937_64 rng(20260826);
    bool ok = true;
    for (int iter = 0; iter < 200; ++iter) {
      int k = 4 + 2 * (int)(rng() % 4);
      Dist maxw = iter % 3 == 0 ? 5 : 1000;
      std::vector<std::vector<Dist>> w(k, std::vector<Dist>(k, 0));
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) w[i][j] = w[j][i] = (Dist)(rng() % (maxw + 1));
      if (min_perfect_matching(w).weight != brute_force_matching(w).weight) ok = false;
    }
    report(6, ok, "matching weight equals brute-force enumeration on 200 tables");
  }

  // 7/8/9. Benchmark reproduction, if instance files are available.
  {
    const char* env = std::getenv("TTP2_BENCH_DIR");
    fs::path dir = env ? fs::path(env)
                       : fs::path(TTP2_SOURCE_DIR) / "data" / "instances";
    std::vector<BenchExpect> expects = load_manifest();
    std::size_t found = 0;
    if (fs::is_directory(dir)) {
      for (auto& e : expects)
        for (const auto& f : fs::directory_iterator(dir))
          if (f.is_regular_file() && lower(f.path().stem().string()) == lower(e.name)) {
            e.file = f.path();
            ++found;
            break;
          }
    }
    if (found != expects.size()) {
      std::string why = "benchmark files not provided (" + std::to_string(found) + "/" +
                        std::to_string(expects.size()) + " found in " + dir.string() +
                        "; set TTP2_BENCH_DIR)";
      skip(7, "computed ILB equals the published values for all 17 instances", why);
      skip(8, "benchmark quality within 1% of published, beats previous results", why);
      skip(9, "all 17 benchmark instances solved in under 60 s", why);
    } else {
      bool ilb_ok = true, quality_ok = true;
      auto t0 = std::chrono::steady_clock::now();
      for (const auto& e : expects) {
        std::ifstream in(e.file);
        DistanceMatrix dm = parse_instance(in);
        Solution sol = solve(dm, true);
        if (sol.report.lb != e.ilb) {
          ilb_ok = false;
          std::cout << "  " << e.name << ": ILB " << sol.report.lb << " expected "
                    << e.ilb << "\n";
        }
        Dist before = *sol.cost_before_ls;
        Dist after = sol.report.total;
        if (after > e.previous || !within_one_percent(after, e.after) ||
            !within_one_percent(before, e.before)) {
          quality_ok = false;
          std::cout << "  " << e.name << ": before " << before << " (ref " << e.before
                    << ") after " << after << " (ref " << e.after << ", previous "
                    << e.previous << ")\n";
        }
      }
      double secs = seconds_since(t0);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2fs", secs);
      report(7, ilb_ok, "computed ILB equals the published values for all 17 instances");
      report(8, quality_ok,
             "benchmark quality within 1% of published, beats previous results");
      report(9, secs < 60.0, "all 17 benchmark instances solved in under 60 s", buf);
    }
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all run criteria passed\n";
  return 0;
}
