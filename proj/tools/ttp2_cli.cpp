// Command-line toolkit: construct TTP-2 schedules, validate them, compute
// independent lower bounds, generate instances, and run benchmark tables.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ttp2/solve.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

ttp2::DistanceMatrix load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ttp2::parse_error("cannot open '" + path + "'");
  return ttp2::parse_instance(in);
}

std::string pct(const ttp2::Rational& r) { return (r * ttp2::Rational(100)).to_decimal(2); }

void print_report_human(std::ostream& os, const ttp2::Solution& sol, int n) {
  os << "teams:           " << n << "\n";
  os << "lower bound:     " << sol.report.lb << "\n";
  if (sol.cost_before_ls)
    os << "before swapping: " << *sol.cost_before_ls << "\n";
  os << "total distance:  " << sol.report.total << "\n";
  os << "gap:             " << pct(sol.report.gap) << "%\n";
  os << "ratio:           " << sol.report.ratio.to_decimal(4) << "\n";
  if (n >= 8) {
    bool ok = sol.report.ratio <= ttp2::approx_ratio_bound(n);
    os << "ratio bound:     " << ttp2::approx_ratio_bound(n).to_decimal(4)
       << (ok ? " (satisfied)" : " (VIOLATED)") << "\n";
  }
}

json report_to_json(const ttp2::Solution& sol, int n) {
  json j;
  j["n"] = n;
  j["lower_bound"] = sol.report.lb;
  j["total"] = sol.report.total;
  if (sol.cost_before_ls) j["before_swapping"] = *sol.cost_before_ls;
  j["gap_percent"] = pct(sol.report.gap);
  j["ratio"] = sol.report.ratio.to_decimal(4);
  j["e1"] = sol.report.e1;
  j["e2"] = sol.report.e2;
  auto& ex = j["extras"] = json::array();
  for (const auto& b : sol.report.extras) {
    const char* kind = b.kind == ttp2::SuperGameKind::Normal  ? "normal"
                       : b.kind == ttp2::SuperGameKind::Left ? "left"
                                                             : "last";
    ex.push_back({{"slot", b.slot}, {"kind", kind}, {"a", b.a}, {"b", b.b},
                  {"extra", b.extra}});
  }
  return j;
}

int cmd_solve(const std::string& path, bool no_local_search, const std::string& out_dir,
              const std::string& format) {
  ttp2::DistanceMatrix dm;
  try {
    dm = load_instance(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (dm.n() != 4 && (dm.n() < 8 || dm.n() % 4 != 0)) {
    std::cerr << "error: this construction supports n = 4 or n = 0 (mod 4), n >= 8; "
              << "got n = " << dm.n() << "\n";
    return kExitInputError;
  }
  if (dm.metric_warning)
    std::cerr << "warning: triangle inequality violated; the approximation guarantee "
                 "does not apply\n";
  ttp2::Solution sol = ttp2::solve(dm, !no_local_search);
  if (!ttp2::validate_schedule(sol.schedule).empty()) {
    std::cerr << "error: produced schedule failed validation\n";
    return kExitInfeasible;
  }
  fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  std::string stem = fs::path(path).stem().string();
  {
    std::ofstream t(dir / (stem + "_schedule.txt"));
    ttp2::encode_schedule(sol.schedule, t);
  }
  {
    std::ofstream m(dir / (stem + "_schedule.json"));
    m << ttp2::schedule_to_json(sol.schedule).dump(2) << "\n";
  }
  if (format == "structured") {
    std::cout << report_to_json(sol, dm.n()).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "instance,n,lb,before,after,gap_percent,ratio\n";
    std::cout << stem << ',' << dm.n() << ',' << sol.report.lb << ','
              << (sol.cost_before_ls ? std::to_string(*sol.cost_before_ls) : "")
              << ',' << sol.report.total << ',' << pct(sol.report.gap) << ','
              << sol.report.ratio.to_decimal(4) << "\n";
  } else {
    print_report_human(std::cout, sol, dm.n());
  }
  return kExitOk;
}

int cmd_validate(const std::string& path) {
  ttp2::Schedule s{0};
  try {
    std::ifstream in(path);
    if (!in) throw ttp2::parse_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto nonspace = text.find_first_not_of(" \t\r\n");
    if (nonspace != std::string::npos && text[nonspace] == '{')
      s = ttp2::schedule_from_json(json::parse(text));
    else
      s = ttp2::decode_schedule(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  auto viol = ttp2::validate_schedule(s);
  if (viol.empty()) {
    std::cout << "feasible (" << s.n << " teams, " << s.days() << " days)\n";
    return kExitOk;
  }
  for (const auto& v : viol)
    std::cout << ttp2::to_string(v.kind) << ": " << v.detail << "\n";
  std::cout << viol.size() << " violation(s)\n";
  return kExitInfeasible;
}

int cmd_lowerbound(const std::string& path, const std::string& format) {
  ttp2::DistanceMatrix dm;
  try {
    dm = load_instance(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  ttp2::LowerBound lb = ttp2::independent_lower_bound(dm);
  if (format == "csv") {
    std::cout << "team,lb\n";
    for (int i = 0; i < dm.n(); ++i) std::cout << i + 1 << ',' << lb.per_team[i] << "\n";
    std::cout << "total," << lb.lb << "\n";
  } else {
    std::cout << "independent lower bound: " << lb.lb << "\n";
    for (int i = 0; i < dm.n(); ++i)
      std::cout << "  t" << i + 1 << ": " << lb.per_team[i] << "\n";
  }
  return kExitOk;
}

int cmd_gen(const std::string& kind, int n, unsigned long long seed,
            const std::string& out) {
  ttp2::DistanceMatrix dm;
  try {
    if (kind == "worstcase")
      dm = ttp2::gen_worst_case(n);
    else if (kind == "random")
      dm = ttp2::gen_random_metric(n, seed);
    else {
      std::cerr << "error: unknown kind '" << kind << "' (use worstcase|random)\n";
      return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (out.empty()) {
    ttp2::serialize_instance(dm, std::cout);
  } else {
    std::ofstream o(out);
    ttp2::serialize_instance(dm, o);
  }
  return kExitOk;
}

int cmd_bench(const std::string& dir, const std::string& format) {
  std::vector<fs::path> files;
  try {
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file()) files.push_back(e.path());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::sort(files.begin(), files.end());
  bool csv = format == "csv";
  if (csv)
    std::cout << "instance,ilb,before,after,gap_percent,runtime_s\n";
  else
    std::cout << "instance        ILB        before     after      gap%    time(s)\n";
  for (const auto& f : files) {
    std::string name = f.stem().string();
    try {
      ttp2::DistanceMatrix dm = load_instance(f.string());
      if (dm.n() != 4 && (dm.n() < 8 || dm.n() % 4 != 0))
        throw ttp2::unsupported_size_error("n = " + std::to_string(dm.n()) +
                                           " not supported (need n = 0 mod 4)");
      auto t0 = std::chrono::steady_clock::now();
      ttp2::Solution sol = ttp2::solve(dm, true);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
      char tbuf[32];
      std::snprintf(tbuf, sizeof tbuf, "%.3f", secs);
      std::string before =
          sol.cost_before_ls ? std::to_string(*sol.cost_before_ls) : "-";
      if (csv) {
        std::cout << name << ',' << sol.report.lb << ',' << before << ','
                  << sol.report.total << ',' << pct(sol.report.gap) << ',' << tbuf
                  << "\n";
      } else {
        std::printf("%-15s %-10lld %-10s %-10lld %-7s %s\n", name.c_str(),
                    (long long)sol.report.lb, before.c_str(),
                    (long long)sol.report.total, pct(sol.report.gap).c_str(), tbuf);
      }
    } catch (const std::exception& e) {
      if (csv)
        std::cout << name << ",error: " << e.what() << ",,,,\n";
      else
        std::printf("%-15s error: %s\n", name.c_str(), e.what());
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TTP-2 schedule construction toolkit"};
  app.require_subcommand(1);

  std::string path, out_dir, out_file, format = "human", kind;
  bool no_ls = false;
  int n = 0;
  unsigned long long seed = 0;

  auto* solve = app.add_subcommand("solve", "construct a schedule for an instance");
  solve->add_option("instance", path, "instance file")->required();
  solve->add_flag("--no-local-search", no_ls, "report the construction result only");
  solve->add_option("--out", out_dir, "output directory for schedule files");
  solve->add_option("--format", format, "human|csv|structured")
      ->check(CLI::IsMember({"human", "csv", "structured"}));

  auto* validate = app.add_subcommand("validate", "check a schedule for feasibility");
  validate->add_option("schedule", path, "schedule file (text or structured)")
      ->required();

  auto* lower = app.add_subcommand("lowerbound", "independent lower bound");
  lower->add_option("instance", path, "instance file")->required();
  lower->add_option("--format", format, "human|csv")
      ->check(CLI::IsMember({"human", "csv"}));

  auto* bench = app.add_subcommand("bench", "solve every instance in a directory");
  bench->add_option("dir", path, "directory of instance files")->required();
  bench->add_option("--format", format, "human|csv")
      ->check(CLI::IsMember({"human", "csv"}));

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("kind", kind, "worstcase|random")->required();
  gen->add_option("n", n, "team count")->required();
  gen->add_option("seed", seed, "random seed (random kind)");
  gen->add_option("--out", out_file, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInputError : kExitOk;
  }

  if (solve->parsed()) return cmd_solve(path, no_ls, out_dir, format);
  if (validate->parsed()) return cmd_validate(path);
  if (lower->parsed()) return cmd_lowerbound(path, format);
  if (bench->parsed()) return cmd_bench(path, format);
  if (gen->parsed()) return cmd_gen(kind, n, seed, out_file);
  return kExitInputError;
}
