#ifndef TTP2_SCHEDULE_HPP
#define TTP2_SCHEDULE_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttp2/errors.hpp"

namespace ttp2 {

enum class Venue { Home, Away };

struct Game {
  int opponent = -1;  // 0-based
  Venue venue = Venue::Home;
  bool operator==(const Game&) const = default;
};

// Per-team, per-day grid over 2(n-1) days. grid[i][d] is team i's game on
// day d (both 0-based).
struct Schedule {
  int n = 0;
  std::vector<std::vector<Game>> grid;

  explicit Schedule(int teams = 0)
      : n(teams), grid(teams, std::vector<Game>(teams ? 2 * (teams - 1) : 0)) {}

  int days() const { return n ? 2 * (n - 1) : 0; }

  void set_game(int day, int home, int away) {
    grid[home][day] = Game{away, Venue::Home};
    grid[away][day] = Game{home, Venue::Away};
  }

  bool operator==(const Schedule&) const = default;
};

enum class ViolationKind { GameValue, GameTime, NoRepeat, StreakBound, Structure };

struct Violation {
  ViolationKind kind;
  std::vector<int> teams;  // 0-based teams implicated
  std::vector<int> days;   // 0-based days implicated
  std::string detail;
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::GameValue: return "GameValue";
    case ViolationKind::GameTime: return "GameTime";
    case ViolationKind::NoRepeat: return "NoRepeat";
    case ViolationKind::StreakBound: return "StreakBound";
    case ViolationKind::Structure: return "Structure";
  }
  return "?";
}

// Checks the feasibility properties: fixed-game-value, fixed-game-time,
// no-repeat, bounded-by-2 streaks, plus grid structure (involution).
// Reports all violations, not just the first.
inline std::vector<Violation> validate_schedule(const Schedule& s) {
  std::vector<Violation> out;
  int n = s.n;
  int days = s.days();

  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < days; ++d) {
      const Game& g = s.grid[i][d];
      if (g.opponent < 0 || g.opponent >= n || g.opponent == i) {
        out.push_back({ViolationKind::GameTime, {i}, {d},
                       "team " + std::to_string(i + 1) + " has no valid game on day " +
                           std::to_string(d + 1)});
        continue;
      }
      const Game& h = s.grid[g.opponent][d];
      if (h.opponent != i || h.venue == g.venue) {
        out.push_back({ViolationKind::Structure, {i, g.opponent}, {d},
                       "day " + std::to_string(d + 1) + ": teams " +
                           std::to_string(i + 1) + " and " +
                           std::to_string(g.opponent + 1) +
                           " disagree about their game"});
      }
    }
  }

  // Fixed-game-value: each ordered pair (host, guest) meets exactly once.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int cnt = 0;
      for (int d = 0; d < days; ++d)
        if (s.grid[i][d].opponent == j && s.grid[i][d].venue == Venue::Home) ++cnt;
      if (cnt != 1)
        out.push_back({ViolationKind::GameValue, {i, j}, {},
                       "team " + std::to_string(i + 1) + " hosts team " +
                           std::to_string(j + 1) + " " + std::to_string(cnt) +
                           " times"});
    }

  // No-repeat: no pair meets on consecutive days.
  for (int i = 0; i < n; ++i)
    for (int d = 0; d + 1 < days; ++d) {
      int o = s.grid[i][d].opponent;
      if (o > i && s.grid[i][d + 1].opponent == o)
        out.push_back({ViolationKind::NoRepeat, {i, o}, {d, d + 1},
                       "teams " + std::to_string(i + 1) + " and " +
                           std::to_string(o + 1) + " meet on days " +
                           std::to_string(d + 1) + " and " + std::to_string(d + 2)});
    }

  // Bounded-by-2: no 3 consecutive games at the same venue.
  for (int i = 0; i < n; ++i)
    for (int d = 0; d + 2 < days; ++d)
      if (s.grid[i][d].venue == s.grid[i][d + 1].venue &&
          s.grid[i][d].venue == s.grid[i][d + 2].venue)
        out.push_back({ViolationKind::StreakBound, {i}, {d, d + 1, d + 2},
                       "team " + std::to_string(i + 1) + " plays 3 consecutive " +
                           (s.grid[i][d].venue == Venue::Home ? "home" : "away") +
                           " games from day " + std::to_string(d + 1)});
  return out;
}

// Human-readable text: one row per team, 2(n-1) signed opponent tokens.
// "+tX" = away at X's venue, "-tX" = home against X.
inline void encode_schedule(const Schedule& s, std::ostream& out) {
  for (int i = 0; i < s.n; ++i) {
    for (int d = 0; d < s.days(); ++d) {
      const Game& g = s.grid[i][d];
      out << (d ? " " : "") << (g.venue == Venue::Away ? '+' : '-') << 't'
          << (g.opponent + 1);
    }
    out << '\n';
  }
}

inline std::string encode_schedule(const Schedule& s) {
  std::ostringstream os;
  encode_schedule(s, os);
  return os.str();
}

inline Schedule decode_schedule(std::istream& in) {
  std::vector<std::vector<std::pair<int, Venue>>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::pair<int, Venue>> row;
    std::string tok;
    while (ls >> tok) {
      if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-') || tok[1] != 't')
        throw parse_error("bad schedule token '" + tok + "'");
      int opp = 0;
      try {
        opp = std::stoi(tok.substr(2));
      } catch (const std::exception&) {
        throw parse_error("bad schedule token '" + tok + "'");
      }
      row.emplace_back(opp - 1, tok[0] == '+' ? Venue::Away : Venue::Home);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  int n = (int)rows.size();
  if (n < 2) throw parse_error("schedule text has fewer than two rows");
  Schedule s(n);
  for (int i = 0; i < n; ++i) {
    if ((int)rows[i].size() != 2 * (n - 1))
      throw parse_error("row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " games, expected " +
                        std::to_string(2 * (n - 1)));
    for (int d = 0; d < 2 * (n - 1); ++d) {
      auto [opp, venue] = rows[i][d];
      if (opp < 0 || opp >= n || opp == i)
        throw parse_error("row " + std::to_string(i + 1) + " day " +
                          std::to_string(d + 1) + ": opponent out of range");
      s.grid[i][d] = Game{opp, venue};
    }
  }
  // The two rows of every game must agree (one +, one -).
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < 2 * (n - 1); ++d) {
      const Game& g = s.grid[i][d];
      const Game& h = s.grid[g.opponent][d];
      if (h.opponent != i || h.venue == g.venue)
        throw parse_error("day " + std::to_string(d + 1) + ": rows " +
                          std::to_string(i + 1) + " and " +
                          std::to_string(g.opponent + 1) + " are sign-inconsistent");
    }
  return s;
}

inline Schedule decode_schedule(const std::string& text) {
  std::istringstream in(text);
  return decode_schedule(in);
}

// Structured machine form.
inline nlohmann::json schedule_to_json(const Schedule& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["days"] = s.days();
  auto& grid = j["grid"] = nlohmann::json::array();
  for (int i = 0; i < s.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int d = 0; d < s.days(); ++d)
      row.push_back({{"opponent", s.grid[i][d].opponent + 1},
                     {"venue", s.grid[i][d].venue == Venue::Home ? "H" : "A"}});
    grid.push_back(std::move(row));
  }
  return j;
}

inline Schedule schedule_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  if (n < 2 || j.at("days").get<int>() != 2 * (n - 1))
    throw parse_error("structured schedule: inconsistent n/days");
  Schedule s(n);
  const auto& grid = j.at("grid");
  if ((int)grid.size() != n) throw parse_error("structured schedule: bad grid height");
  for (int i = 0; i < n; ++i) {
    if ((int)grid[i].size() != s.days())
      throw parse_error("structured schedule: bad grid width");
    for (int d = 0; d < s.days(); ++d) {
      const auto& cell = grid[i][d];
      int opp = cell.at("opponent").get<int>() - 1;
      std::string v = cell.at("venue").get<std::string>();
      if (opp < 0 || opp >= n || opp == i || (v != "H" && v != "A"))
        throw parse_error("structured schedule: bad cell");
      s.grid[i][d] = Game{opp, v == "H" ? Venue::Home : Venue::Away};
    }
  }
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < s.days(); ++d) {
      const Game& g = s.grid[i][d];
      const Game& h = s.grid[g.opponent][d];
      if (h.opponent != i || h.venue == g.venue)
        throw parse_error("structured schedule: venue-inconsistent game on day " +
                          std::to_string(d + 1));
    }
  return s;
}

}  // namespace ttp2

#endif  // TTP2_SCHEDULE_HPP
