#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "reference_grid_fixture.hpp"
#include "ttp2/schedule.hpp"

using namespace ttp2;

namespace {

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  return std::any_of(v.begin(), v.end(), [k](const Violation& x) { return x.kind == k; });
}

}  // namespace

TEST_CASE("published n=8 grid is feasible") {
  Schedule s = decode_schedule(kReferenceGridText);
  REQUIRE(s.n == 8);
  CHECK(validate_schedule(s).empty());
}

TEST_CASE("encode/decode round-trips the reference grid exactly") {
  Schedule s = decode_schedule(kReferenceGridText);
  CHECK(encode_schedule(s) == kReferenceGridText);
  CHECK(decode_schedule(encode_schedule(s)) == s);
}

TEST_CASE("sign convention: +tX decodes to an away game at X") {
  Schedule s = decode_schedule(kReferenceGridText);
  // t1 day 3 is "+t3"
  CHECK(s.grid[0][2].opponent == 2);
  CHECK(s.grid[0][2].venue == Venue::Away);
  // t1 day 1 is "-t3"
  CHECK(s.grid[0][0].venue == Venue::Home);
}

TEST_CASE("consecutive meeting raises NoRepeat") {
  Schedule s = decode_schedule(kReferenceGridText);
  // Move t1/t3's day-3 rematch next to their day-1 game: swap days 2 and 3
  // in both rows (and their day-2 partners' rows), creating t1-t3 on days 1-2.
  for (int t : {0, 1, 2, 3}) std::swap(s.grid[t][1], s.grid[t][2]);
  auto v = validate_schedule(s);
  REQUIRE_FALSE(v.empty());
  CHECK(has_kind(v, ViolationKind::NoRepeat));
}

TEST_CASE("venue flip raises StreakBound plus GameValue") {
  Schedule s = decode_schedule(kReferenceGridText);
  // t1 day 5 is -t5 (home); flipping it (both sides) makes t1 away on days 3-5.
  s.grid[0][4].venue = Venue::Away;
  s.grid[4][4].venue = Venue::Home;
  auto v = validate_schedule(s);
  CHECK(has_kind(v, ViolationKind::StreakBound));
  CHECK(has_kind(v, ViolationKind::GameValue));
}

TEST_CASE("non-involutive grid raises Structure") {
  Schedule s = decode_schedule(kReferenceGridText);
  s.grid[0][0].opponent = 4;  // t1 claims to play t5, t5 disagrees
  auto v = validate_schedule(s);
  CHECK(has_kind(v, ViolationKind::Structure));
}

TEST_CASE("decode rejects sign-inconsistent rows") {
  std::string bad = kReferenceGridText;
  // make t1's first game home while t3 also claims home
  bad[0] = '+';
  CHECK_THROWS_AS(decode_schedule(bad), parse_error);
}

TEST_CASE("decode rejects malformed tokens and shapes") {
  CHECK_THROWS_AS(decode_schedule("x y\n"), parse_error);
  CHECK_THROWS_AS(decode_schedule("-t2 +t2\n-t1\n"), parse_error);
}

TEST_CASE("structured form round-trips") {
  Schedule s = decode_schedule(kReferenceGridText);
  CHECK(schedule_from_json(schedule_to_json(s)) == s);
}

TEST_CASE("structured form rejects inconsistent games") {
  auto j = schedule_to_json(decode_schedule(kReferenceGridText));
  j["grid"][0][0]["venue"] = "A";  // t3's matching entry still says away too
  CHECK_THROWS_AS(schedule_from_json(j), parse_error);
}
