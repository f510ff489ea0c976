#include <catch2/catch_amalgamated.hpp>

#include "ttp2/cost.hpp"
#include "ttp2/instance.hpp"

using namespace ttp2;

TEST_CASE("bare matrix form parses") {
  std::string text;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) text += (i == j ? "0 " : "1 ");
  DistanceMatrix dm = parse_instance(text);
  REQUIRE(dm.n() == 4);
  CHECK(dm.at(0, 1) == 1);
  CHECK(dm.at(2, 2) == 0);
  CHECK_FALSE(dm.metric_warning);
}

TEST_CASE("sized-header form parses to the same matrix") {
  std::string bare, sized = "4\n";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bare += (i == j ? "0 " : "1 ");
      sized += (i == j ? "0 " : "1 ");
    }
  DistanceMatrix a = parse_instance(bare);
  DistanceMatrix b = parse_instance(sized);
  REQUIRE(a.n() == b.n());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a.at(i, j) == b.at(i, j));
}

TEST_CASE("17 tokens with wrong header is a parse error") {
  std::string text = "5";
  for (int i = 0; i < 16; ++i) text += " 1";
  CHECK_THROWS_AS(parse_instance(text), parse_error);
}

TEST_CASE("shape mismatch and bad tokens") {
  CHECK_THROWS_AS(parse_instance("1 2 3"), parse_error);
  CHECK_THROWS_AS(parse_instance("0 1.5 1.5 0"), parse_error);
  CHECK_THROWS_AS(parse_instance("0 x x 0"), parse_error);
}

TEST_CASE("odd team count is unsupported") {
  std::string text;
  for (int i = 0; i < 9; ++i) text += i % 4 == 0 ? "0 " : "1 ";
  CHECK_THROWS_AS(parse_instance(text), unsupported_size_error);
}

TEST_CASE("asymmetric and negative matrices are rejected") {
  CHECK_THROWS_AS(parse_instance("0 1 2 0"), validation_error);
  CHECK_THROWS_AS(parse_instance("0 -1 -1 0"), validation_error);
}

TEST_CASE("triangle violation is a warning, not an error") {
  // d(1,3)=9 > d(1,2)+d(2,3)=2
  DistanceMatrix dm = parse_instance("4 0 1 9 1  1 0 1 1  9 1 0 1  1 1 1 0");
  CHECK(dm.metric_warning);
}

TEST_CASE("worst-case generator") {
  DistanceMatrix dm = gen_worst_case(8);
  CHECK(dm.total_edge_weight() == 24);  // 28 pairs, 4 at distance 0
  CHECK(dm.is_metric());
  LowerBound lb = independent_lower_bound(dm);
  CHECK(lb.matching.weight == 0);
  CHECK(lb.lb == 48);  // n(n-2)

  DistanceMatrix d4 = gen_worst_case(4);
  CHECK(d4.at(0, 1) == 0);
  CHECK(d4.at(2, 3) == 0);
  CHECK(d4.at(0, 2) == 1);
  CHECK(d4.at(1, 3) == 1);

  CHECK_THROWS_AS(gen_worst_case(10), unsupported_size_error);
}

TEST_CASE("random metric generator is deterministic and metric") {
  DistanceMatrix a = gen_random_metric(8, 1);
  DistanceMatrix b = gen_random_metric(8, 1);
  DistanceMatrix c = gen_random_metric(8, 2);
  CHECK(serialize_instance(a) == serialize_instance(b));
  CHECK(serialize_instance(a) != serialize_instance(c));
  CHECK(a.is_metric());
  CHECK(c.is_metric());
  for (int i = 0; i < 8; ++i) {
    CHECK(a.at(i, i) == 0);
    for (int j = 0; j < 8; ++j) CHECK(a.at(i, j) == a.at(j, i));
  }
}

TEST_CASE("serialize/parse round-trips") {
  for (std::uint64_t seed : {1, 7, 42}) {
    DistanceMatrix a = gen_random_metric(12, seed);
    DistanceMatrix b = parse_instance(serialize_instance(a));
    REQUIRE(a.n() == b.n());
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < a.n(); ++j) CHECK(a.at(i, j) == b.at(i, j));
  }
}
