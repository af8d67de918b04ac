#include <gtest/gtest.h>

#include <random>

#include "ultrarel/error.hpp"
#include "ultrarel/io.hpp"

namespace {

using namespace ultrarel;

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

TEST(Io, RelRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const Rel r(n, rng() & full_mask(n * n));
    ASSERT_EQ(rel_from_json(rel_to_json(r)), r);
    ASSERT_EQ(rel_from_json(parse_json_text(dump(rel_to_json(r)))), r);
  }
}

TEST(Io, RelErrorsNameTheField) {
  EXPECT_EQ(where_of([] { rel_from_json(Json::parse(R"({"n": 2, "pairs": [[0, 1], [1, 2]]})")); }), "pairs[1][1]");
  EXPECT_EQ(where_of([] { rel_from_json(Json::parse(R"({"n": 2, "pairs": [[0, 1], [0, 1]]})")); }), "pairs[1]");
  EXPECT_EQ(where_of([] { rel_from_json(Json::parse(R"({"pairs": []})")); }), "n");
  EXPECT_EQ(where_of([] { rel_from_json(Json::parse(R"({"n": 9, "pairs": []})")); }), "n");
  EXPECT_EQ(where_of([] { parse_json_text("{\n  \"n\": 2,\n  oops\n}", "f.json"); }).rfind("f.json:3:", 0), 0U);
}

TEST(Io, TopologyRoundTripAndClosingUp) {
  for (const Topology& t : enumerate_topologies(3)) {
    const ParsedTopology p = topology_from_json(topology_to_json(t));
    ASSERT_EQ(p.topology, t);
    ASSERT_FALSE(p.closed_up);
  }
  const ParsedTopology g = topology_from_json(Json::parse(R"({"n": 3, "opens": [[0], [1]]})"));
  EXPECT_TRUE(g.closed_up);
  EXPECT_TRUE(g.topology.is_open(bit(0) | bit(1)));
  EXPECT_EQ(where_of([] { topology_from_json(Json::parse(R"({"n": 2, "opens": [[0, 5]]})")); }), "opens[0][1]");
}

TEST(Io, FilterRelRoundTrip) {
  for (Mask r = 0; r < 512; r += 5) {
    const FilterRel f = star_filter(Rel(3, r));
    ASSERT_EQ(filter_rel_from_json(filter_rel_to_json(f)), f);
  }
  Json j = filter_rel_to_json(star_filter(Rel::identity(2)));
  EXPECT_EQ(j["matrix"].size(), 3U);
  j["matrix"][0][0] = 0;
  EXPECT_EQ(where_of([&] { filter_rel_from_json(j); }), "matrix[0][0]");
  j["matrix"][0][0] = 2;
  EXPECT_EQ(where_of([&] { filter_rel_from_json(j); }), "matrix[0][0]");
}

TEST(Io, DumpIsCompactAndStable) {
  const Json j = rel_to_json(Rel::identity(2));
  EXPECT_EQ(dump(j), "{\n  \"n\": 2,\n  \"pairs\": [\n    [0, 0],\n    [1, 1]\n  ]\n}\n");
  EXPECT_EQ(dump(parse_json_text(dump(j))), dump(j));
}

TEST(Io, HyperspaceJson) {
  const Json j = hyperspace_to_json(HyperSpace(Topology::sierpinski()), Flavor::full);
  EXPECT_EQ(j["points"].size(), 2U);
  EXPECT_EQ(j["n"], 2);
}

}  // namespace
