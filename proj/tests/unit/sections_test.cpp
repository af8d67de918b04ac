#include <gtest/gtest.h>

#include <memory>
#include <vector>

#include "oracle.hpp"
#include "ultrarel/sections.hpp"

namespace {

using namespace ultrarel;

/// Union of the product closures of the left (or right) sections, each
/// closure taken by a closed-set scan.
Mask section_closure_oracle(const ProductSpace& p, Mask cells, bool left) {
  const std::vector<Mask> opens = p.pairs().opens();
  const std::size_t lines = left ? p.left_size() : p.right_size();
  Mask out = 0;
  for (std::size_t i = 0; i < lines; ++i) {
    Mask sec = 0;
    for (std::size_t x = 0; x < p.left_size(); ++x)
      for (std::size_t y = 0; y < p.right_size(); ++y)
        if ((left ? x : y) == i && has(cells, p.encode(x, y))) sec |= bit(p.encode(x, y));
    out |= oracle::closure(p.point_count(), opens, sec);
  }
  return out;
}

ProductSpace sierpinski2() { return ProductSpace(Topology::sierpinski(), Topology::sierpinski()); }

TEST(Sections, Examples) {
  const ProductSpace dd(Topology::discrete(2), Topology::discrete(2));
  for (Mask r = 0; r < 16; ++r) EXPECT_EQ(lcl(dd, r), r);
  const ProductSpace ss = sierpinski2();
  const Mask r = bit(ss.encode(1, 0));
  const Mask want = r | bit(ss.encode(1, 1));
  EXPECT_EQ(lcl(ss, r), want);
  EXPECT_EQ(rcl(ss, r), want);
}

TEST(Sections, Sidedness) {
  auto space = std::make_shared<const ProductSpace>(sierpinski2());
  const ProductRel r(space, bit(space->encode(1, 0)));
  EXPECT_TRUE(sidedness(r, Side::left, bit(0), Sidedness::closed));
  EXPECT_FALSE(sidedness(r, Side::left, bit(1), Sidedness::closed));
  auto disc = std::make_shared<const ProductSpace>(Topology::discrete(2), Topology::discrete(2));
  for (Mask c = 0; c < 16; ++c) {
    EXPECT_TRUE(sidedness(ProductRel(disc, c), Side::left, 3, Sidedness::clopen));
    EXPECT_TRUE(sidedness(ProductRel(disc, c), Side::right, 3, Sidedness::clopen));
  }
}

TEST(SectionsProperty, MatchOracleOnSmallProducts) {
  std::vector<Topology> tops = enumerate_topologies(1);
  for (const Topology& t : enumerate_topologies(2)) tops.push_back(t);
  for (const Topology& a : tops) {
    for (const Topology& b : tops) {
      const ProductSpace p(a, b);
      for_each_subset(p.all(), [&](Mask r) {
        ASSERT_EQ(lcl(p, r), section_closure_oracle(p, r, true));
        ASSERT_EQ(rcl(p, r), section_closure_oracle(p, r, false));
      });
    }
  }
}

TEST(SectionsProperty, ClosureOperatorLaws) {
  for (const Topology& a : enumerate_topologies(2)) {
    for (const Topology& b : enumerate_topologies(2)) {
      const ProductSpace p(a, b);
      EXPECT_TRUE(lcl_rcl_laws_check(p, 16).pass);
      EXPECT_TRUE(corollary_check(p, 16).pass);
      for_each_subset(p.all(), [&](Mask r) {
        const Mask l = lcl(p, r);
        ASSERT_TRUE(is_subset(r, l));
        ASSERT_TRUE(is_subset(l, p.closure(r)));
        ASSERT_EQ(lcl(p, l), l);
        ASSERT_EQ(p.swapped().transpose(lcl(p.swapped(), p.transpose(r))), rcl(p, r));
      });
    }
  }
}

TEST(SectionsProperty, DerivedTopologyClosedSetsAreFixedPoints) {
  for (const Topology& a : enumerate_topologies(2)) {
    for (const Topology& b : enumerate_topologies(2)) {
      const ProductSpace p(a, b);
      const Topology tl = derived_topology(p, Side::left);
      EXPECT_TRUE(tl.refines(p.pairs()));
      for_each_subset(p.all(), [&](Mask r) { ASSERT_EQ(tl.is_closed(r), lcl(p, r) == r); });
    }
  }
}

TEST(Sections, IdempotenceSearchOnDiscreteFindsNothing) {
  const SearchReport rep = idempotence_search(1);
  EXPECT_EQ(rep.witness_count, 0U);
  EXPECT_TRUE(rep.exhausted);
}

TEST(Sections, IterateStabilises) {
  const ProductSpace ss = sierpinski2();
  std::size_t rounds = 0;
  const Mask r = bit(ss.encode(1, 0));
  const Mask fixed = iterate_rcl_lcl(ss, r, 10, &rounds);
  EXPECT_EQ(rcl(ss, lcl(ss, fixed)), fixed);
  EXPECT_LE(rounds, 10U);
}

}  // namespace
