#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracle.hpp"
#include "ultrarel/error.hpp"
#include "ultrarel/topology.hpp"

namespace {

using namespace ultrarel;

std::vector<Mask> opens_of(std::initializer_list<Mask> l) { return std::vector<Mask>(l); }

TEST(Topology, GeneratedBy) {
  const std::vector<Mask> g{bit(0)};
  EXPECT_EQ(Topology::generated_by(2, g).opens(), opens_of({0, 1, 3}));
  EXPECT_EQ(Topology::generated_by(2, g), Topology::sierpinski());
  const std::vector<Mask> singles{bit(0), bit(1), bit(2)};
  EXPECT_EQ(Topology::generated_by(3, singles).opens().size(), 8U);
  EXPECT_EQ(Topology::generated_by(2, {}).opens(), opens_of({0, 3}));
  const std::vector<Mask> bad{bit(3)};
  EXPECT_THROW(Topology::generated_by(2, bad), ValidationError);
}

TEST(Topology, SierpinskiClosure) {
  const Topology s = Topology::sierpinski();
  EXPECT_EQ(s.closure(bit(0)), Mask{3});
  EXPECT_EQ(s.closure(bit(1)), bit(1));
  EXPECT_EQ(s.closed_sets(), opens_of({0, 2, 3}));
  const Topology d = Topology::discrete(3);
  for (Mask a = 0; a < 8; ++a) EXPECT_EQ(d.closure(a), a);
}

TEST(Topology, Separation) {
  EXPECT_TRUE(Topology::sierpinski().is_t0());
  EXPECT_FALSE(Topology::sierpinski().is_t1());
  EXPECT_TRUE(Topology::discrete(3).is_t1());
  EXPECT_FALSE(Topology::indiscrete(2).is_t0());
}

TEST(Topology, SpecializationPreorder) {
  EXPECT_EQ(Topology::discrete(2).specialization_preorder(), Rel::identity(2));
  const std::vector<Pair> sp{{0, 0}, {1, 1}, {1, 0}};
  EXPECT_EQ(Topology::sierpinski().specialization_preorder(), Rel::from_pairs(2, sp));
  EXPECT_EQ(Topology::indiscrete(2).specialization_preorder(), Rel::universal(2));
}

TEST(Topology, EnumerationCountsMatchOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_topologies(n).size(), oracle::count_topologies(n)) << "n=" << n;
  }
  EXPECT_EQ(enumerate_topologies(3).size(), 29U);
  EXPECT_EQ(enumerate_topologies(4).size(), 355U);
  EXPECT_THROW(enumerate_topologies(5), SizeError);
}

TEST(Topology, EnumerationIsDistinctAndOrdered) {
  const std::vector<Topology> all = enumerate_topologies(3);
  std::vector<std::vector<Mask>> seen;
  for (const Topology& t : all) {
    ASSERT_TRUE(oracle::is_topology(3, [&] {
      std::uint64_t fam = 0;
      for (Mask o : t.opens()) fam |= std::uint64_t{1} << o;
      return fam;
    }()));
    seen.push_back(t.opens());
  }
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::set<std::vector<Mask>>(seen.begin(), seen.end()).size(), seen.size());
}

// Closure and interior against a closed-set scan, every topology on <= 4 points.
TEST(TopologyProperty, ClosureInteriorMatchOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      const std::vector<Mask> opens = t.opens();
      for (Mask a = 0; a <= full_mask(n); ++a) {
        const Mask cl = oracle::closure(n, opens, a);
        ASSERT_EQ(t.closure(a), cl);
        ASSERT_EQ(t.interior(a), full_mask(n) & ~oracle::closure(n, opens, full_mask(n) & ~a));
        ASSERT_EQ(t.is_open(a), std::find(opens.begin(), opens.end(), a) != opens.end());
      }
    }
  }
}

TEST(TopologyProperty, KuratowskiAxioms) {
  for (const Topology& t : enumerate_topologies(3)) {
    for (Mask a = 0; a < 8; ++a) {
      ASSERT_TRUE(is_subset(a, t.closure(a)));
      ASSERT_EQ(t.closure(t.closure(a)), t.closure(a));
      for (Mask b = 0; b < 8; ++b) ASSERT_EQ(t.closure(a | b), t.closure(a) | t.closure(b));
    }
    ASSERT_EQ(t.closure(0), 0U);
    ASSERT_EQ(Topology::from_specialization(t.specialization_preorder()), t);
  }
}

TEST(Product, Examples) {
  const ProductSpace dd(Topology::discrete(2), Topology::discrete(2));
  EXPECT_EQ(dd.pairs(), Topology::discrete(4));
  const ProductSpace ii(Topology::indiscrete(2), Topology::indiscrete(2));
  EXPECT_EQ(ii.pairs(), Topology::indiscrete(4));
  const ProductSpace ss(Topology::sierpinski(), Topology::sierpinski());
  EXPECT_EQ(ss.closure(bit(ss.encode(1, 0))), bit(ss.encode(1, 0)) | bit(ss.encode(1, 1)));
}

TEST(ProductProperty, OpensMatchRectangleOracle) {
  const std::vector<Topology> two = enumerate_topologies(2);
  std::vector<Topology> small = two;
  for (const Topology& t : enumerate_topologies(3)) small.push_back(t);
  for (const Topology& a : two) {
    for (const Topology& b : small) {
      const ProductSpace p(a, b);
      std::vector<Mask> want = oracle::product_opens(a.size(), a.opens(), b.size(), b.opens());
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      ASSERT_EQ(p.pairs().opens(), want);
    }
  }
}

}  // namespace
