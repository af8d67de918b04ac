#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "oracle.hpp"
#include "ultrarel/error.hpp"
#include "ultrarel/filters.hpp"

namespace {

using namespace ultrarel;

/// The Vietoris topology on the nonempty closed sets of `base`, built from
/// its subbase: O^+ = {B : B meets O} (lower), O^- = {B : B ⊆ O} (upper).
struct HyperOracle {
  std::vector<Mask> points;
  std::vector<Mask> opens;

  HyperOracle(const Topology& base, Flavor f) {
    const std::size_t n = base.size();
    const std::vector<Mask> base_opens = base.opens();
    for (Mask o : base_opens) {
      const Mask c = full_mask(n) & ~o;
      if (c != 0) points.push_back(c);
    }
    std::sort(points.begin(), points.end());
    std::vector<Mask> subbase;
    for (Mask o : base_opens) {
      Mask plus = 0, minus = 0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        if ((points[i] & o) != 0) plus |= bit(i);
        if ((points[i] & ~o) == 0) minus |= bit(i);
      }
      if (f != Flavor::upper) subbase.push_back(plus);
      if (f != Flavor::lower) subbase.push_back(minus);
    }
    opens = oracle::generate(points.size(), subbase);
  }

  Mask closure(Mask s) const { return oracle::closure(points.size(), opens, s); }
};

TEST(Filters, Counts) {
  EXPECT_EQ(all_filters(1).size(), 1U);
  EXPECT_EQ(all_filters(2).size(), 3U);
  EXPECT_EQ(all_filters(3).size(), 7U);
  EXPECT_EQ(to_text(all_filters(2)[2]), "gen{0,1}");
  EXPECT_THROW(FilterGen(2, 0), ValidationError);
}

TEST(Filters, UltraSetAndText) {
  EXPECT_EQ(ultra_set(FilterGen(2, 3)), Mask{3});
  EXPECT_EQ(ultra_set(FilterGen(3, bit(2))), bit(2));
  EXPECT_EQ(filter_from_text("gen{0,2}", 3), FilterGen(3, 5));
  EXPECT_EQ(filter_from_text(to_text(FilterGen(4, 11)), 4), FilterGen(4, 11));
  EXPECT_ANY_THROW(filter_from_text("gen{3}", 2));
}

TEST(Filters, AntiIsomorphismWithSubsets) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Mask a = 1; a <= full_mask(n); ++a) {
      ASSERT_EQ(ultra_set(meet_of_principals(n, a)), a);
      for (Mask b = 1; b <= full_mask(n); ++b) {
        ASSERT_EQ(is_subset(a, b), meet_of_principals(n, b).included_in(meet_of_principals(n, a)));
      }
    }
  }
}

TEST(Hyper, SierpinskiExamples) {
  const HyperSpace h(Topology::sierpinski());
  ASSERT_EQ(h.points(), (std::vector<Mask>{2, 3}));
  EXPECT_EQ(hatted_set(h, bit(1), Hat::minus), bit(0));
  EXPECT_EQ(hatted_set(h, bit(1), Hat::plus), Mask{3});
  EXPECT_EQ(hatted_set(h, 3, Hat::plus), h.all());
  const std::vector<Mask> zero{bit(0)};
  EXPECT_EQ(vietoris_basic(h, zero), 0U);
  const std::vector<Mask> whole{3};
  EXPECT_EQ(vietoris_basic(h, whole), h.all());
  EXPECT_EQ(vietoris_basic(h, {}), 0U);
  const std::vector<Mask> not_open{bit(1)};
  EXPECT_THROW(vietoris_basic(h, not_open), ValidationError);
}

TEST(Hyper, ClosureEdgeCases) {
  for (const Topology& t : enumerate_topologies(3)) {
    const HyperSpace h(t);
    for (Flavor f : {Flavor::lower, Flavor::upper, Flavor::full}) {
      EXPECT_EQ(vietoris_closure_formula(h, 0, f), 0U);
      EXPECT_EQ(vietoris_closure_generic(h, h.all(), f), h.all());
    }
  }
}

TEST(HyperProperty, TopologiesMatchSubbaseOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      const HyperSpace h(t);
      for (Flavor f : {Flavor::lower, Flavor::upper, Flavor::full}) {
        const HyperOracle o(t, f);
        ASSERT_EQ(h.points(), o.points);
        for (Mask s = 0; s <= h.all(); ++s) ASSERT_EQ(vietoris_closure_generic(h, s, f), o.closure(s));
      }
    }
  }
}

TEST(HyperProperty, OneSidedFormulasMatchOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      const HyperSpace h(t);
      for (Flavor f : {Flavor::lower, Flavor::upper}) {
        const HyperOracle o(t, f);
        for (Mask s = 0; s <= h.all(); ++s) ASSERT_EQ(vietoris_closure_formula(h, s, f), o.closure(s));
      }
    }
  }
}

// The full closure is contained in the meet of the one-sided closures, and
// the containment can be strict once the base has three points.
TEST(HyperProperty, FullClosureVersusOneSided) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      const HyperSpace h(t);
      for (Mask s = 0; s <= h.all(); ++s) {
        const Mask meet = vietoris_closure_generic(h, s, Flavor::lower) & vietoris_closure_generic(h, s, Flavor::upper);
        ASSERT_TRUE(is_subset(vietoris_closure_generic(h, s, Flavor::full), meet));
        if (n <= 2) ASSERT_EQ(vietoris_closure_generic(h, s, Flavor::full), meet);
      }
    }
  }
  const HyperSpace h(Topology::discrete(3));
  const Mask s = bit(*h.index_of(bit(0))) | bit(*h.index_of(7));
  const Mask pair01 = bit(*h.index_of(3));
  EXPECT_TRUE(has(vietoris_closure_generic(h, s, Flavor::lower), *h.index_of(3)));
  EXPECT_TRUE(has(vietoris_closure_generic(h, s, Flavor::upper), *h.index_of(3)));
  EXPECT_FALSE(meets(vietoris_closure_generic(h, s, Flavor::full), pair01));
  EXPECT_THROW(vietoris_closure(h, s, Flavor::full), InvariantError);
}

TEST(FilterClosure, SpecExampleUpper) {
  // s = {gen{0}}: D is in the closure iff every C compatible with gen{0} is compatible with D.
  const FilterSet s = bit(FilterGen(2, bit(0)).index());
  FilterSet want = 0;
  for (const FilterGen& d : all_filters(2)) {
    bool ok = true;
    for (const FilterGen& c : all_filters(2))
      if (compatible(c, FilterGen(2, bit(0))) && !compatible(c, d)) ok = false;
    if (ok) want |= bit(d.index());
  }
  EXPECT_EQ(filter_vietoris_closure(2, s, Flavor::upper), want);
  EXPECT_EQ(filter_vietoris_closure(2, full_mask(3), Flavor::full), full_mask(3));
}

TEST(FilterClosureProperty, OneSidedMatchDiscreteHyperspace) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FilterSet all = full_mask(filter_count(n));
    for (Flavor f : {Flavor::lower, Flavor::upper, Flavor::full}) {
      const HyperOracle o(Topology::discrete(n), f);
      for (FilterSet s = 0; s <= all; ++s) {
        ASSERT_EQ(filter_vietoris_closure_transport(n, s, f), o.closure(s));
        if (f != Flavor::full) ASSERT_EQ(filter_vietoris_closure(n, s, f), o.closure(s));
      }
    }
  }
}

}  // namespace
