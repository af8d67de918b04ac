#include <gtest/gtest.h>

#include <vector>

#include "oracle.hpp"
#include "ultrarel/error.hpp"
#include "ultrarel/extensions.hpp"

namespace {

using namespace ultrarel;

Rel rel(std::size_t n, std::vector<Pair> pairs) { return Rel::from_pairs(n, pairs); }
FilterGen gen(std::size_t n, Mask g) { return FilterGen(n, g); }

/// Every member of the filter generated by g.
std::vector<Mask> members(std::size_t n, Mask g) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(n); ++s)
    if ((g & ~s) == 0) out.push_back(s);
  return out;
}

Mask img(const Rel& r, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (oracle::in(a, x) && r.contains(x, y)) out |= bit(y);
  return out;
}

/// For every A in C: D ∪ {RA} has the finite intersection property,
/// checked on every finite subfamily.
bool star_oracle(const Rel& r, const FilterGen& c, const FilterGen& d) {
  const std::size_t n = r.size();
  const std::vector<Mask> dm = members(n, d.gen());
  for (Mask a : members(n, c.gen())) {
    std::vector<Mask> fam = dm;
    fam.push_back(img(r, a));
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << fam.size()); ++pick) {
      Mask meet = full_mask(n);
      for (std::size_t i = 0; i < fam.size(); ++i)
        if (oracle::in(pick, i)) meet &= fam[i];
      if (meet == 0) return false;
    }
  }
  return true;
}

/// {x : {y : R(x, y)} ∈ D} ∈ C
bool tilde_oracle(const Rel& r, const FilterGen& c, const FilterGen& d) {
  Mask xs = 0;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (d.contains(r.row(x))) xs |= bit(x);
  return c.contains(xs);
}

TEST(Conditions, Examples) {
  const Rel r = rel(2, {{0, 1}});
  for (Condition c : kAllConditions) EXPECT_TRUE(condition(r, gen(2, 1), gen(2, 2), c)) << to_string(c);
  EXPECT_FALSE(condition(Rel::identity(2), gen(2, 3), gen(2, 3), Condition::cv));
  EXPECT_TRUE(condition(Rel::identity(2), gen(2, 3), gen(2, 3), Condition::ci));
}

TEST(Conditions, PrincipalCollapse) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Rel& r : all_relations(n)) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (Condition c : kAllConditions)
            ASSERT_EQ(condition(r, FilterGen::principal(n, x), FilterGen::principal(n, y), c), r.contains(x, y));
      ASSERT_EQ(star_ultra(r), r);
      ASSERT_EQ(tilde_ultra(r), r);
    }
  }
}

TEST(StarFilter, Examples) {
  EXPECT_TRUE(star_filter(Rel::identity(2)).contains(gen(2, 3), gen(2, 3)));
  EXPECT_EQ(star_filter(Rel(3)), FilterRel(3));
  EXPECT_TRUE(star_filter(rel(2, {{0, 1}})).contains(gen(2, 1), gen(2, 3)));
  EXPECT_FALSE(tilde_filter(Rel::identity(2)).contains(gen(2, 3), gen(2, 3)));
  EXPECT_EQ(tilde_filter(Rel::universal(3)), FilterRel::universal(3));
  EXPECT_EQ(star_filter(Rel::universal(3)), FilterRel::universal(3));
}

TEST(StarFilterProperty, MatchesQuantifierOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::vector<FilterGen> fs = all_filters(n);
    for (const Rel& r : all_relations(n)) {
      const FilterRel star = star_filter(r), tilde = tilde_filter(r);
      ASSERT_EQ(star_filter_literal(r), star);
      for (const FilterGen& c : fs) {
        for (const FilterGen& d : fs) {
          if (n <= 2) ASSERT_EQ(star.contains(c, d), star_oracle(r, c, d));
          ASSERT_EQ(tilde.contains(c, d), tilde_oracle(r, c, d));
          ASSERT_EQ(rectangle_check(r, c, d), star.contains(c, d));
          ASSERT_EQ(filter_reduction_check(r, c, d), star.contains(c, d));
        }
      }
      ASSERT_EQ(star.principal_block(), r);
      ASSERT_EQ(tilde.principal_block(), r);
    }
  }
}

TEST(Rectangle, Examples) {
  const Rel r = rel(2, {{0, 1}});
  EXPECT_TRUE(rectangle_check(r, gen(2, 1), gen(2, 2)));
  EXPECT_FALSE(rectangle_check(r, gen(2, 2), gen(2, 2)));
  EXPECT_TRUE(filter_reduction_check(r, gen(2, 3), gen(2, 3)));
  EXPECT_FALSE(filter_reduction_check(Rel(2), gen(2, 3), gen(2, 3)));
}

TEST(Projections, Examples) {
  const auto [a, b] = filter_projections(bit(1), 2);
  EXPECT_EQ(a, gen(2, 1));
  EXPECT_EQ(b, gen(2, 2));
  const auto [c, d] = filter_projections(bit(1) | bit(3), 2);
  EXPECT_EQ(c, gen(2, 3));
  EXPECT_EQ(d, gen(2, 2));
}

TEST(FilterRel, AlgebraMatchesOracle) {
  for (Mask a = 0; a < 16; ++a) {
    for (Mask b = 0; b < 16; ++b) {
      const FilterRel r = star_filter(Rel(2, a)), s = tilde_filter(Rel(2, b));
      const std::size_t k = r.index_count();
      oracle::Matrix mr(k, std::vector<bool>(k)), ms(k, std::vector<bool>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          mr[i][j] = r.contains(i, j);
          ms[i][j] = s.contains(i, j);
        }
      const oracle::Matrix mc = oracle::compose(mr, ms);
      const FilterRel c = compose(r, s);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          ASSERT_EQ(c.contains(i, j), static_cast<bool>(mc[i][j]));
          ASSERT_EQ(inverse(r).contains(i, j), r.contains(j, i));
        }
    }
  }
}

TEST(Multimap, RBulletAndStarMap) {
  const MultiMap m = r_bullet(Rel::identity(3), Topology::discrete(3));
  EXPECT_EQ(m.values(), (std::vector<Mask>{1, 2, 4}));
  EXPECT_THROW(r_bullet(rel(2, {{0, 0}}), Topology::discrete(2)), PreconditionError);
  EXPECT_EQ(star_as_map(rel(2, {{0, 1}, {0, 0}}), gen(2, 1)), Mask{3});
  EXPECT_EQ(star_as_map(Rel::identity(2), gen(2, 3)), Mask{3});
  EXPECT_EQ(star_as_map(Rel(2), gen(2, 3)), 0U);
}

TEST(Multimap, SemicontinuityExamples) {
  const Topology s = Topology::sierpinski();
  const MultiMap f(s, s, {bit(1), 3});
  EXPECT_FALSE(semicontinuity(f, Semicontinuity::lower));
  const MultiMap constant(s, s, {3, 3});
  for (auto w : {Semicontinuity::lower, Semicontinuity::upper, Semicontinuity::vietoris})
    EXPECT_TRUE(semicontinuity(constant, w));
  const MultiMap disc(Topology::discrete(2), s, {bit(1), 3});
  for (auto w : {Semicontinuity::lower, Semicontinuity::upper, Semicontinuity::vietoris})
    EXPECT_TRUE(semicontinuity(disc, w));
}

// Lower: {x : F(x) meets O} open; upper: {x : F(x) ⊆ O} open, scanned directly.
TEST(MultimapProperty, SemicontinuityMatchesPreimageScan) {
  for (const Topology& dom : enumerate_topologies(2)) {
    for (const Topology& cod : enumerate_topologies(2)) {
      std::vector<Mask> pts;
      for (Mask c : cod.closed_sets())
        if (c != 0) pts.push_back(c);
      for (Mask v0 : pts) {
        for (Mask v1 : pts) {
          const MultiMap f(dom, cod, {v0, v1});
          bool lower = true, upper = true;
          for (Mask o : cod.opens()) {
            Mask lo = 0, up = 0;
            for (std::size_t x = 0; x < 2; ++x) {
              if ((f.value(x) & o) != 0) lo |= bit(x);
              if ((f.value(x) & ~o) == 0) up |= bit(x);
            }
            lower = lower && dom.is_open(lo);
            upper = upper && dom.is_open(up);
          }
          ASSERT_EQ(semicontinuity(f, Semicontinuity::lower), lower);
          ASSERT_EQ(semicontinuity(f, Semicontinuity::upper), upper);
          ASSERT_EQ(semicontinuity(f, Semicontinuity::vietoris), lower && upper);
        }
      }
    }
  }
}

TEST(Hom, Preservation) {
  const std::vector<std::size_t> id{0, 1}, to0{0, 0};
  EXPECT_TRUE(hom_preservation_check(id, rel(2, {{0, 1}}), rel(2, {{0, 1}})));
  for (Mask r = 0; r < 16; ++r) EXPECT_TRUE(hom_preservation_check(to0, Rel(2, r), rel(2, {{0, 0}})));
  EXPECT_THROW(hom_preservation_check(id, Rel::universal(2), Rel::identity(2)), PreconditionError);
}

TEST(Hom, PushforwardOfPrincipal) {
  const std::vector<std::size_t> h{2, 0, 2};
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(pushforward(FilterGen::principal(3, x), h, 3), FilterGen::principal(3, h[x]));
  EXPECT_EQ(pushforward(gen(3, 7), h, 3), gen(3, 5));
}

}  // namespace
