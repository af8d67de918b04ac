#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "ultrarel/error.hpp"
#include "ultrarel/rel.hpp"

namespace {

using namespace ultrarel;

Rel rel(std::size_t n, std::vector<Pair> pairs) { return Rel::from_pairs(n, pairs); }

TEST(Rel, BooleanOps) {
  EXPECT_EQ(complement(Rel::identity(2)), rel(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(union_of(rel(2, {{0, 1}}), rel(2, {{1, 0}})), rel(2, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(intersection(Rel::identity(3), complement(Rel::identity(3))).empty());
  EXPECT_THROW(union_of(Rel(2), Rel(3)), DimensionError);
}

TEST(Rel, Inverse) {
  EXPECT_EQ(inverse(rel(2, {{0, 1}})), rel(2, {{1, 0}}));
  EXPECT_EQ(inverse(Rel::identity(3)), Rel::identity(3));
  EXPECT_EQ(inverse(rel(3, {{0, 1}, {0, 2}})), rel(3, {{1, 0}, {2, 0}}));
}

TEST(Rel, ComposeExamples) {
  EXPECT_EQ(compose(rel(2, {{1, 0}}), rel(2, {{0, 1}})), rel(2, {{0, 0}}));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(compose(Rel::universal(n), Rel::identity(n)), Rel::universal(n));
  EXPECT_EQ(compose(Rel::identity(2), Rel::universal(2)), Rel::universal(2));
  EXPECT_THROW(compose(Rel(2), Rel(3)), DimensionError);
}

TEST(Rel, ComposeMatchesOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Mask total = Mask{1} << (n * n);
    for (Mask r = 0; r < total; ++r) {
      for (Mask s = 0; s < total; s += (n == 3 ? 7 : 1)) {
        const Mask want = oracle::bits_of(oracle::compose(oracle::matrix_of(n, r), oracle::matrix_of(n, s)));
        ASSERT_EQ(compose(Rel(n, r), Rel(n, s)).bits(), want) << "n=" << n << " r=" << r << " s=" << s;
      }
    }
  }
}

TEST(Rel, ImageAndPreimage) {
  const Rel lt = rel(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(image(lt, bit(0)), bit(1) | bit(2));
  EXPECT_EQ(image(lt, 0), 0U);
  EXPECT_EQ(image(Rel::identity(3), bit(1)), bit(1));
  EXPECT_EQ(preimage(lt, bit(2)), bit(0) | bit(1));
}

TEST(Rel, ImageOfComposeIsIteratedImage) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const Rel r(n, rng() & full_mask(n * n)), s(n, rng() & full_mask(n * n));
    const Mask a = rng() & full_mask(n);
    ASSERT_EQ(image(compose(r, s), a), image(r, image(s, a)));
  }
}

TEST(Rel, Sections) {
  EXPECT_EQ(section(Rel::universal(2), 0, Side::left), rel(2, {{0, 0}, {0, 1}}));
  EXPECT_EQ(section(Rel::identity(2), 1, Side::right), rel(2, {{1, 1}}));
}

TEST(Rel, Closures) {
  EXPECT_EQ(transitive_closure(rel(3, {{0, 1}, {1, 2}})), rel(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(reflexive_closure(Rel(2)), Rel::identity(2));
  EXPECT_EQ(transitive_closure(Rel::identity(3)), Rel::identity(3));
  for (Mask r = 0; r < (Mask{1} << 9); ++r) {
    const Mask want = oracle::bits_of(oracle::transitive_closure(oracle::matrix_of(3, r)));
    ASSERT_EQ(transitive_closure(Rel(3, r)).bits(), want);
  }
}

TEST(Rel, Homomorphism) {
  const std::vector<std::size_t> id{0, 1}, zero{0, 0};
  EXPECT_TRUE(is_homomorphism(id, Rel::universal(2), Rel::universal(2)));
  EXPECT_TRUE(is_homomorphism(zero, rel(2, {{0, 1}}), rel(2, {{0, 0}})));
  EXPECT_FALSE(is_homomorphism(id, Rel::universal(2), Rel::identity(2)));
}

TEST(Rel, RejectsOutOfRange) {
  const std::vector<Pair> bad{{0, 2}};
  EXPECT_THROW(Rel::from_pairs(2, bad), ValidationError);
  EXPECT_THROW(Rel(7), SizeError);
}

TEST(Rel, AllRelationsCount) {
  EXPECT_EQ(all_relations(2).size(), 16U);
  EXPECT_EQ(all_relations(3).size(), 512U);
}

// Algebraic identities as properties over every relation on 3 points.
TEST(RelProperty, InvolutionsAndDeMorgan) {
  for (Mask a = 0; a < 512; ++a) {
    const Rel r(3, a);
    ASSERT_EQ(inverse(inverse(r)), r);
    ASSERT_EQ(complement(complement(r)), r);
    ASSERT_EQ(inverse(complement(r)), complement(inverse(r)));
    const Rel s(3, (a * 37 + 11) & 511);
    ASSERT_EQ(complement(union_of(r, s)), intersection(complement(r), complement(s)));
    ASSERT_EQ(inverse(compose(r, s)), compose(inverse(s), inverse(r)));
  }
}

}  // namespace
