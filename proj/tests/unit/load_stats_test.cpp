#include "load_stats.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "error.hpp"
#include "gtest/gtest.h"

namespace slhash {
namespace {

TEST(KeySetTest, MaterializeExamples) {
  const Modulus mod(13, 4);
  EXPECT_EQ(KeySet::interval(4).materialize(mod), (std::vector<u64>{0, 1, 2, 3}));
  EXPECT_EQ(KeySet::affine(3, 1, 0).materialize(mod), (std::vector<u64>{0, 1, 2}));
  EXPECT_EQ(KeySet::affine(3, 5, 2).materialize(mod), (std::vector<u64>{2, 7, 12}));
}

TEST(KeySetTest, ExplicitIsSortedAndRejectsDuplicates) {
  const auto ks = KeySet::explicit_elements({9, 3, 5});
  EXPECT_EQ(ks.materialize(Modulus(13, 4)), (std::vector<u64>{3, 5, 9}));
  EXPECT_EQ(ks.size(), 3u);
  EXPECT_THROW(KeySet::explicit_elements({1, 2, 1}), ValidationError);
  EXPECT_THROW(KeySet::explicit_elements({}), ValidationError);
}

TEST(KeySetTest, Validation) {
  const Modulus mod(13, 4);
  EXPECT_THROW(KeySet::interval(0), ValidationError);
  EXPECT_THROW(KeySet::affine(3, 0, 1), DomainError);
  EXPECT_THROW(KeySet::interval(14).materialize(mod), DomainError);
  EXPECT_THROW(KeySet::affine(3, 13, 0).materialize(mod), DomainError);
  EXPECT_THROW(KeySet::explicit_elements({3, 13}).materialize(mod), DomainError);
}

TEST(KeySetTest, AffineImagesAreDistinct) {
  const Modulus mod(257, 16);
  for (u64 alpha = 1; alpha < 257; alpha += 17) {
    auto keys = KeySet::affine(257, alpha, 100).materialize(mod);
    std::sort(keys.begin(), keys.end());
    ASSERT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
  }
}

TEST(LoadProfileTest, Examples) {
  const Modulus mod(257, 16);
  const auto ks = KeySet::interval(16);
  const auto identity = load_profile({1, 0}, mod, ks);
  EXPECT_EQ(identity.max_load, 1u);
  EXPECT_TRUE(std::all_of(identity.loads.begin(), identity.loads.end(),
                          [](u64 v) { return v == 1; }));

  const auto constant = load_profile({0, 0}, mod, ks);
  EXPECT_EQ(constant.loads[0], 16u);
  EXPECT_EQ(constant.max_load, 16u);
}

TEST(LoadProfileTest, MatchesPerElementRecount) {
  const Modulus mod(257, 16);
  const auto ks = KeySet::interval(16);
  const auto profile = load_profile({17, 0}, mod, ks);
  std::map<u64, u64> recount;
  for (u64 x = 0; x < 16; ++x) ++recount[(17 * x) % 257 % 16];
  u64 best = 0;
  for (const auto& [bin, n] : recount) {
    EXPECT_EQ(profile.loads[bin], n);
    best = std::max(best, n);
  }
  EXPECT_EQ(profile.max_load, best);
  EXPECT_EQ(profile.max_load, 1u);
}

TEST(LoadProfileTest, InvariantsOverRandomFunctions) {
  std::mt19937_64 gen(3);
  const Modulus mod(1031, 32);
  const std::vector<KeySet> sets = {KeySet::interval(32), KeySet::affine(32, 77, 5),
                                    KeySet::explicit_elements({1, 50, 999, 1030, 7})};
  MaxLoadCounter counter(mod);
  for (const auto& ks : sets) {
    const auto keys = ks.materialize(mod);
    for (int i = 0; i < 500; ++i) {
      const HashParams h{gen() % 1031, gen() % 1031};
      const auto profile = load_profile(h, mod, ks);
      ASSERT_EQ(profile.loads.size(), 32u);
      ASSERT_EQ(std::accumulate(profile.loads.begin(), profile.loads.end(), u64{0}),
                ks.size());
      ASSERT_EQ(profile.max_load,
                *std::max_element(profile.loads.begin(), profile.loads.end()));
      ASSERT_EQ(counter.max_load(h, keys), profile.max_load);
    }
  }
}

TEST(LoadProfileTest, RejectsParamsOutsideField) {
  const Modulus mod(13, 4);
  EXPECT_THROW(load_profile({13, 0}, mod, KeySet::interval(4)), DomainError);
}

TEST(BZeroBoundsTest, Examples) {
  EXPECT_EQ(max_load_b_zero_bounds(3).lower, 1u);
  EXPECT_EQ(max_load_b_zero_bounds(3).upper, 6u);
  EXPECT_EQ(max_load_b_zero_bounds(1).lower, 0u);
  EXPECT_EQ(max_load_b_zero_bounds(1).upper, 2u);
}

TEST(BZeroBoundsTest, ExhaustiveContainment) {
  const Modulus mod(257, 16);
  const auto ks = KeySet::interval(16);
  for (u64 a = 0; a < 257; ++a) {
    const u64 base = load_profile({a, 0}, mod, ks).max_load;
    for (u64 b = 0; b < 257; ++b) {
      ASSERT_TRUE(max_load_b_zero_bounds({a, b}, mod, ks).contains(base))
          << "a=" << a << " b=" << b;
    }
  }
}

TEST(SignSymmetryTest, ExhaustiveOnZeroFreeSet) {
  const Modulus mod(257, 16);
  const auto ks = KeySet::explicit_elements({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  const auto with_zero = KeySet::interval(16);
  for (u64 a = 1; a < 257; ++a) {
    ASSERT_EQ(load_profile({a, 0}, mod, ks).max_load,
              load_profile({257 - a, 0}, mod, ks).max_load);
    const auto l1 = static_cast<long long>(load_profile({a, 0}, mod, with_zero).max_load);
    const auto l2 = static_cast<long long>(load_profile({257 - a, 0}, mod, with_zero).max_load);
    ASSERT_LE(std::llabs(l1 - l2), 1);
  }
}

}  // namespace
}  // namespace slhash
