#include "exact_oracles.hpp"

#include <random>
#include <set>

#include "error.hpp"
#include "gtest/gtest.h"

namespace slhash {
namespace {

// Direct evaluation over all (a, b); independent of the incremental scans.
u64 brute_force_count(u64 p, u64 m, const std::vector<u64>& points,
                      const std::vector<long long>& targets = {}) {
  u64 count = 0;
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) {
      bool ok = true;
      const u64 first = (a * points[0] + b) % p % m;
      for (std::size_t i = 0; i < points.size() && ok; ++i) {
        const u64 bin = (a * points[i] + b) % p % m;
        ok = targets.empty() ? bin == first : bin == static_cast<u64>(targets[i]);
      }
      count += ok ? 1 : 0;
    }
  }
  return count;
}

TEST(TripleCollisionTest, FrozenSnapshots) {
  // Values computed once by an independent enumeration script.
  EXPECT_EQ(count_triple_collisions(Modulus(13, 3), 0, 1, 2).satisfying_pairs, 29u);
  EXPECT_EQ(count_triple_collisions(Modulus(13, 3), 0, 1, 2).total_pairs, 169u);
  const Modulus mod(257, 16);
  EXPECT_EQ(count_triple_collisions(mod, 0, 1, 2).satisfying_pairs, 2065u);
  EXPECT_EQ(count_triple_collisions(mod, 0, 1, 3).satisfying_pairs, 1387u);
  EXPECT_EQ(count_triple_collisions(mod, 0, 1, 128).satisfying_pairs, 1387u);
  EXPECT_EQ(count_triple_collisions(mod, 0, 1, 129).satisfying_pairs, 2065u);
  EXPECT_EQ(count_triple_collisions(mod, 0, 1, 256).satisfying_pairs, 2065u);
}

TEST(TripleCollisionTest, FullRangeOnlyConstantFunctionsCollide) {
  // m = p: distinct points collide only under a = 0, one pair per b.
  EXPECT_EQ(count_triple_collisions(Modulus(13, 13), 0, 1, 2).satisfying_pairs, 13u);
  EXPECT_EQ(count_triple_collisions(Modulus(13, 13), 4, 9, 11).satisfying_pairs, 13u);
}

TEST(TripleCollisionTest, SingleBinEverythingCollides) {
  const Modulus mod(31, 1);
  EXPECT_EQ(count_triple_collisions(mod, 3, 17, 30).satisfying_pairs, 31u * 31u);
}

TEST(TripleCollisionTest, AgreesWithBruteForce) {
  std::mt19937_64 gen(5);
  for (const auto& [p, m] : std::vector<std::pair<u64, u64>>{{13, 3}, {31, 4}, {97, 7}, {101, 10}}) {
    const Modulus mod(p, m);
    for (int i = 0; i < 20; ++i) {
      u64 x = gen() % p, y = gen() % p, z = gen() % p;
      if (x == y || y == z || x == z) continue;
      ASSERT_EQ(count_triple_collisions(mod, x, y, z).satisfying_pairs,
                brute_force_count(p, m, {x, y, z}));
      const long long ix = gen() % m, iy = gen() % m, iz = gen() % m;
      ASSERT_EQ(count_prescribed_triple(mod, x, y, z, ix, iy, iz).satisfying_pairs,
                brute_force_count(p, m, {x, y, z}, {ix, iy, iz}));
    }
  }
}

TEST(TripleCollisionTest, RejectsRepeatedElements) {
  const Modulus mod(13, 3);
  EXPECT_THROW(count_triple_collisions(mod, 1, 1, 2), DomainError);
  EXPECT_THROW(count_triple_collisions(mod, 0, 1, 13), DomainError);
  EXPECT_THROW(count_prescribed_triple(mod, 0, 1, 2, 0, 0, 3), DomainError);
}

TEST(TripleCollisionTest, WorkerCountDoesNotChangeCounts) {
  const Modulus mod(257, 16);
  for (unsigned workers : {1u, 2u, 3u, 7u}) {
    EXPECT_EQ(count_triple_collisions(mod, 0, 1, 5, {workers, kDefaultBudget}).satisfying_pairs,
              count_triple_collisions(mod, 0, 1, 5).satisfying_pairs);
    EXPECT_EQ(count_interval_collision(mod, 4, {workers, kDefaultBudget}),
              count_interval_collision(mod, 4));
  }
}

TEST(CanonicalizeTest, Examples) {
  EXPECT_EQ(canonicalize_triple(13, 0, 1, 7), (CanonicalTriple{7, 1, 0}));
  EXPECT_EQ(canonicalize_triple(13, 2, 5, 11), (CanonicalTriple{3, 3, 2}));
  // alpha = -3 = 10, 10^{-1} = 4, d = 4 * 6 mod 13 = 11.
  EXPECT_EQ(canonicalize_triple(13, 5, 2, 11), (CanonicalTriple{11, 10, 5}));
  EXPECT_THROW(canonicalize_triple(13, 5, 5, 11), DomainError);
  EXPECT_THROW(canonicalize_triple(12, 0, 1, 2), DomainError);
}

TEST(CanonicalizeTest, PreservesCounts) {
  const Modulus mod(13, 3);
  EXPECT_EQ(count_prescribed_triple(mod, 2, 5, 11, 0, 1, 2).satisfying_pairs, 6u);
  EXPECT_EQ(count_prescribed_triple(mod, 0, 1, 3, 0, 1, 2).satisfying_pairs, 6u);
  EXPECT_EQ(count_prescribed_triple(mod, 5, 2, 11, 0, 1, 2).satisfying_pairs, 7u);
  EXPECT_EQ(count_prescribed_triple(mod, 0, 1, 11, 0, 1, 2).satisfying_pairs, 7u);
  EXPECT_EQ(count_triple_collisions(mod, 2, 5, 11), count_triple_collisions(mod, 0, 1, 3));
}

TEST(CanonicalizeTest, DNeverZeroOrOneAndMapsBack) {
  const u64 p = 31;
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y)
      for (u64 z = 0; z < p; ++z) {
        if (x == y || y == z || x == z) continue;
        const auto t = canonicalize_triple(p, x, y, z);
        ASSERT_NE(t.d, 0u);
        ASSERT_NE(t.d, 1u);
        ASSERT_EQ((t.alpha * t.d + t.beta) % p, z);
        ASSERT_EQ((t.alpha + t.beta) % p, y);
      }
}

TEST(PrescribedTripleTest, SumsToCollisionCount) {
  const Modulus mod(97, 7);
  u64 total = 0;
  for (u64 i = 0; i < 7; ++i) total += count_prescribed_triple(mod, 3, 40, 81, i, i, i).satisfying_pairs;
  EXPECT_EQ(total, count_triple_collisions(mod, 3, 40, 81).satisfying_pairs);
  EXPECT_EQ(count_prescribed_triple(Modulus(13, 1), 0, 1, 2, 0, 0, 0).satisfying_pairs, 169u);
}

TEST(IntervalCollisionTest, FrozenSnapshots) {
  const Modulus mod(197, 8);
  const std::vector<u64> expected = {4853, 2429, 1621, 1217, 973, 813, 707};
  for (u64 d = 2; d <= 8; ++d) {
    EXPECT_EQ(count_interval_collision(mod, d).satisfying_pairs, expected[d - 2]) << d;
  }
  EXPECT_EQ(count_interval_collision(Modulus(797, 16), 16).satisfying_pairs, 2699u);
}

TEST(IntervalCollisionTest, SingleBinAndBruteForce) {
  EXPECT_EQ(count_interval_collision(Modulus(31, 1), 2).satisfying_pairs, 961u);
  const Modulus mod(61, 5);
  for (u64 d : {2u, 3u, 6u, 20u, 61u}) {
    std::vector<u64> pts(d);
    for (u64 i = 0; i < d; ++i) pts[i] = i;
    EXPECT_EQ(count_interval_collision(mod, d).satisfying_pairs, brute_force_count(61, 5, pts));
  }
}

TEST(IntervalCollisionTest, NonIncreasingInLength) {
  const Modulus mod(257, 16);
  u64 prev = count_interval_collision(mod, 2).satisfying_pairs;
  for (u64 d = 3; d <= 257; d += 7) {
    const u64 cur = count_interval_collision(mod, d).satisfying_pairs;
    ASSERT_LE(cur, prev) << d;
    prev = cur;
  }
  EXPECT_THROW(count_interval_collision(mod, 1), DomainError);
  EXPECT_THROW(count_interval_collision(mod, 258), DomainError);
}

TEST(BoundFormulaTest, Substitution) {
  const Modulus mod(197, 8);
  const auto b = triple_bound_formula(mod, 2);
  EXPECT_EQ(b.statement, Rational(1049, 12608));
  // (dm + d + p)(m + d) / (d m^2 p) = 215 * 10 / 25216.
  EXPECT_EQ(b.proof, Rational(2150, 25216));
  // (1 + ceil(99/8)) * (1 + ceil(2/8)) / p = 14 * 2 / 197.
  EXPECT_EQ(b.ceiling, Rational(28, 197));
  // p < dm switches the statement form to (2m + d) / (mp).
  EXPECT_EQ(triple_bound_formula(mod, 100).statement, Rational(116, 8 * 197));
  EXPECT_THROW(triple_bound_formula(mod, 1), DomainError);
  EXPECT_THROW(triple_bound_formula(mod, 197), DomainError);
}

TEST(BoundFormulaTest, ProofFormDominatesExactProbability) {
  const Modulus mod(257, 16);
  for (u64 d = 2; d < 257; ++d) {
    ASSERT_LE(count_triple_collisions(mod, 0, 1, d).probability(),
              triple_bound_formula(mod, d).proof) << d;
  }
}

TEST(BoundFormulaTest, CollisionCurveDecreasesBelowPOverM) {
  const Modulus mod(21787, 512);
  const auto b2 = triple_bound_formula(mod, 2);
  const auto b40 = triple_bound_formula(mod, 40);
  EXPECT_GT(b2.statement, b40.statement);
  EXPECT_GT(b2.proof, b40.proof);
}

TEST(IntervalLowerBoundTest, Values) {
  EXPECT_EQ(interval_lower_bound(Modulus(197, 8), 2), Rational(1, 96));
  EXPECT_EQ(interval_lower_bound(Modulus(197, 8), 8), Rational(1, 384));
  EXPECT_EQ(interval_lower_bound(Modulus(797, 16), 16), Rational(1, 1536));
  EXPECT_GE(count_interval_collision(Modulus(197, 8), 8).probability(), Rational(1, 384));
  EXPECT_GE(count_interval_collision(Modulus(797, 16), 16).probability(), Rational(1, 1536));
  EXPECT_THROW(interval_lower_bound(Modulus(197, 8), 9), DomainError);
  EXPECT_THROW(interval_lower_bound(Modulus(191, 8), 2), DomainError);  // 191 < 192
}

TEST(HistogramTest, FrozenSnapshots) {
  const Modulus mod(257, 16);
  const auto ks = KeySet::interval(16);
  const auto zero = exact_maxload_histogram(mod, ks, BMode::kBZero);
  const std::map<u64, u64> expected_zero = {{1, 12}, {2, 177}, {3, 37}, {4, 14}, {5, 6},
                                            {6, 4},  {8, 3},   {9, 1},  {15, 1}, {16, 2}};
  EXPECT_EQ(zero.counts, expected_zero);
  EXPECT_EQ(zero.total, 257u);

  const auto all = exact_maxload_histogram(mod, ks, BMode::kAllB, {3, kDefaultBudget});
  const std::map<u64, u64> expected_all = {
      {1, 2868}, {2, 46354}, {3, 8952}, {4, 4052}, {5, 978},  {6, 1190},
      {7, 64},   {8, 836},   {9, 80},   {10, 64},  {11, 64},  {12, 64},
      {13, 64},  {14, 64},   {15, 64},  {16, 291}};
  EXPECT_EQ(all.counts, expected_all);
  EXPECT_EQ(all.total, 66049u);
  EXPECT_EQ(all.mean(), Rational(167982, 66049));
}

TEST(HistogramTest, TailsAndModes) {
  const Modulus mod(257, 16);
  const auto ks = KeySet::interval(16);
  const auto all = exact_maxload_histogram(mod, ks, BMode::kAllB);
  const auto zero = exact_maxload_histogram(mod, ks, BMode::kBZero);
  EXPECT_EQ(all.tail(1), Rational(1, 1));
  for (u64 l = 1; l < 17; ++l) EXPECT_GE(all.tail(l), all.tail(l + 1));
  // b only shifts bins: every all-b max load is within a factor 2 of some
  // b = 0 max load, so the tails are bracketed.
  for (u64 l = 2; l <= 16; ++l) {
    EXPECT_LE(all.tail(2 * l), zero.tail(l)) << l;
    EXPECT_LE(zero.tail(2 * l), all.tail(l)) << l;
  }
  const auto single = exact_maxload_histogram(Modulus(13, 1), KeySet::interval(5), BMode::kAllB);
  EXPECT_EQ(single.counts, (std::map<u64, u64>{{5, 169}}));
}

TEST(HistogramTest, BudgetRefusal) {
  const Modulus mod(21787, 512);
  EXPECT_THROW(exact_maxload_histogram(mod, KeySet::interval(512), BMode::kAllB),
               BudgetExceeded);
  EXPECT_THROW(count_triple_collisions(Modulus(257, 16), 0, 1, 2, {1, 1000}),
               BudgetExceeded);
}

}  // namespace
}  // namespace slhash
