#include "field.hpp"

#include <random>
#include <vector>

#include "error.hpp"
#include "gtest/gtest.h"

namespace slhash {
namespace {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

u64 trial_division_next_prime(u64 n) {
  while (!trial_division_prime(n)) ++n;
  return n;
}

TEST(FieldTest, IsPrimeExamples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(21787));
  EXPECT_FALSE(is_prime(21788));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(FieldTest, IsPrimeAgreesWithTrialDivision) {
  for (u64 n = 0; n < 200000; ++n) {
    ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
  }
}

TEST(FieldTest, IsPrimeRejectsStrongPseudoprimes) {
  // Carmichael numbers and strong pseudoprimes to several small bases.
  for (u64 n : {561ULL, 2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL,
                2152302898747ULL, 3474749660383ULL, 341550071728321ULL,
                3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime(2147483647ULL));           // 2^31 - 1
  EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ULL)); // largest 64-bit prime
}

TEST(FieldTest, NextPrimeExamples) {
  EXPECT_EQ(next_prime_at_least(2), 2u);
  EXPECT_EQ(next_prime_at_least(256), trial_division_next_prime(256));
  EXPECT_EQ(next_prime_at_least(256), 257u);
  EXPECT_EQ(next_prime_at_least(1024), trial_division_next_prime(1024));
  EXPECT_EQ(next_prime_at_least(1024), 1031u);
  EXPECT_EQ(next_prime_at_least(1048576), trial_division_next_prime(1048576));
}

TEST(FieldTest, NextPrimeErrors) {
  EXPECT_THROW(next_prime_at_least(1), DomainError);
  EXPECT_THROW(next_prime_at_least(18446744073709551558ULL), OverflowError);
}

TEST(FieldTest, ModInverseExamples) {
  EXPECT_EQ(mod_inverse(1, 13), 1u);
  EXPECT_EQ(mod_inverse(3, 13), 9u);
  EXPECT_EQ(3 * 9 % 13, 1);
  EXPECT_THROW(mod_inverse(0, 13), DomainError);
}

TEST(FieldTest, ModInverseProperty) {
  std::mt19937_64 gen(7);
  for (u64 p : {13ULL, 257ULL, 21787ULL, 2147483647ULL, 2305843009213693951ULL}) {
    std::uniform_int_distribution<u64> pick(1, p - 1);
    for (int i = 0; i < 200; ++i) {
      const u64 x = pick(gen);
      const u64 y = mod_inverse(x, p);
      ASSERT_LT(y, p);
      ASSERT_EQ(mul_mod(x, y, p), 1u) << x << " mod " << p;
    }
  }
}

TEST(FieldTest, ModInverseIsAnInvolution) {
  const u64 p = 257;
  for (u64 x = 1; x < p; ++x) {
    ASSERT_EQ(mod_inverse(mod_inverse(x, p), p), x);
  }
}

TEST(FieldTest, ModulusValidation) {
  EXPECT_NO_THROW(Modulus(13, 13));
  EXPECT_NO_THROW(Modulus(2, 1));
  EXPECT_THROW(Modulus(12, 3), DomainError);
  EXPECT_THROW(Modulus(13, 0), DomainError);
  EXPECT_THROW(Modulus(13, 14), DomainError);
}

TEST(FieldTest, EvalExamples) {
  const Modulus m13(13, 4);
  EXPECT_EQ(eval_full({1, 0}, m13, 5), 5u);
  EXPECT_EQ(eval_full({3, 2}, m13, 5), 4u);
  EXPECT_EQ(eval_full({12, 0}, m13, 1), 12u);
  EXPECT_EQ(eval_binned({1, 0}, m13, 6), 2u);
  EXPECT_EQ(eval_binned({3, 2}, m13, 5), 0u);
  for (u64 x = 0; x < 13; ++x) EXPECT_EQ(eval_binned({0, 7}, m13, x), 7u % 4);
}

TEST(FieldTest, LeapsExamples) {
  const Modulus mod(13, 4);
  for (u64 x = 0; x < 13; ++x) EXPECT_EQ(leaps({1, 0}, mod, x).value, 0u);
  for (u64 a = 0; a < 13; ++a) {
    for (u64 b = 0; b < 13; ++b) EXPECT_EQ(leaps({a, b}, mod, 0).value, 0u);
  }
  EXPECT_EQ(leaps({12, 12}, mod, 1).value, 1u);
}

// Range, reconstruction and leap bounds for every (a, b, x) at small p.
TEST(FieldTest, ExhaustiveFamilyInvariants) {
  for (const auto& [p, m] : std::vector<std::pair<u64, u64>>{{13, 4}, {31, 5}, {97, 10}}) {
    const Modulus mod(p, m);
    for (u64 a = 0; a < p; ++a) {
      for (u64 b = 0; b < p; ++b) {
        for (u64 x = 0; x < p; ++x) {
          const HashParams h{a, b};
          const u64 full = eval_full(h, mod, x);
          const u64 bin = eval_binned(h, mod, x);
          const u64 l = leaps(h, mod, x).value;
          ASSERT_LT(full, p);
          ASSERT_LT(bin, m);
          ASSERT_LE(l, x);
          ASSERT_EQ(bin, (a * x + b - l * p) % m);
        }
      }
    }
  }
}

// Any distinct x, y and targets (i, j) are realized by exactly one (a, b).
TEST(FieldTest, FullRangeFamilyIsExactlyTwoIndependent) {
  const u64 p = 13;
  const Modulus mod(p, p);
  for (u64 x = 0; x < p; ++x) {
    for (u64 y = 0; y < p; ++y) {
      if (x == y) continue;
      std::vector<int> hits(p * p, 0);
      for (u64 a = 0; a < p; ++a) {
        for (u64 b = 0; b < p; ++b) {
          ++hits[eval_full({a, b}, mod, x) * p + eval_full({a, b}, mod, y)];
        }
      }
      for (int h : hits) ASSERT_EQ(h, 1);
    }
  }
}

TEST(FieldTest, NoOverflowForLargeModuli) {
  std::mt19937_64 gen(11);
  for (u64 p : {2147483647ULL, 4294967291ULL, 2305843009213693951ULL}) {
    const Modulus mod(p, 1000);
    std::uniform_int_distribution<u64> pick(0, p - 1);
    for (int i = 0; i < 1000; ++i) {
      const u64 a = pick(gen), b = pick(gen), x = pick(gen);
      const auto wide = static_cast<u128>(a) * x + b;
      ASSERT_EQ(eval_full({a, b}, mod, x), static_cast<u64>(wide % p));
      ASSERT_EQ(leaps({a, b}, mod, x).value, static_cast<u64>(wide / p));
    }
  }
}

}  // namespace
}  // namespace slhash
