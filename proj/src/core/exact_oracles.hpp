#pragma once

// Exact event probabilities by enumerating every (a, b) in [p]^2.
//
// Enumeration is a-major. Each worker owns a contiguous range of a and keeps
// its own integer counters; partial counts are merged by addition once, so
// the results do not depend on the number of workers.

#include <cstdint>
#include <map>

#include "field.hpp"
#include "load_stats.hpp"
#include "rational.hpp"

namespace slhash {

inline constexpr u64 kDefaultBudget = u64{1} << 33;

struct EnumOptions {
  unsigned workers = 1;        // 0 = hardware concurrency
  u64 budget = kDefaultBudget; // maximum hash evaluations per call
};

/// Number of (a, b) pairs for which an event holds, out of p^2.
struct CollisionStats {
  u64 satisfying_pairs = 0;
  u64 total_pairs = 0;

  Rational probability() const { return Rational(satisfying_pairs, total_pairs); }

  bool operator==(const CollisionStats&) const = default;
};

/// (x, y, z) rewritten as (0, 1, d) via x = beta, y = alpha + beta,
/// z = alpha*d + beta.
struct CanonicalTriple {
  u64 d = 0;
  u64 alpha = 0;
  u64 beta = 0;

  bool operator==(const CanonicalTriple&) const = default;
};

/// Candidate upper bounds on Pr[|h({0, 1, d})| = 1].
struct TripleBounds {
  /// (1 + max(1, p/(dm)) * (1 + d/m)) / p, the headline form.
  Rational statement;
  /// (1 + (1 + p/d)/m) * (1 + d/m) / p, the derived form.
  Rational proof;
  /// (1 + ceil(ceil(p/d)/m)) * (1 + ceil(d/m)) / p, the per-b integer count
  /// before smoothing.
  Rational ceiling;
};

enum class BMode { kAllB, kBZero };

/// Distribution of the maximum load over the enumerated hash functions.
struct MaxLoadHistogram {
  std::map<u64, u64> counts;  // max load -> number of parameter tuples
  u64 total = 0;

  Rational mean() const;
  /// Fraction of tuples with max load >= l.
  Rational tail(u64 l) const;
};

/// Throws BudgetExceeded if `evaluations` exceeds the configured budget.
void require_budget(unsigned __int128 evaluations, const EnumOptions& opts,
                    const char* what);

/// Pairs (a, b) with h(x) = h(y) = h(z). Throws DomainError unless x, y, z
/// are pairwise distinct elements of [p].
CollisionStats count_triple_collisions(const Modulus& mod, u64 x, u64 y, u64 z,
                                       const EnumOptions& opts = {});

/// Pairs (a, b) with h(x) = ix, h(y) = iy, h(z) = iz.
CollisionStats count_prescribed_triple(const Modulus& mod, u64 x, u64 y, u64 z,
                                       u64 ix, u64 iy, u64 iz,
                                       const EnumOptions& opts = {});

/// Pairs (a, b) mapping all of [d] into a single bin; 2 <= d <= p.
CollisionStats count_interval_collision(const Modulus& mod, u64 d,
                                        const EnumOptions& opts = {});

/// Throws DomainError unless p is prime and x, y, z are distinct in [p].
CanonicalTriple canonicalize_triple(u64 p, u64 x, u64 y, u64 z);

/// Requires 2 <= d < p.
TripleBounds triple_bound_formula(const Modulus& mod, u64 d);

/// 1/(6dm). Only claimed for 1 <= d <= m and p > 3m^2; throws DomainError
/// outside that range.
Rational interval_lower_bound(const Modulus& mod, u64 d);

/// Histogram of max loads over all (a, b) (kAllB) or over (a, 0) for every a
/// (kBZero).
MaxLoadHistogram exact_maxload_histogram(const Modulus& mod, const KeySet& ks,
                                         BMode mode,
                                         const EnumOptions& opts = {});

}  // namespace slhash
