#include "exact_oracles.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "parallel.hpp"

namespace slhash {

namespace {

// Tracks v = (a*x + b) mod p and v mod m while b increases by one.
struct Cursor {
  u64 v;
  u64 r;

  Cursor(u64 start, u64 m) : v(start), r(start % m) {}

  void advance(u64 p, u64 m) {
    if (++v == p) {
      v = 0;
      r = 0;
    } else if (++r == m) {
      r = 0;
    }
  }
};

// Counts (a, b) with a in [a_begin, a_end), b in [p] for which
// pred(h(x), h(y), h(z)) holds.
template <class Pred>
u64 scan_triple(const Modulus& mod, u64 a_begin, u64 a_end, u64 x, u64 y,
                u64 z, Pred pred) {
  const u64 p = mod.p();
  const u64 m = mod.m();
  u64 count = 0;
  for (u64 a = a_begin; a < a_end; ++a) {
    Cursor cx(mul_mod(a, x, p), m);
    Cursor cy(mul_mod(a, y, p), m);
    Cursor cz(mul_mod(a, z, p), m);
    for (u64 b = 0; b < p; ++b) {
      count += pred(cx.r, cy.r, cz.r) ? 1 : 0;
      cx.advance(p, m);
      cy.advance(p, m);
      cz.advance(p, m);
    }
  }
  return count;
}

void check_distinct_triple(u64 p, u64 x, u64 y, u64 z) {
  if (x >= p || y >= p || z >= p) {
    throw DomainError("triple elements must lie in [p]");
  }
  if (x == y || y == z || x == z) {
    throw DomainError("triple elements must be pairwise distinct");
  }
}

u64 sum(const std::vector<u64>& parts) {
  return std::accumulate(parts.begin(), parts.end(), u64{0});
}

unsigned __int128 square(u64 p) { return static_cast<unsigned __int128>(p) * p; }

u64 ceil_div(u64 x, u64 y) { return x / y + (x % y != 0 ? 1 : 0); }

}  // namespace

void require_budget(unsigned __int128 evaluations, const EnumOptions& opts,
                    const char* what) {
  if (evaluations > opts.budget) {
    throw BudgetExceeded(
        std::string(what) + " needs " +
        std::to_string(static_cast<long double>(evaluations)) +
        " hash evaluations, over the budget of " + std::to_string(opts.budget) +
        "; use a smaller p or a Monte Carlo estimate");
  }
}

CollisionStats count_triple_collisions(const Modulus& mod, u64 x, u64 y, u64 z,
                                       const EnumOptions& opts) {
  check_distinct_triple(mod.p(), x, y, z);
  require_budget(3 * square(mod.p()), opts, "triple collision count");
  const auto parts = map_chunks<u64>(mod.p(), opts.workers, [&](u64 lo, u64 hi) {
    return scan_triple(mod, lo, hi, x, y, z,
                       [](u64 rx, u64 ry, u64 rz) { return rx == ry && ry == rz; });
  });
  return CollisionStats{sum(parts), static_cast<u64>(square(mod.p()))};
}

CollisionStats count_prescribed_triple(const Modulus& mod, u64 x, u64 y, u64 z,
                                       u64 ix, u64 iy, u64 iz,
                                       const EnumOptions& opts) {
  check_distinct_triple(mod.p(), x, y, z);
  if (ix >= mod.m() || iy >= mod.m() || iz >= mod.m()) {
    throw DomainError("prescribed bins must lie in [m]");
  }
  require_budget(3 * square(mod.p()), opts, "prescribed triple count");
  const auto parts = map_chunks<u64>(mod.p(), opts.workers, [&](u64 lo, u64 hi) {
    return scan_triple(mod, lo, hi, x, y, z, [=](u64 rx, u64 ry, u64 rz) {
      return rx == ix && ry == iy && rz == iz;
    });
  });
  return CollisionStats{sum(parts), static_cast<u64>(square(mod.p()))};
}

CollisionStats count_interval_collision(const Modulus& mod, u64 d,
                                        const EnumOptions& opts) {
  const u64 p = mod.p();
  const u64 m = mod.m();
  if (d < 2 || d > p) {
    throw DomainError("interval length d = " + std::to_string(d) +
                      " must satisfy 2 <= d <= p");
  }
  require_budget(d * square(p), opts, "interval collision count");
  const auto parts = map_chunks<u64>(p, opts.workers, [&](u64 lo, u64 hi) {
    u64 count = 0;
    for (u64 a = lo; a < hi; ++a) {
      for (u64 b = 0; b < p; ++b) {
        const u64 bin = b % m;
        u64 v = b;
        u64 x = 1;
        for (; x < d; ++x) {
          v += a;
          if (v >= p) v -= p;
          if (v % m != bin) break;
        }
        count += (x == d) ? 1 : 0;
      }
    }
    return count;
  });
  return CollisionStats{sum(parts), static_cast<u64>(square(p))};
}

CanonicalTriple canonicalize_triple(u64 p, u64 x, u64 y, u64 z) {
  if (!is_prime(p)) throw DomainError("canonicalize_triple requires prime p");
  check_distinct_triple(p, x, y, z);
  const u64 alpha = (y + p - x) % p;
  const u64 beta = x;
  const u64 d = mul_mod(mod_inverse(alpha, p), (z + p - beta) % p, p);
  return CanonicalTriple{d, alpha, beta};
}

TripleBounds triple_bound_formula(const Modulus& mod, u64 d) {
  using u128 = unsigned __int128;
  const u128 p = mod.p();
  const u128 m = mod.m();
  if (d < 2 || d >= mod.p()) {
    throw DomainError("bound formula requires 2 <= d < p");
  }
  TripleBounds out;
  if (p >= d * m) {
    out.statement = Rational(d * m * m + p * (m + d), d * m * m * p);
  } else {
    out.statement = Rational(2 * m + d, m * p);
  }
  out.proof = Rational((d * m + d + p) * (m + d), d * m * m * p);
  const u64 per_interval = ceil_div(ceil_div(mod.p(), d), mod.m());
  const u64 intervals = ceil_div(d, mod.m());
  out.ceiling = Rational(static_cast<u128>(1 + per_interval) * (1 + intervals), p);
  return out;
}

Rational interval_lower_bound(const Modulus& mod, u64 d) {
  const auto m = static_cast<unsigned __int128>(mod.m());
  if (d < 1 || d > mod.m()) {
    throw DomainError("interval lower bound requires 1 <= d <= m");
  }
  if (static_cast<unsigned __int128>(mod.p()) <= 3 * m * m) {
    throw DomainError("interval lower bound requires p > 3m^2");
  }
  return Rational(1, 6 * static_cast<unsigned __int128>(d) * m);
}

Rational MaxLoadHistogram::mean() const {
  unsigned __int128 weighted = 0;
  for (const auto& [load, count] : counts) {
    weighted += static_cast<unsigned __int128>(load) * count;
  }
  return Rational(weighted, total);
}

Rational MaxLoadHistogram::tail(u64 l) const {
  u64 at_least = 0;
  for (auto it = counts.lower_bound(l); it != counts.end(); ++it) {
    at_least += it->second;
  }
  return Rational(at_least, total);
}

MaxLoadHistogram exact_maxload_histogram(const Modulus& mod, const KeySet& ks,
                                         BMode mode, const EnumOptions& opts) {
  const auto keys = ks.materialize(mod);
  const u64 p = mod.p();
  const u64 b_count = mode == BMode::kAllB ? p : 1;
  require_budget(static_cast<unsigned __int128>(p) * b_count * keys.size(),
                 opts, "exact max-load histogram");
  using Counts = std::map<u64, u64>;
  const auto parts = map_chunks<Counts>(p, opts.workers, [&](u64 lo, u64 hi) {
    MaxLoadCounter counter(mod);
    Counts local;
    for (u64 a = lo; a < hi; ++a) {
      for (u64 b = 0; b < b_count; ++b) {
        ++local[counter.max_load(HashParams{a, b}, keys)];
      }
    }
    return local;
  });
  MaxLoadHistogram out;
  for (const auto& part : parts) {
    for (const auto& [load, count] : part) out.counts[load] += count;
  }
  out.total = p * b_count;
  return out;
}

}  // namespace slhash
