#include "estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace slhash {

namespace {

using Histogram = std::map<u64, u64>;

Histogram merge(const std::vector<Histogram>& parts) {
  Histogram out;
  for (const auto& part : parts) {
    for (const auto& [load, count] : part) out[load] += count;
  }
  return out;
}

}  // namespace

McEstimate summarize(std::map<u64, u64> histogram, u64 seed) {
  McEstimate est;
  est.seed = seed;
  est.generator = kGeneratorName;
  for (const auto& [load, count] : histogram) est.samples += count;
  if (est.samples == 0) throw DomainError("empty max-load histogram");

  const auto n = static_cast<long double>(est.samples);
  long double total = 0;
  for (const auto& [load, count] : histogram) {
    total += static_cast<long double>(load) * count;
  }
  est.mean = total / n;
  if (est.samples > 1) {
    long double ss = 0;
    for (const auto& [load, count] : histogram) {
      const long double dev = static_cast<long double>(load) - est.mean;
      ss += dev * dev * count;
    }
    est.std_error = std::sqrt(ss / (n - 1)) / std::sqrt(n);
  }

  const u64 max_seen = histogram.rbegin()->first;
  u64 at_least = 0;
  auto it = histogram.rbegin();
  for (u64 l = max_seen; l >= 1; --l) {
    while (it != histogram.rend() && it->first >= l) {
      at_least += it->second;
      ++it;
    }
    est.tail[l] = static_cast<long double>(at_least) / n;
  }
  est.histogram = std::move(histogram);
  return est;
}

McEstimate mc_linear_maxload(const McConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("Monte Carlo needs at least one sample");
  const auto keys = cfg.key_set.materialize(cfg.mod);
  const u64 p = cfg.mod.p();
  const auto parts =
      map_chunks<Histogram>(cfg.samples, cfg.workers, [&](u64 lo, u64 hi) {
        MaxLoadCounter counter(cfg.mod);
        Histogram local;
        for (u64 i = lo; i < hi; ++i) {
          auto gen = substream(cfg.seed, i);
          const u64 a = uniform_below(gen, p);
          const u64 b = uniform_below(gen, p);
          ++local[counter.max_load(HashParams{a, b}, keys)];
        }
        return local;
      });
  auto est = summarize(merge(parts), cfg.seed);
  est.notes.push_back("a=0 included in sampled family");
  const auto m = static_cast<unsigned __int128>(cfg.mod.m());
  if (static_cast<unsigned __int128>(p) < m * m) {
    est.notes.push_back("p < m^2: outside the constant max-load regime");
  }
  return est;
}

McEstimate mc_fully_random_maxload(u64 m, u64 balls, u64 samples, u64 seed,
                                   unsigned workers) {
  if (m < 1 || balls < 1 || samples < 1) {
    throw DomainError("fully random baseline needs m, balls, samples >= 1");
  }
  const auto parts =
      map_chunks<Histogram>(samples, workers, [&](u64 lo, u64 hi) {
        std::vector<std::uint32_t> bins(m, 0);
        Histogram local;
        for (u64 i = lo; i < hi; ++i) {
          auto gen = substream(seed, i);
          std::fill(bins.begin(), bins.end(), 0);
          std::uint32_t best = 0;
          for (u64 k = 0; k < balls; ++k) {
            best = std::max(best, ++bins[uniform_below(gen, m)]);
          }
          ++local[best];
        }
        return local;
      });
  return summarize(merge(parts), seed);
}

std::vector<long double> fully_random_maxload_pmf(u64 m, u64 balls) {
  if (m < 1 || balls < 1) throw DomainError("pmf needs m, balls >= 1");
  // Pr[max <= k] = balls! / m^balls * [x^balls] (sum_{j<=k} x^j / j!)^m,
  // evaluated bin by bin on truncated polynomials.
  std::vector<long double> inv_fact(balls + 1, 1.0L);
  for (u64 j = 1; j <= balls; ++j) inv_fact[j] = inv_fact[j - 1] / j;
  const long double log_scale =
      std::lgamma(static_cast<long double>(balls) + 1) -
      static_cast<long double>(balls) * std::log(static_cast<long double>(m));

  std::vector<long double> cdf(balls + 1, 0.0L);
  for (u64 k = 1; k <= balls; ++k) {
    std::vector<long double> poly(balls + 1, 0.0L);
    poly[0] = 1.0L;
    for (u64 bin = 0; bin < m; ++bin) {
      std::vector<long double> next(balls + 1, 0.0L);
      for (u64 t = 0; t <= balls; ++t) {
        if (poly[t] == 0) continue;
        for (u64 j = 0; j <= k && t + j <= balls; ++j) {
          next[t + j] += poly[t] * inv_fact[j];
        }
      }
      poly.swap(next);
    }
    cdf[k] = std::min(1.0L, std::exp(log_scale + std::log(poly[balls])));
  }
  std::vector<long double> pmf(balls + 1, 0.0L);
  for (u64 k = 1; k <= balls; ++k) pmf[k] = std::max(0.0L, cdf[k] - cdf[k - 1]);
  return pmf;
}

std::optional<double> tail_loglog_slope(const McEstimate& est, u64 lo, u64 hi,
                                        long double min_tail) {
  std::vector<std::pair<long double, long double>> pts;
  for (u64 l = lo; l <= hi; ++l) {
    const auto it = est.tail.find(l);
    if (it == est.tail.end() || it->second < min_tail || it->second <= 0) {
      continue;
    }
    pts.emplace_back(std::log(static_cast<long double>(l)), std::log(it->second));
  }
  if (pts.size() < 2) return std::nullopt;
  long double sx = 0, sy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const long double n = pts.size();
  const long double mx = sx / n, my = sy / n;
  long double sxy = 0, sxx = 0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return static_cast<double>(sxy / sxx);
}

std::vector<ScalingRow> scaling_study(const std::vector<u64>& m_values,
                                      u64 samples, u64 seed,
                                      unsigned workers) {
  std::vector<ScalingRow> rows;
  rows.reserve(m_values.size());
  for (u64 m : m_values) {
    if (m < 2) throw DomainError("scaling study needs every m >= 2");
    const auto m2 = static_cast<unsigned __int128>(m) * m;
    if (m2 > (u64{1} << 62)) throw OverflowError("m^2 too large");
    const u64 p = next_prime_at_least(static_cast<u64>(m2));
    Modulus mod(p, m);
    ScalingRow row{m, p,
                   mc_linear_maxload(McConfig{samples, seed, mod,
                                              KeySet::interval(m), workers}),
                   mc_fully_random_maxload(m, m, samples, seed, workers)};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slhash
