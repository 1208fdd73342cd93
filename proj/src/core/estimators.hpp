#pragma once

// Monte Carlo estimates of the maximum load, for the simple linear family
// and for the fully random baseline.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "load_stats.hpp"

namespace slhash {

struct McConfig {
  u64 samples = 1;
  u64 seed = 0;
  Modulus mod;
  KeySet key_set;
  unsigned workers = 1;
};

struct McEstimate {
  long double mean = 0;
  long double std_error = 0;      // sample stddev / sqrt(samples)
  std::map<u64, long double> tail;  // l -> fraction of samples with max >= l
  std::map<u64, u64> histogram;     // max load -> sample count
  u64 samples = 0;
  u64 seed = 0;
  std::string generator;
  std::vector<std::string> notes;
};

/// Builds mean, standard error and tail from a histogram of integer max
/// loads. Exposed so exact and sampled distributions share one code path.
McEstimate summarize(std::map<u64, u64> histogram, u64 seed);

/// Draws (a, b) uniformly from [p]^2 (a = 0 included) per sample.
/// A note is attached, not an error, when p < m^2.
McEstimate mc_linear_maxload(const McConfig& cfg);

/// Each sample throws `balls` balls independently and uniformly into m bins.
McEstimate mc_fully_random_maxload(u64 m, u64 balls, u64 samples, u64 seed,
                                   unsigned workers = 1);

/// Exact distribution of the max load when `balls` balls are thrown into m
/// bins uniformly at random: element k is Pr[max load = k]. Intended for
/// small m and balls (<= a few hundred).
std::vector<long double> fully_random_maxload_pmf(u64 m, u64 balls);

/// Least-squares slope of log(tail[l]) against log(l) over l in [lo, hi],
/// using only points with tail[l] >= min_tail. Empty if fewer than two
/// points qualify.
std::optional<double> tail_loglog_slope(const McEstimate& est, u64 lo, u64 hi,
                                        long double min_tail);

struct ScalingRow {
  u64 m = 0;
  u64 p = 0;
  McEstimate linear;
  McEstimate random;
};

/// For every m: p = next prime >= m^2, linear estimate on [m] and fully
/// random estimate with m balls.
std::vector<ScalingRow> scaling_study(const std::vector<u64>& m_values,
                                      u64 samples, u64 seed,
                                      unsigned workers = 1);

}  // namespace slhash
