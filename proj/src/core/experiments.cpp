#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numeric>

#include "error.hpp"
#include "estimators.hpp"
#include "load_stats.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace slhash::experiments {

namespace {

std::string str(u64 v) { return std::to_string(v); }
std::string dec(long double v) { return format_decimal(v); }
std::string dec(const Rational& r) { return format_decimal(r); }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Metadata base_metadata(const std::string& experiment, const Options& opts) {
  return {{"tool", kToolVersion},
          {"experiment", experiment},
          {"generated", utc_timestamp()},
          {"workers", std::to_string(opts.workers)}};
}

EnumOptions enum_options(const Options& opts) {
  return EnumOptions{opts.workers, opts.budget};
}

// Inner counts run single-threaded when the caller parallelizes an outer loop.
EnumOptions serial(const EnumOptions& opts) {
  return EnumOptions{1, opts.budget};
}

Result finish(Result result, const Options& opts) {
  if (!opts.out_path.empty()) {
    result.table.write(opts.out_path, result.metadata);
    report_table(result.report).write(report_path_for(opts.out_path),
                                      result.metadata);
  }
  return result;
}

std::string violations(u64 bad, u64 cases) {
  return "violations=" + str(bad) + " of " + str(cases);
}

Check zero_violation_check(std::string name, std::string claim, u64 bad,
                           u64 cases) {
  return Check{std::move(name), std::move(claim), violations(bad, cases),
               "0 violations", bad == 0, false};
}

std::vector<u64> interval_keys(u64 first, u64 count) {
  std::vector<u64> keys(count);
  std::iota(keys.begin(), keys.end(), first);
  return keys;
}

struct Triple {
  u64 x, y, z;
};

std::vector<Triple> sample_triples(u64 p, u64 count, u64 seed) {
  std::vector<Triple> out;
  SplitMix64 gen(mix64(seed ^ 0x7472697000000000ULL));
  while (out.size() < count) {
    const Triple t{uniform_below(gen, p), uniform_below(gen, p),
                   uniform_below(gen, p)};
    if (t.x != t.y && t.y != t.z && t.x != t.z) out.push_back(t);
  }
  return out;
}

std::vector<Triple> all_ordered_triples(u64 p) {
  std::vector<Triple> out;
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y)
      for (u64 z = 0; z < p; ++z)
        if (x != y && y != z && x != z) out.push_back({x, y, z});
  return out;
}

u64 sum(const std::vector<u64>& parts) {
  return std::accumulate(parts.begin(), parts.end(), u64{0});
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "figure1",       "lemmas",      "scaling",  "transform",
      "maxload-exact", "maxload-mc",  "collide3", "interval-collide"};
  return kNames;
}

Result run(const std::string& name, const Options& opts) {
  if (name == "figure1") return run_figure1(opts);
  if (name == "lemmas") return run_lemma_checks(opts);
  if (name == "scaling") return run_scaling(opts);
  if (name == "transform") return run_transform_demo(opts);
  if (name == "maxload-exact") return run_maxload_exact(opts);
  if (name == "maxload-mc") return run_maxload_mc(opts);
  if (name == "collide3") return run_collide3(opts);
  if (name == "interval-collide") return run_interval_collide(opts);
  throw Error(ErrorCode::kInvalidArgument, "unknown experiment '" + name + "'");
}

// ---------------------------------------------------------------------------
// figure1

std::vector<u64> figure1_sweep(u64 p, u64 points) {
  if (p < 3) return {};
  const u64 hi = (p + 1) / 2;
  const u64 half = std::max<u64>(2, points / 2);
  std::vector<u64> lower;
  const long double ratio = std::log(static_cast<long double>(hi) / 2.0L) /
                            static_cast<long double>(half - 1);
  for (u64 i = 0; i < half; ++i) {
    auto v = static_cast<u64>(std::llround(2.0L * std::exp(ratio * i)));
    if (!lower.empty()) v = std::max(v, lower.back() + 2);
    if (v > hi) break;
    lower.push_back(v);
  }
  std::vector<u64> sweep = lower;
  for (u64 d : lower) sweep.push_back(p + 1 - d);
  std::sort(sweep.begin(), sweep.end());
  sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
  std::erase_if(sweep, [p](u64 d) { return d < 2 || d > p - 1; });
  return sweep;
}

u64 nearest_point(const std::vector<u64>& sorted_points, u64 target) {
  if (sorted_points.empty()) throw DomainError("empty sweep");
  auto it = std::lower_bound(sorted_points.begin(), sorted_points.end(), target);
  if (it == sorted_points.end()) return sorted_points.back();
  if (it == sorted_points.begin() || *it == target) return *it;
  const u64 above = *it;
  const u64 below = *std::prev(it);
  return (target - below < above - target) ? below : above;
}

Result run_figure1(const Options& opts) {
  const Modulus mod(opts.p.value_or(21787), opts.m.value_or(512));
  const u64 p = mod.p();
  if (p < 3) throw DomainError("figure1 needs p >= 3");
  std::vector<u64> sweep;
  if (!opts.d_values.empty()) {
    sweep = opts.d_values;
    std::sort(sweep.begin(), sweep.end());
    sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
    for (u64 d : sweep) {
      if (d < 2 || d >= p) throw DomainError("sweep values must lie in [2, p-1]");
    }
  } else if (opts.full_sweep) {
    sweep = interval_keys(2, p - 2);
  } else {
    sweep = figure1_sweep(p);
  }
  const auto eopts = enum_options(opts);
  // Refuse up front rather than after minutes of partial work.
  require_budget(3 * static_cast<unsigned __int128>(p) * p, eopts,
                 "figure1 collision count per sweep point");

  Result result;
  result.report.experiment = "figure1";
  result.table = CsvTable({"d", "exact_probability", "statement_bound", "proof_bound"});
  std::vector<Rational> exact;
  u64 proof_violations = 0;
  for (u64 d : sweep) {
    const auto prob = count_triple_collisions(mod, 0, 1, d, eopts).probability();
    const auto bounds = triple_bound_formula(mod, d);
    if (prob > bounds.proof) ++proof_violations;
    exact.push_back(prob);
    result.table.add_row({str(d), dec(prob), dec(bounds.statement), dec(bounds.proof)});
  }

  // Non-increasing on the sweep points with d <= p/m.
  u64 mono_cases = 0, mono_bad = 0;
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
    if (sweep[i + 1] * mod.m() > p) break;
    ++mono_cases;
    if (exact[i + 1] > exact[i]) ++mono_bad;
  }
  result.report.add(Check{"decreasing-below-p-over-m",
                          "collision probability of {0,1,d} decreases while d <= p/m",
                          violations(mono_bad, mono_cases), "0 violations",
                          mono_bad == 0, false});

  long double worst = 0;
  u64 worst_d = 0;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const u64 partner = nearest_point(sweep, p - sweep[i]);
    const auto j = static_cast<std::size_t>(
        std::lower_bound(sweep.begin(), sweep.end(), partner) - sweep.begin());
    const long double a = exact[i].value(), b = exact[j].value();
    const long double hi = std::max(a, b);
    const long double dev = hi > 0 ? std::fabs(a - b) / hi : 0;
    if (dev > worst) {
      worst = dev;
      worst_d = sweep[i];
    }
  }
  result.report.add(Check{"near-symmetry",
                          "curve is almost symmetric under d -> p - d",
                          "max relative deviation " + dec(worst) +
                              (worst_d ? " at d=" + str(worst_d) : ""),
                          "<= 0.25", worst <= 0.25L, true});
  result.report.note("proof_bound_violations_on_sweep", str(proof_violations));
  result.report.note("sweep_points", str(sweep.size()));

  result.metadata = base_metadata("figure1", opts);
  result.metadata.push_back({"p", str(p)});
  result.metadata.push_back({"m", str(mod.m())});
  result.metadata.push_back({"sweep", opts.d_values.empty()
                                          ? (opts.full_sweep ? "full" : "log-spaced, mirrored about (p+1)/2")
                                          : "explicit"});
  return finish(std::move(result), opts);
}

// ---------------------------------------------------------------------------
// lemmas

Check check_transformation(const Modulus& mod, bool all_triples,
                           u64 sampled_triples, u64 targets_per_triple,
                           u64 seed, const EnumOptions& opts) {
  const u64 p = mod.p();
  const auto triples = all_triples ? all_ordered_triples(p)
                                   : sample_triples(p, sampled_triples, seed);
  struct Tally {
    u64 cases = 0, bad = 0;
  };
  const auto inner = serial(opts);
  const auto parts = map_chunks<Tally>(triples.size(), opts.workers, [&](u64 lo, u64 hi) {
    Tally t;
    for (u64 i = lo; i < hi; ++i) {
      const auto& [x, y, z] = triples[i];
      const auto canon = canonicalize_triple(p, x, y, z);
      auto gen = substream(seed, i);
      for (u64 k = 0; k < targets_per_triple; ++k) {
        const u64 ix = uniform_below(gen, mod.m());
        const u64 iy = uniform_below(gen, mod.m());
        const u64 iz = uniform_below(gen, mod.m());
        const auto lhs = count_prescribed_triple(mod, x, y, z, ix, iy, iz, inner);
        const auto rhs = count_prescribed_triple(mod, 0, 1, canon.d, ix, iy, iz, inner);
        ++t.cases;
        if (lhs != rhs) ++t.bad;
      }
    }
    return t;
  });
  u64 cases = 0, bad = 0;
  for (const auto& t : parts) {
    cases += t.cases;
    bad += t.bad;
  }
  return zero_violation_check(
      "transformation-count-equality",
      "prescribed-image counts of (x,y,z) equal those of canonical (0,1,d)"
      + std::string(all_triples ? " [all ordered triples]" : " [sampled triples]"),
      bad, cases);
}

Check check_decomposition(const Modulus& mod, u64 triples, u64 seed,
                          const EnumOptions& opts) {
  u64 bad = 0;
  const auto list = sample_triples(mod.p(), triples, seed ^ 0xdec0);
  for (const auto& [x, y, z] : list) {
    u64 total = 0;
    for (u64 i = 0; i < mod.m(); ++i) {
      total += count_prescribed_triple(mod, x, y, z, i, i, i, opts).satisfying_pairs;
    }
    if (total != count_triple_collisions(mod, x, y, z, opts).satisfying_pairs) ++bad;
  }
  return zero_violation_check("collision-decomposition",
                              "sum over bins of prescribed (i,i,i) counts equals the collision count",
                              bad, list.size());
}

TripleBoundSweep check_triple_upper_bound(const Modulus& mod,
                                          const EnumOptions& opts) {
  const u64 p = mod.p();
  struct Tally {
    u64 cases = 0, proof_bad = 0, statement_bad = 0, ceiling_bad = 0;
    u64 first_statement = 0;
    long double worst_ratio = 0;
  };
  const u64 n = p > 2 ? p - 2 : 0;
  const auto inner = serial(opts);
  const auto parts = map_chunks<Tally>(n, opts.workers, [&](u64 lo, u64 hi) {
    Tally t;
    for (u64 i = lo; i < hi; ++i) {
      const u64 d = i + 2;
      const auto prob = count_triple_collisions(mod, 0, 1, d, inner).probability();
      const auto bounds = triple_bound_formula(mod, d);
      ++t.cases;
      if (prob > bounds.proof) ++t.proof_bad;
      if (prob > bounds.statement) {
        if (t.statement_bad++ == 0) t.first_statement = d;
      }
      if (prob > bounds.ceiling) ++t.ceiling_bad;
      t.worst_ratio = std::max(t.worst_ratio, prob.value() / bounds.proof.value());
    }
    return t;
  });
  TripleBoundSweep out;
  u64 proof_bad = 0;
  long double worst = 0;
  for (const auto& t : parts) {
    out.cases += t.cases;
    proof_bad += t.proof_bad;
    out.ceiling_violations += t.ceiling_bad;
    if (t.statement_bad > 0 && out.first_statement_violation == 0) {
      out.first_statement_violation = t.first_statement;
    }
    out.statement_violations += t.statement_bad;
    worst = std::max(worst, t.worst_ratio);
  }
  out.proof_form = Check{"triple-bound-proof-form",
                         "Pr[|h({0,1,d})| = 1] <= (1 + (1 + p/d)/m)(1 + d/m)/p for all 2 <= d < p",
                         violations(proof_bad, out.cases) + "; max exact/bound " + dec(worst),
                         "0 violations", proof_bad == 0, false};
  return out;
}

Check check_interval_containment(const Modulus& mod, const EnumOptions& opts) {
  const u64 p = mod.p();
  const u64 d_max = std::min(p - 1, std::max<u64>(3, p / mod.m()));
  u64 cases = 0, bad = 0;
  for (u64 d = 3; d <= d_max; ++d) {
    const auto interval = count_interval_collision(mod, d, opts);
    const auto triple = count_triple_collisions(mod, 0, 1, d - 1, opts);
    ++cases;
    if (interval.satisfying_pairs > triple.satisfying_pairs) ++bad;
  }
  return zero_violation_check(
      "interval-containment",
      "[d] collides only if {0,1,d-1} collides, 3 <= d <= max(3, p/m)", bad, cases);
}

Check check_interval_lower_bound(const Modulus& mod, const EnumOptions& opts) {
  u64 cases = 0, bad = 0;
  long double min_ratio = 0;
  for (u64 d = 2; d <= mod.m(); ++d) {
    const auto bound = interval_lower_bound(mod, d);
    const auto prob = count_interval_collision(mod, d, opts).probability();
    const long double ratio = prob.value() / bound.value();
    min_ratio = cases == 0 ? ratio : std::min(min_ratio, ratio);
    ++cases;
    if (prob < bound) ++bad;
  }
  return Check{"interval-lower-bound",
               "Pr[|h([d])| = 1] >= 1/(6dm) for 2 <= d <= m when p > 3m^2",
               violations(bad, cases) + "; min exact/bound " + dec(min_ratio),
               "0 violations", bad == 0, false};
}

Check check_b_shift(const Modulus& mod, const EnumOptions& opts) {
  const u64 p = mod.p();
  const u64 m = mod.m();
  const auto keys = interval_keys(0, m);
  struct Tally {
    u64 cases = 0, bad = 0, conservation_bad = 0;
  };
  const auto parts = map_chunks<Tally>(p, opts.workers, [&](u64 lo, u64 hi) {
    Tally t;
    MaxLoadCounter counter(mod);
    std::vector<u64> loads(m);
    for (u64 a = lo; a < hi; ++a) {
      const u64 base = counter.max_load(HashParams{a, 0}, keys);
      for (u64 b = 0; b < p; ++b) {
        std::fill(loads.begin(), loads.end(), 0);
        u64 best = 0;
        for (u64 x : keys) best = std::max(best, ++loads[eval_binned({a, b}, mod, x)]);
        if (std::accumulate(loads.begin(), loads.end(), u64{0}) != keys.size()) {
          ++t.conservation_bad;
        }
        ++t.cases;
        if (!max_load_b_zero_bounds(best).contains(base)) ++t.bad;
      }
    }
    return t;
  });
  Tally total;
  for (const auto& t : parts) {
    total.cases += t.cases;
    total.bad += t.bad;
    total.conservation_bad += t.conservation_bad;
  }
  Check c = zero_violation_check(
      "b-shift-containment",
      "floor(L(a,b)/2) <= L(a,0) <= 2 L(a,b) over all (a,b), S = [m]; loads sum to |S|",
      total.bad + total.conservation_bad, total.cases);
  return c;
}

namespace {

Check sign_check(const Modulus& mod, const std::vector<u64>& keys, u64 slack,
                 std::string name, std::string claim, const EnumOptions& opts) {
  const u64 p = mod.p();
  const auto parts = map_chunks<u64>(p - 1, opts.workers, [&](u64 lo, u64 hi) {
    MaxLoadCounter counter(mod);
    u64 bad = 0;
    for (u64 i = lo; i < hi; ++i) {
      const u64 a = i + 1;
      const u64 l1 = counter.max_load(HashParams{a, 0}, keys);
      const u64 l2 = counter.max_load(HashParams{p - a, 0}, keys);
      const u64 diff = l1 > l2 ? l1 - l2 : l2 - l1;
      if (diff > slack) ++bad;
    }
    return bad;
  });
  return zero_violation_check(std::move(name), std::move(claim), sum(parts), p - 1);
}

}  // namespace

Check check_sign_symmetry(const Modulus& mod, const EnumOptions& opts) {
  if (mod.m() >= mod.p()) {
    throw DomainError("sign symmetry on {1..m} needs m < p");
  }
  return sign_check(mod, interval_keys(1, mod.m()), 0, "sign-symmetry",
                    "L(h_{a,0}) = L(h_{p-a,0}) for a in [1,p), S = {1..m} (0-free)",
                    opts);
}

Check check_sign_zero_slack(const Modulus& mod, const EnumOptions& opts) {
  return sign_check(mod, interval_keys(0, mod.m()), 1, "sign-zero-slack",
                    "|L(h_{a,0}) - L(h_{p-a,0})| <= 1 for a in [1,p), S = [m]",
                    opts);
}

Check check_affine_equivalence(const Modulus& mod, u64 alpha, u64 beta,
                               const EnumOptions& opts) {
  const auto interval = exact_maxload_histogram(mod, KeySet::interval(mod.m()),
                                                BMode::kAllB, opts);
  const auto affine = exact_maxload_histogram(
      mod, KeySet::affine(mod.m(), alpha, beta), BMode::kAllB, opts);
  const bool equal = interval.counts == affine.counts;
  return Check{"affine-equivalence",
               "all-(a,b) max-load histograms of [m] and its affine image coincide",
               "alpha=" + str(alpha) + " beta=" + str(beta) +
                   (equal ? " histograms equal" : " histograms differ"),
               "equal histograms", equal, false};
}

Result run_lemma_checks(const Options& opts) {
  const Modulus mod(opts.p.value_or(257), opts.m.value_or(16));
  const u64 p = mod.p();
  const u64 m = mod.m();
  const u64 seed = opts.seed.value_or(1);
  const auto eopts = enum_options(opts);
  if (p < 5) throw DomainError("lemma checks need p >= 5");
  require_budget(static_cast<unsigned __int128>(p) * p * m, eopts, "lemma checks");

  Result result;
  result.report.experiment = "lemmas";

  // Every ordered triple is affordable up to p = 31 (about 27k triples).
  const bool all_triples = p <= 31;
  result.report.add(check_transformation(mod, all_triples, 64, 5, seed, eopts));
  result.report.add(check_decomposition(mod, 3, seed, eopts));

  auto bound = check_triple_upper_bound(mod, eopts);
  result.report.add(bound.proof_form);
  result.report.note("statement_form_violations",
                     violations(bound.statement_violations, bound.cases) +
                         (bound.first_statement_violation
                              ? "; first at d=" + str(bound.first_statement_violation)
                              : ""));
  result.report.note("ceiling_form_violations",
                     violations(bound.ceiling_violations, bound.cases));

  result.report.add(check_interval_containment(mod, eopts));
  const auto m2 = static_cast<unsigned __int128>(m) * m;
  if (static_cast<unsigned __int128>(p) > 3 * m2 && m >= 2) {
    result.report.add(check_interval_lower_bound(mod, eopts));
  } else {
    result.report.note("interval-lower-bound", "inactive (needs p > 3m^2)");
  }
  result.report.add(check_b_shift(mod, eopts));
  if (m < p) {
    result.report.add(check_sign_symmetry(mod, eopts));
  } else {
    result.report.note("sign-symmetry", "inactive (needs m < p)");
  }
  result.report.add(check_sign_zero_slack(mod, eopts));

  const u64 alpha = opts.alpha.value_or(1 + mix64(seed) % (p - 1));
  const u64 beta = opts.beta.value_or(mix64(seed + 1) % p);
  result.report.add(check_affine_equivalence(mod, alpha, beta, eopts));

  // Worker-count independence of the exhaustive counts.
  const auto one = count_triple_collisions(mod, 0, 1, 2, EnumOptions{1, opts.budget});
  const auto many = count_triple_collisions(mod, 0, 1, 2, EnumOptions{3, opts.budget});
  result.report.add(Check{"worker-independence",
                          "exhaustive counts do not depend on the worker count",
                          str(one.satisfying_pairs) + " vs " + str(many.satisfying_pairs),
                          "equal", one == many, false});

  result.table = report_table(result.report);
  result.metadata = base_metadata("lemmas", opts);
  result.metadata.push_back({"p", str(p)});
  result.metadata.push_back({"m", str(m)});
  result.metadata.push_back({"seed", str(seed)});
  result.metadata.push_back({"generator", kGeneratorName});
  return finish(std::move(result), opts);
}

// ---------------------------------------------------------------------------
// scaling

Result run_scaling(const Options& opts) {
  const std::vector<u64> m_values =
      opts.m_values.empty() ? std::vector<u64>{16, 64, 256, 1024} : opts.m_values;
  const u64 samples = opts.samples.value_or(100000);
  const u64 seed = opts.seed.value_or(1);
  const auto rows = scaling_study(m_values, samples, seed, opts.workers);

  Result result;
  result.report.experiment = "scaling";
  std::vector<std::string> header = {"m", "p", "linear_mean", "linear_se",
                                     "random_mean", "random_se"};
  for (u64 l = 2; l <= 10; ++l) header.push_back("tail_" + str(l));
  result.table = CsvTable(header);
  for (const auto& row : rows) {
    std::vector<std::string> fields = {str(row.m), str(row.p),
                                       dec(row.linear.mean), dec(row.linear.std_error),
                                       dec(row.random.mean), dec(row.random.std_error)};
    for (u64 l = 2; l <= 10; ++l) {
      const auto it = row.linear.tail.find(l);
      fields.push_back(dec(it == row.linear.tail.end() ? 0.0L : it->second));
    }
    result.table.add_row(std::move(fields));
  }

  long double lo = rows.front().linear.mean, hi = lo;
  for (const auto& row : rows) {
    lo = std::min(lo, row.linear.mean);
    hi = std::max(hi, row.linear.mean);
  }
  result.report.add(Check{"linear-mean-spread",
                          "expected max load on [m] is O(1) when p >= m^2",
                          "max-min = " + dec(hi - lo), "<= 1.0", hi - lo <= 1.0L, true});

  bool increasing = true;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!(rows[i + 1].random.mean > rows[i].random.mean)) increasing = false;
  }
  result.report.add(Check{"random-mean-increasing",
                          "fully random max load grows like log m / log log m",
                          increasing ? "strictly increasing" : "not strictly increasing",
                          "strictly increasing", increasing, false});

  const auto& last = rows.back();
  const long double gap = last.random.mean - last.linear.mean;
  result.report.add(Check{"separation-at-largest-m",
                          "fully random mean exceeds linear mean at m=" + str(last.m),
                          "random-linear = " + dec(gap), ">= 1.0", gap >= 1.0L, true});

  const long double min_tail = 10.0L / static_cast<long double>(samples);
  const auto slope = tail_loglog_slope(last.linear, 3, 10, min_tail);
  result.report.add(Check{"tail-loglog-slope",
                          "Pr[max load >= l] = O(l^-2) at m=" + str(last.m),
                          slope ? "slope " + dec(*slope) : "too few tail points",
                          "<= -1.5", slope && *slope <= -1.5, true});
  for (const auto& row : rows) {
    for (const auto& n : row.linear.notes) result.report.note("m=" + str(row.m), n);
  }

  result.metadata = base_metadata("scaling", opts);
  std::string ms;
  for (u64 m : m_values) ms += (ms.empty() ? "" : " ") + str(m);
  result.metadata.push_back({"m_values", ms});
  result.metadata.push_back({"samples", str(samples)});
  result.metadata.push_back({"seed", str(seed)});
  result.metadata.push_back({"generator", kGeneratorName});
  result.metadata.push_back({"a_zero", "included"});
  return finish(std::move(result), opts);
}

// ---------------------------------------------------------------------------
// transform

Result run_transform_demo(const Options& opts) {
  const Modulus mod(opts.p.value_or(1031), opts.m.value_or(32));
  const u64 alpha = opts.alpha.value_or(77);
  const u64 beta = opts.beta.value_or(5);
  const u64 samples = opts.samples.value_or(100000);
  const u64 seed = opts.seed.value_or(1);
  if (alpha == 0 || alpha >= mod.p()) throw DomainError("alpha must lie in [1, p)");
  if (beta >= mod.p()) throw DomainError("beta must lie in [p]");

  const auto interval = KeySet::interval(mod.m());
  const auto affine = KeySet::affine(mod.m(), alpha, beta);
  const auto est_i = mc_linear_maxload(McConfig{samples, seed, mod, interval, opts.workers});
  const auto est_a = mc_linear_maxload(McConfig{samples, seed, mod, affine, opts.workers});
  const long double combined =
      std::sqrt(est_i.std_error * est_i.std_error + est_a.std_error * est_a.std_error);
  const long double diff = est_a.mean - est_i.mean;
  const long double diff_se = combined > 0 ? diff / combined : 0;

  Result result;
  result.report.experiment = "transform";
  const bool agree = combined > 0 ? std::fabs(diff_se) <= 4.0L : diff == 0;
  result.report.add(Check{"mc-means-agree",
                          "affine images of [m] keep the max-load distribution",
                          "difference " + dec(diff_se) + " std errors", "|diff| <= 4 se",
                          agree, true});

  std::string exact_i = "", exact_a = "", equal = "skipped";
  const auto eopts = enum_options(opts);
  try {
    const auto hi = exact_maxload_histogram(mod, interval, BMode::kAllB, eopts);
    const auto ha = exact_maxload_histogram(mod, affine, BMode::kAllB, eopts);
    exact_i = dec(hi.mean());
    exact_a = dec(ha.mean());
    equal = hi.counts == ha.counts ? "true" : "false";
    result.report.add(Check{"exact-histograms-equal",
                            "affine images of [m] keep the max-load distribution",
                            equal, "true", hi.counts == ha.counts, false});
  } catch (const BudgetExceeded&) {
    result.report.note("exact-histograms-equal", "skipped (over budget)");
  }

  result.table = CsvTable({"p", "m", "alpha", "beta", "interval_mean", "interval_se",
                           "affine_mean", "affine_se", "difference_se",
                           "exact_interval_mean", "exact_affine_mean", "histograms_equal"});
  result.table.add_row({str(mod.p()), str(mod.m()), str(alpha), str(beta),
                        dec(est_i.mean), dec(est_i.std_error), dec(est_a.mean),
                        dec(est_a.std_error), dec(diff_se), exact_i, exact_a, equal});

  result.metadata = base_metadata("transform", opts);
  result.metadata.push_back({"p", str(mod.p())});
  result.metadata.push_back({"m", str(mod.m())});
  result.metadata.push_back({"samples", str(samples)});
  result.metadata.push_back({"seed", str(seed)});
  result.metadata.push_back({"generator", kGeneratorName});
  result.metadata.push_back({"a_zero", "included"});
  return finish(std::move(result), opts);
}

// ---------------------------------------------------------------------------
// single-purpose experiments

namespace {

KeySet key_set_from(const Options& opts, const Modulus& mod) {
  if (opts.alpha || opts.beta) {
    return KeySet::affine(mod.m(), opts.alpha.value_or(1), opts.beta.value_or(0));
  }
  return KeySet::interval(mod.m());
}

}  // namespace

Result run_maxload_exact(const Options& opts) {
  const Modulus mod(opts.p.value_or(257), opts.m.value_or(16));
  const auto ks = key_set_from(opts, mod);
  const auto hist = exact_maxload_histogram(mod, ks, opts.b_mode, enum_options(opts));

  Result result;
  result.report.experiment = "maxload-exact";
  result.table = CsvTable({"max_load", "count", "tail_probability"});
  u64 total = 0;
  for (const auto& [load, count] : hist.counts) {
    total += count;
    result.table.add_row({str(load), str(count), dec(hist.tail(load))});
  }
  const u64 expected = opts.b_mode == BMode::kAllB ? mod.p() * mod.p() : mod.p();
  result.report.add(Check{"histogram-total", "histogram partitions the parameter space",
                          str(total), str(expected), total == expected, false});
  result.report.note("mean", dec(hist.mean()));

  result.metadata = base_metadata("maxload-exact", opts);
  result.metadata.push_back({"p", str(mod.p())});
  result.metadata.push_back({"m", str(mod.m())});
  result.metadata.push_back({"key_set", ks.describe()});
  result.metadata.push_back({"b_mode", opts.b_mode == BMode::kAllB ? "all" : "zero"});
  return finish(std::move(result), opts);
}

Result run_maxload_mc(const Options& opts) {
  const Modulus mod(opts.p.value_or(1031), opts.m.value_or(32));
  const auto ks = key_set_from(opts, mod);
  const u64 samples = opts.samples.value_or(10000);
  const u64 seed = opts.seed.value_or(1);
  const auto est = mc_linear_maxload(McConfig{samples, seed, mod, ks, opts.workers});

  Result result;
  result.report.experiment = "maxload-mc";
  result.table = CsvTable({"statistic", "value"});
  result.table.add_row({"samples", str(est.samples)});
  result.table.add_row({"mean", dec(est.mean)});
  result.table.add_row({"std_error", dec(est.std_error)});
  bool monotone = true;
  long double prev = 1.0L, tail_sum = 0;
  for (const auto& [l, t] : est.tail) {
    result.table.add_row({"tail_" + str(l), dec(t)});
    if (t > prev) monotone = false;
    prev = t;
    tail_sum += t;
  }
  result.report.add(Check{"tail-monotone", "Pr[max >= l] is non-increasing in l",
                          monotone ? "non-increasing" : "increase found",
                          "non-increasing", monotone, false});
  const bool consistent = std::fabs(tail_sum - est.mean) <= 1e-9L * std::max(1.0L, est.mean);
  result.report.add(Check{"tail-sum-equals-mean", "E[L] = sum_l Pr[L >= l]",
                          dec(tail_sum) + " vs " + dec(est.mean), "equal",
                          consistent, false});
  for (const auto& n : est.notes) result.report.note("note", n);

  result.metadata = base_metadata("maxload-mc", opts);
  result.metadata.push_back({"p", str(mod.p())});
  result.metadata.push_back({"m", str(mod.m())});
  result.metadata.push_back({"key_set", ks.describe()});
  result.metadata.push_back({"samples", str(samples)});
  result.metadata.push_back({"seed", str(seed)});
  result.metadata.push_back({"generator", kGeneratorName});
  result.metadata.push_back({"a_zero", "included"});
  return finish(std::move(result), opts);
}

Result run_collide3(const Options& opts) {
  const Modulus mod(opts.p.value_or(257), opts.m.value_or(16));
  const u64 x = opts.x.value_or(0), y = opts.y.value_or(1), z = opts.z.value_or(2);
  const auto eopts = enum_options(opts);
  const auto canon = canonicalize_triple(mod.p(), x, y, z);
  const auto stats = count_triple_collisions(mod, x, y, z, eopts);
  const auto canon_stats = count_triple_collisions(mod, 0, 1, canon.d, eopts);
  const auto bounds = triple_bound_formula(mod, canon.d);

  Result result;
  result.report.experiment = "collide3";
  result.table = CsvTable({"x", "y", "z", "canonical_d", "alpha", "beta",
                           "satisfying_pairs", "total_pairs", "probability",
                           "canonical_satisfying_pairs", "proof_bound"});
  result.table.add_row({str(x), str(y), str(z), str(canon.d), str(canon.alpha),
                        str(canon.beta), str(stats.satisfying_pairs),
                        str(stats.total_pairs), dec(stats.probability()),
                        str(canon_stats.satisfying_pairs), dec(bounds.proof)});
  result.report.add(Check{"canonical-count-equal",
                          "collision count of (x,y,z) equals that of (0,1,d)",
                          str(stats.satisfying_pairs) + " vs " + str(canon_stats.satisfying_pairs),
                          "equal", stats == canon_stats, false});
  result.report.add(Check{"proof-bound", "collision probability <= proof-form bound",
                          dec(stats.probability()), "<= " + dec(bounds.proof),
                          stats.probability() <= bounds.proof, false});

  result.metadata = base_metadata("collide3", opts);
  result.metadata.push_back({"p", str(mod.p())});
  result.metadata.push_back({"m", str(mod.m())});
  return finish(std::move(result), opts);
}

Result run_interval_collide(const Options& opts) {
  const Modulus mod(opts.p.value_or(197), opts.m.value_or(8));
  const u64 p = mod.p(), m = mod.m();
  std::vector<u64> ds = opts.d_values;
  if (ds.empty()) ds = interval_keys(2, std::max<u64>(m, 2) - 1);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  const auto eopts = enum_options(opts);
  const bool bound_active =
      static_cast<unsigned __int128>(p) > 3 * static_cast<unsigned __int128>(m) * m;

  Result result;
  result.report.experiment = "interval-collide";
  result.table = CsvTable({"d", "satisfying_pairs", "total_pairs", "probability", "lower_bound"});
  u64 bound_cases = 0, bound_bad = 0, mono_bad = 0;
  std::optional<u64> prev;
  for (u64 d : ds) {
    const auto stats = count_interval_collision(mod, d, eopts);
    std::string lower;
    if (bound_active && d <= m) {
      const auto bound = interval_lower_bound(mod, d);
      lower = dec(bound);
      ++bound_cases;
      if (stats.probability() < bound) ++bound_bad;
    }
    if (prev && stats.satisfying_pairs > *prev) ++mono_bad;
    prev = stats.satisfying_pairs;
    result.table.add_row({str(d), str(stats.satisfying_pairs), str(stats.total_pairs),
                          dec(stats.probability()), lower});
  }
  result.report.add(zero_violation_check("non-increasing-in-d",
                                         "[d] colliding implies [d'] colliding for d' <= d",
                                         mono_bad, ds.size() > 0 ? ds.size() - 1 : 0));
  if (bound_active) {
    result.report.add(zero_violation_check("interval-lower-bound",
                                           "Pr[|h([d])| = 1] >= 1/(6dm) for d <= m",
                                           bound_bad, bound_cases));
  } else {
    result.report.note("interval-lower-bound", "inactive (needs p > 3m^2)");
  }

  result.metadata = base_metadata("interval-collide", opts);
  result.metadata.push_back({"p", str(p)});
  result.metadata.push_back({"m", str(m)});
  return finish(std::move(result), opts);
}

}  // namespace slhash::experiments
