#pragma once

// Named experiments behind the command-line tool. Each runner validates its
// parameters, computes a CSV table plus an acceptance report and, when an
// output path is set, writes both files.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exact_oracles.hpp"
#include "field.hpp"
#include "report.hpp"

namespace slhash::experiments {

inline constexpr const char* kToolVersion = "slhash 0.3.0";

struct Options {
  std::optional<u64> p;
  std::optional<u64> m;
  std::optional<u64> seed;
  std::optional<u64> samples;
  unsigned workers = 1;
  u64 budget = kDefaultBudget;
  bool full_sweep = false;
  std::optional<u64> alpha;
  std::optional<u64> beta;
  std::optional<u64> x, y, z;
  std::vector<u64> d_values;
  std::vector<u64> m_values;
  BMode b_mode = BMode::kAllB;
  std::string out_path;  // empty: nothing is written
};

struct Result {
  AcceptanceReport report;
  CsvTable table{{}};
  Metadata metadata;
};

/// Registered experiment names, in CLI order.
const std::vector<std::string>& names();

/// Dispatches by name; throws Error(kInvalidArgument) for unknown names.
Result run(const std::string& name, const Options& opts);

Result run_figure1(const Options& opts);
Result run_lemma_checks(const Options& opts);
Result run_scaling(const Options& opts);
Result run_transform_demo(const Options& opts);
Result run_maxload_exact(const Options& opts);
Result run_maxload_mc(const Options& opts);
Result run_collide3(const Options& opts);
Result run_interval_collide(const Options& opts);

/// Default d sweep: about `points` log-spaced values in the lower half of
/// [2, p-1] with neighbours at least two apart, plus their reflections
/// d -> p + 1 - d.
std::vector<u64> figure1_sweep(u64 p, u64 points = 64);

/// The sweep point nearest to `target`; ties go to the larger point.
u64 nearest_point(const std::vector<u64>& sorted_points, u64 target);

// Individual exhaustive checks, shared by `lemmas` and the acceptance suite.

/// Prescribed-image counts of (x, y, z) equal those of (0, 1, d). Every
/// ordered distinct triple when `all_triples`, otherwise `sampled_triples`
/// seeded ones; `targets_per_triple` random target bins each.
Check check_transformation(const Modulus& mod, bool all_triples,
                           u64 sampled_triples, u64 targets_per_triple,
                           u64 seed, const EnumOptions& opts);

/// Sum over i of count(x, y, z -> i, i, i) equals the collision count.
Check check_decomposition(const Modulus& mod, u64 triples, u64 seed,
                          const EnumOptions& opts);

struct TripleBoundSweep {
  Check proof_form;
  u64 cases = 0;
  u64 statement_violations = 0;
  u64 ceiling_violations = 0;
  u64 first_statement_violation = 0;  // 0 when none
};

/// Exact Pr[|h({0,1,d})| = 1] against the candidate bounds for all
/// 2 <= d < p; only the proof form gates.
TripleBoundSweep check_triple_upper_bound(const Modulus& mod,
                                          const EnumOptions& opts);

/// count(|h([d])| = 1) <= count(|h({0,1,d-1})| = 1) for 3 <= d <= max(3, p/m).
Check check_interval_containment(const Modulus& mod, const EnumOptions& opts);

/// Pr[|h([d])| = 1] >= 1/(6dm) for 2 <= d <= m. Requires p > 3m^2.
Check check_interval_lower_bound(const Modulus& mod, const EnumOptions& opts);

/// floor(L_ab / 2) <= L_a0 <= 2 L_ab over all (a, b), S = [m]; also checks
/// that bin loads always sum to |S|.
Check check_b_shift(const Modulus& mod, const EnumOptions& opts);

/// L(h_{a,0}) == L(h_{p-a,0}) for a in [1, p) on S = {1, ..., m}.
Check check_sign_symmetry(const Modulus& mod, const EnumOptions& opts);

/// |L(h_{a,0}) - L(h_{p-a,0})| <= 1 for a in [1, p) on S = [m].
Check check_sign_zero_slack(const Modulus& mod, const EnumOptions& opts);

/// Exact all-(a, b) max-load histograms of Interval(m) and
/// AffineImage(m, alpha, beta) coincide.
Check check_affine_equivalence(const Modulus& mod, u64 alpha, u64 beta,
                               const EnumOptions& opts);

}  // namespace slhash::experiments
