// slhash command-line front end. Every subcommand writes a result CSV and a
// report CSV next to it, prints the report table and exits non-zero when a
// check fails.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slhash/slhash.h"

namespace {

struct Flags {
  std::optional<std::uint64_t> p, m, seed, samples, alpha, beta, x, y, z;
  unsigned workers = 1;
  std::uint64_t budget = 0;
  bool full_sweep = false;
  std::string out;
  std::string b_mode = "all";
  std::vector<std::uint64_t> d_values;
  std::vector<std::uint64_t> m_values;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--p", f.p, "prime modulus");
  cmd->add_option("--m", f.m, "number of bins");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--samples", f.samples, "Monte Carlo samples");
  cmd->add_option("--workers", f.workers, "worker threads (0 = all cores)")
      ->capture_default_str();
  cmd->add_option("--out", f.out, "output CSV path (default: <experiment>.csv)");
  cmd->add_option("--budget", f.budget, "maximum hash evaluations per exhaustive call");
  cmd->add_flag("--full-sweep", f.full_sweep, "sweep every d in [2, p-1]");
}

int run(const std::string& name, const Flags& f) {
  slh_experiment_options opts;
  slh_experiment_options_init(&opts);
  auto set = [&](std::uint32_t bit, const std::optional<std::uint64_t>& v,
                 std::uint64_t& slot) {
    if (v) {
      opts.set_fields |= bit;
      slot = *v;
    }
  };
  set(SLH_OPT_P, f.p, opts.p);
  set(SLH_OPT_M, f.m, opts.m);
  set(SLH_OPT_SEED, f.seed, opts.seed);
  set(SLH_OPT_SAMPLES, f.samples, opts.samples);
  set(SLH_OPT_ALPHA, f.alpha, opts.alpha);
  set(SLH_OPT_BETA, f.beta, opts.beta);
  set(SLH_OPT_X, f.x, opts.x);
  set(SLH_OPT_Y, f.y, opts.y);
  set(SLH_OPT_Z, f.z, opts.z);
  opts.workers = f.workers;
  if (f.budget != 0) opts.budget = f.budget;
  opts.full_sweep = f.full_sweep ? 1 : 0;
  opts.b_zero = f.b_mode == "zero" ? 1 : 0;
  opts.d_values = f.d_values.data();
  opts.d_count = f.d_values.size();
  opts.m_values = f.m_values.data();
  opts.m_count = f.m_values.size();
  const std::string out = f.out.empty() ? name + ".csv" : f.out;
  opts.out_path = out.c_str();

  slh_report* report = nullptr;
  const slh_status status = slh_run_experiment(name.c_str(), &opts, &report);
  if (status != SLH_OK) {
    std::fprintf(stderr, "slhash %s: %s: %s\n", name.c_str(), slh_status_name(status),
                 slh_last_error_message());
    if (status == SLH_ERR_BUDGET) {
      std::fprintf(stderr, "hint: lower --p or raise --budget\n");
    }
    return 2;
  }
  std::fputs(slh_report_table(report), stdout);
  std::printf("wrote %s\n", out.c_str());
  const int code = slh_report_overall(report) ? 0 : 1;
  slh_report_destroy(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple linear hashing: exact collision oracles and max-load experiments"};
  app.set_version_flag("--version", slh_version());
  app.require_subcommand(1);
  Flags f;

  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"figure1", "exact collision probability of {0,1,d} across a d sweep"},
      {"lemmas", "exhaustive checks of the collision and load lemmas"},
      {"scaling", "linear vs fully random expected max load over several m"},
      {"transform", "max load of [m] vs an affine image of [m]"},
      {"maxload-exact", "exact max-load histogram over the whole family"},
      {"maxload-mc", "Monte Carlo max-load estimate"},
      {"collide3", "exact collision count of one triple"},
      {"interval-collide", "exact collision counts of intervals [d]"},
  };
  for (const auto& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_common(cmd, f);
    const std::string name = e.name;
    if (name == "figure1" || name == "interval-collide") {
      cmd->add_option("--d", f.d_values, "explicit d values")->delimiter(',');
    }
    if (name == "scaling") {
      cmd->add_option("--m-values", f.m_values, "bin counts, comma separated")
          ->delimiter(',');
    }
    if (name == "transform" || name == "maxload-exact" || name == "maxload-mc" ||
        name == "lemmas") {
      cmd->add_option("--alpha", f.alpha, "affine multiplier (non-zero)");
      cmd->add_option("--beta", f.beta, "affine offset");
    }
    if (name == "maxload-exact") {
      cmd->add_option("--b-mode", f.b_mode, "all | zero")
          ->check(CLI::IsMember({"all", "zero"}));
    }
    if (name == "collide3") {
      cmd->add_option("--x", f.x);
      cmd->add_option("--y", f.y);
      cmd->add_option("--z", f.z);
    }
  }

  CLI11_PARSE(app, argc, argv);
  for (const auto* cmd : app.get_subcommands()) return run(cmd->get_name(), f);
  return 2;
}
