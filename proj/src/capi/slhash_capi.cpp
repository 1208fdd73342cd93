#include "slhash/slhash.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "error.hpp"
#include "estimators.hpp"
#include "exact_oracles.hpp"
#include "experiments.hpp"
#include "field.hpp"
#include "load_stats.hpp"

struct slh_modulus {
  slhash::Modulus value;
};

struct slh_keyset {
  slhash::KeySet value;
};

struct slh_estimate {
  slhash::McEstimate value;
};

struct slh_report {
  slhash::experiments::Result result;
  std::string table;
  std::string body;
  std::vector<std::string> notes;
};

namespace {

thread_local std::string g_last_error;

slh_status fail(slh_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

slh_status map_code(slhash::ErrorCode code) {
  switch (code) {
    case slhash::ErrorCode::kDomain: return SLH_ERR_DOMAIN;
    case slhash::ErrorCode::kValidation: return SLH_ERR_VALIDATION;
    case slhash::ErrorCode::kBudget: return SLH_ERR_BUDGET;
    case slhash::ErrorCode::kOverflow: return SLH_ERR_OVERFLOW;
    case slhash::ErrorCode::kIo: return SLH_ERR_IO;
    case slhash::ErrorCode::kInvalidArgument: return SLH_ERR_INVALID_ARGUMENT;
  }
  return SLH_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
slh_status guard(Fn&& fn) noexcept {
  try {
    fn();
    return SLH_OK;
  } catch (const slhash::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SLH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SLH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SLH_ERR_INTERNAL, "unknown error");
  }
}

slh_status null_arg(const char* what) {
  return fail(SLH_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

slhash::EnumOptions enum_opts(const slh_enum_options* opts) {
  slhash::EnumOptions out;
  if (opts != nullptr) {
    out.workers = opts->workers;
    out.budget = opts->budget;
  }
  return out;
}

slh_collision_stats to_c(const slhash::CollisionStats& s) {
  return slh_collision_stats{s.satisfying_pairs, s.total_pairs};
}

slh_rational to_c(const slhash::Rational& r) { return slh_rational{r.num(), r.den()}; }

}  // namespace

extern "C" {

const char* slh_version(void) { return slhash::experiments::kToolVersion; }

const char* slh_status_name(slh_status status) {
  switch (status) {
    case SLH_OK: return "ok";
    case SLH_ERR_DOMAIN: return "domain error";
    case SLH_ERR_VALIDATION: return "validation error";
    case SLH_ERR_BUDGET: return "budget exceeded";
    case SLH_ERR_OVERFLOW: return "overflow";
    case SLH_ERR_IO: return "i/o error";
    case SLH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SLH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* slh_last_error_message(void) { return g_last_error.c_str(); }

int slh_is_prime(uint64_t n) { return slhash::is_prime(n) ? 1 : 0; }

slh_status slh_next_prime_at_least(uint64_t n, uint64_t* out) {
  if (out == nullptr) return null_arg("out");
  return guard([&] { *out = slhash::next_prime_at_least(n); });
}

slh_status slh_mod_inverse(uint64_t x, uint64_t p, uint64_t* out) {
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    if (x >= p) throw slhash::DomainError("x must lie in [1, p)");
    *out = slhash::mod_inverse(x, p);
  });
}

slh_status slh_modulus_create(uint64_t p, uint64_t m, slh_modulus** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new slh_modulus{slhash::Modulus(p, m)}; });
}

void slh_modulus_destroy(slh_modulus* mod) { delete mod; }

uint64_t slh_modulus_p(const slh_modulus* mod) { return mod ? mod->value.p() : 0; }
uint64_t slh_modulus_m(const slh_modulus* mod) { return mod ? mod->value.m() : 0; }

}  // extern "C"

namespace {

template <class Fn>
slh_status eval_checked(const slh_modulus* mod, uint64_t a, uint64_t b,
                        uint64_t x, uint64_t* out, Fn fn) {
  if (mod == nullptr) return null_arg("mod");
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    const slhash::HashParams params{a, b};
    slhash::check_params(params, mod->value);
    if (x >= mod->value.p()) throw slhash::DomainError("x must lie in [p]");
    *out = fn(params, mod->value, x);
  });
}

}  // namespace

extern "C" {

slh_status slh_eval_full(const slh_modulus* mod, uint64_t a, uint64_t b,
                         uint64_t x, uint64_t* out) {
  return eval_checked(mod, a, b, x, out, [](auto params, const auto& md, uint64_t v) {
    return slhash::eval_full(params, md, v);
  });
}

slh_status slh_eval_binned(const slh_modulus* mod, uint64_t a, uint64_t b,
                           uint64_t x, uint64_t* out) {
  return eval_checked(mod, a, b, x, out, [](auto params, const auto& md, uint64_t v) {
    return slhash::eval_binned(params, md, v);
  });
}

slh_status slh_leaps(const slh_modulus* mod, uint64_t a, uint64_t b, uint64_t x,
                     uint64_t* out) {
  return eval_checked(mod, a, b, x, out, [](auto params, const auto& md, uint64_t v) {
    return slhash::leaps(params, md, v).value;
  });
}

slh_status slh_keyset_interval(uint64_t length, slh_keyset** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new slh_keyset{slhash::KeySet::interval(length)}; });
}

slh_status slh_keyset_affine(uint64_t length, uint64_t alpha, uint64_t beta,
                             slh_keyset** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guard(
      [&] { *out = new slh_keyset{slhash::KeySet::affine(length, alpha, beta)}; });
}

slh_status slh_keyset_explicit(const uint64_t* elements, size_t count,
                               slh_keyset** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  if (elements == nullptr && count > 0) return null_arg("elements");
  return guard([&] {
    std::vector<uint64_t> v(elements, elements + count);
    *out = new slh_keyset{slhash::KeySet::explicit_elements(std::move(v))};
  });
}

void slh_keyset_destroy(slh_keyset* ks) { delete ks; }

uint64_t slh_keyset_size(const slh_keyset* ks) { return ks ? ks->value.size() : 0; }

slh_status slh_keyset_materialize(const slh_keyset* ks, const slh_modulus* mod,
                                  uint64_t* buf, size_t capacity, size_t* written) {
  if (ks == nullptr) return null_arg("ks");
  if (mod == nullptr) return null_arg("mod");
  if (written == nullptr) return null_arg("written");
  return guard([&] {
    const auto elems = ks->value.materialize(mod->value);
    *written = elems.size();
    if (buf == nullptr || capacity < elems.size()) {
      throw slhash::Error(slhash::ErrorCode::kInvalidArgument,
                          "buffer too small for " + std::to_string(elems.size()) +
                              " elements");
    }
    std::copy(elems.begin(), elems.end(), buf);
  });
}

slh_status slh_load_profile(const slh_modulus* mod, uint64_t a, uint64_t b,
                            const slh_keyset* ks, uint64_t* loads,
                            size_t capacity, uint64_t* max_load) {
  if (mod == nullptr) return null_arg("mod");
  if (ks == nullptr) return null_arg("ks");
  if (max_load == nullptr) return null_arg("max_load");
  return guard([&] {
    const auto profile = slhash::load_profile({a, b}, mod->value, ks->value);
    *max_load = profile.max_load;
    if (loads != nullptr) {
      if (capacity < profile.loads.size()) {
        throw slhash::Error(slhash::ErrorCode::kInvalidArgument,
                            "loads buffer needs m entries");
      }
      std::copy(profile.loads.begin(), profile.loads.end(), loads);
    }
  });
}

void slh_max_load_b_zero_bounds(uint64_t max_load_ab, uint64_t* lower,
                                uint64_t* upper) {
  const auto bounds = slhash::max_load_b_zero_bounds(max_load_ab);
  if (lower) *lower = bounds.lower;
  if (upper) *upper = bounds.upper;
}

void slh_enum_options_init(slh_enum_options* opts) {
  if (opts == nullptr) return;
  opts->workers = 1;
  opts->budget = slhash::kDefaultBudget;
}

slh_status slh_count_triple_collisions(const slh_modulus* mod, uint64_t x,
                                       uint64_t y, uint64_t z,
                                       const slh_enum_options* opts,
                                       slh_collision_stats* out) {
  if (mod == nullptr) return null_arg("mod");
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    *out = to_c(slhash::count_triple_collisions(mod->value, x, y, z, enum_opts(opts)));
  });
}

slh_status slh_count_prescribed_triple(const slh_modulus* mod, uint64_t x,
                                       uint64_t y, uint64_t z, uint64_t ix,
                                       uint64_t iy, uint64_t iz,
                                       const slh_enum_options* opts,
                                       slh_collision_stats* out) {
  if (mod == nullptr) return null_arg("mod");
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    *out = to_c(slhash::count_prescribed_triple(mod->value, x, y, z, ix, iy, iz,
                                                enum_opts(opts)));
  });
}

slh_status slh_count_interval_collision(const slh_modulus* mod, uint64_t d,
                                        const slh_enum_options* opts,
                                        slh_collision_stats* out) {
  if (mod == nullptr) return null_arg("mod");
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    *out = to_c(slhash::count_interval_collision(mod->value, d, enum_opts(opts)));
  });
}

slh_status slh_canonicalize_triple(uint64_t p, uint64_t x, uint64_t y, uint64_t z,
                                   slh_canonical_triple* out) {
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    const auto t = slhash::canonicalize_triple(p, x, y, z);
    *out = slh_canonical_triple{t.d, t.alpha, t.beta};
  });
}

slh_status slh_triple_bound_formula(const slh_modulus* mod, uint64_t d,
                                    slh_triple_bounds* out) {
  if (mod == nullptr) return null_arg("mod");
  if (out == nullptr) return null_arg("out");
  return guard([&] {
    const auto b = slhash::triple_bound_formula(mod->value, d);
    *out = slh_triple_bounds{to_c(b.statement), to_c(b.proof), to_c(b.ceiling)};
  });
}

slh_status slh_interval_lower_bound(const slh_modulus* mod, uint64_t d,
                                    slh_rational* out) {
  if (mod == nullptr) return null_arg("mod");
  if (out == nullptr) return null_arg("out");
  return guard([&] { *out = to_c(slhash::interval_lower_bound(mod->value, d)); });
}

slh_status slh_exact_maxload_histogram(const slh_modulus* mod, const slh_keyset* ks,
                                       int b_zero, const slh_enum_options* opts,
                                       uint64_t* counts, size_t capacity) {
  if (mod == nullptr) return null_arg("mod");
  if (ks == nullptr) return null_arg("ks");
  if (counts == nullptr) return null_arg("counts");
  return guard([&] {
    const uint64_t n = ks->value.size();
    if (capacity < n + 1) {
      throw slhash::Error(slhash::ErrorCode::kInvalidArgument,
                          "counts buffer needs |S| + 1 entries");
    }
    const auto hist = slhash::exact_maxload_histogram(
        mod->value, ks->value, b_zero ? slhash::BMode::kBZero : slhash::BMode::kAllB,
        enum_opts(opts));
    std::fill(counts, counts + n + 1, 0);
    for (const auto& [load, count] : hist.counts) counts[load] = count;
  });
}

slh_status slh_mc_linear_maxload(const slh_modulus* mod, const slh_keyset* ks,
                                 uint64_t samples, uint64_t seed, uint32_t workers,
                                 slh_estimate** out) {
  if (mod == nullptr) return null_arg("mod");
  if (ks == nullptr) return null_arg("ks");
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    *out = new slh_estimate{slhash::mc_linear_maxload(
        slhash::McConfig{samples, seed, mod->value, ks->value, workers})};
  });
}

slh_status slh_mc_fully_random_maxload(uint64_t m, uint64_t balls,
                                       uint64_t samples, uint64_t seed,
                                       uint32_t workers, slh_estimate** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    *out = new slh_estimate{
        slhash::mc_fully_random_maxload(m, balls, samples, seed, workers)};
  });
}

void slh_estimate_destroy(slh_estimate* est) { delete est; }

double slh_estimate_mean(const slh_estimate* est) {
  return est ? static_cast<double>(est->value.mean) : 0.0;
}

double slh_estimate_std_error(const slh_estimate* est) {
  return est ? static_cast<double>(est->value.std_error) : 0.0;
}

uint64_t slh_estimate_samples(const slh_estimate* est) {
  return est ? est->value.samples : 0;
}

uint64_t slh_estimate_seed(const slh_estimate* est) { return est ? est->value.seed : 0; }

uint64_t slh_estimate_max_observed(const slh_estimate* est) {
  if (est == nullptr || est->value.histogram.empty()) return 0;
  return est->value.histogram.rbegin()->first;
}

double slh_estimate_tail(const slh_estimate* est, uint64_t l) {
  if (est == nullptr) return 0.0;
  if (l == 0) return 1.0;
  const auto it = est->value.tail.find(l);
  return it == est->value.tail.end() ? 0.0 : static_cast<double>(it->second);
}

const char* slh_estimate_generator(const slh_estimate* est) {
  return est ? est->value.generator.c_str() : "";
}

void slh_experiment_options_init(slh_experiment_options* opts) {
  if (opts == nullptr) return;
  *opts = slh_experiment_options{};
  opts->workers = 1;
  opts->budget = slhash::kDefaultBudget;
}

size_t slh_experiment_count(void) { return slhash::experiments::names().size(); }

const char* slh_experiment_name(size_t index) {
  const auto& names = slhash::experiments::names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

slh_status slh_run_experiment(const char* name, const slh_experiment_options* opts,
                              slh_report** out) {
  if (name == nullptr) return null_arg("name");
  if (opts == nullptr) return null_arg("opts");
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    slhash::experiments::Options o;
    auto pick = [&](uint32_t bit, uint64_t value, std::optional<uint64_t>& slot) {
      if (opts->set_fields & bit) slot = value;
    };
    pick(SLH_OPT_P, opts->p, o.p);
    pick(SLH_OPT_M, opts->m, o.m);
    pick(SLH_OPT_SEED, opts->seed, o.seed);
    pick(SLH_OPT_SAMPLES, opts->samples, o.samples);
    pick(SLH_OPT_ALPHA, opts->alpha, o.alpha);
    pick(SLH_OPT_BETA, opts->beta, o.beta);
    pick(SLH_OPT_X, opts->x, o.x);
    pick(SLH_OPT_Y, opts->y, o.y);
    pick(SLH_OPT_Z, opts->z, o.z);
    o.workers = opts->workers;
    o.budget = opts->budget;
    o.full_sweep = opts->full_sweep != 0;
    o.b_mode = opts->b_zero ? slhash::BMode::kBZero : slhash::BMode::kAllB;
    if (opts->d_values != nullptr) {
      o.d_values.assign(opts->d_values, opts->d_values + opts->d_count);
    }
    if (opts->m_values != nullptr) {
      o.m_values.assign(opts->m_values, opts->m_values + opts->m_count);
    }
    if (opts->out_path != nullptr) o.out_path = opts->out_path;

    auto report = std::make_unique<slh_report>();
    report->result = slhash::experiments::run(name, o);
    report->table = report->result.report.table();
    report->body = report->result.table.body();
    for (const auto& f : report->result.report.findings) {
      report->notes.push_back(f.name + " = " + f.value);
    }
    *out = report.release();
  });
}

void slh_report_destroy(slh_report* report) { delete report; }

int slh_report_overall(const slh_report* report) {
  return report && report->result.report.overall() ? 1 : 0;
}

size_t slh_report_check_count(const slh_report* report) {
  return report ? report->result.report.checks.size() : 0;
}

slh_status slh_report_check(const slh_report* report, size_t index,
                            slh_check_view* out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  const auto& checks = report->result.report.checks;
  if (index >= checks.size()) {
    return fail(SLH_ERR_INVALID_ARGUMENT, "check index out of range");
  }
  const auto& c = checks[index];
  *out = slh_check_view{c.name.c_str(), c.claim.c_str(), c.observed.c_str(),
                        c.required.c_str(), c.passed ? 1 : 0,
                        c.artifact_tolerance ? 1 : 0};
  return SLH_OK;
}

const char* slh_report_table(const slh_report* report) {
  return report ? report->table.c_str() : "";
}

const char* slh_report_csv_body(const slh_report* report) {
  return report ? report->body.c_str() : "";
}

size_t slh_report_note_count(const slh_report* report) {
  return report ? report->notes.size() : 0;
}

const char* slh_report_note(const slh_report* report, size_t index) {
  if (report == nullptr || index >= report->notes.size()) return nullptr;
  return report->notes[index].c_str();
}

}  // extern "C"
