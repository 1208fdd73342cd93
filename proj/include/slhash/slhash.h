/*
 * slhash: simple linear hashing ((a*x + b) mod p) mod m, exact collision
 * oracles and max-load experiments.
 *
 * C interface. Objects are opaque handles created by slh_*_create-style
 * functions and released with the matching slh_*_destroy. Every fallible
 * call returns an slh_status; on failure a description is available from
 * slh_last_error_message() on the same thread until the next failing call.
 */
#ifndef SLHASH_SLHASH_H_
#define SLHASH_SLHASH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SLHASH_BUILDING_LIBRARY)
#    define SLH_API __declspec(dllexport)
#  else
#    define SLH_API __declspec(dllimport)
#  endif
#else
#  define SLH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slh_status {
  SLH_OK = 0,
  SLH_ERR_DOMAIN = 1,           /* argument outside the mathematical domain */
  SLH_ERR_VALIDATION = 2,       /* malformed key set (duplicates, empty) */
  SLH_ERR_BUDGET = 3,           /* exhaustive enumeration over the work budget */
  SLH_ERR_OVERFLOW = 4,
  SLH_ERR_IO = 5,
  SLH_ERR_INVALID_ARGUMENT = 6, /* null pointer, short buffer, unknown name */
  SLH_ERR_INTERNAL = 99
} slh_status;

SLH_API const char* slh_version(void);
SLH_API const char* slh_status_name(slh_status status);
SLH_API const char* slh_last_error_message(void);

/* ---- field arithmetic and the hash family ------------------------------ */

SLH_API int slh_is_prime(uint64_t n);
SLH_API slh_status slh_next_prime_at_least(uint64_t n, uint64_t* out);
SLH_API slh_status slh_mod_inverse(uint64_t x, uint64_t p, uint64_t* out);

typedef struct slh_modulus slh_modulus;

/* p must be prime and 1 <= m <= p. */
SLH_API slh_status slh_modulus_create(uint64_t p, uint64_t m, slh_modulus** out);
SLH_API void slh_modulus_destroy(slh_modulus* mod);
SLH_API uint64_t slh_modulus_p(const slh_modulus* mod);
SLH_API uint64_t slh_modulus_m(const slh_modulus* mod);

/* (a*x + b) mod p, its residue mod m, and floor((a*x + b) / p). */
SLH_API slh_status slh_eval_full(const slh_modulus* mod, uint64_t a, uint64_t b,
                                 uint64_t x, uint64_t* out);
SLH_API slh_status slh_eval_binned(const slh_modulus* mod, uint64_t a, uint64_t b,
                                   uint64_t x, uint64_t* out);
SLH_API slh_status slh_leaps(const slh_modulus* mod, uint64_t a, uint64_t b,
                             uint64_t x, uint64_t* out);

/* ---- key sets and loads ------------------------------------------------ */

typedef struct slh_keyset slh_keyset;

SLH_API slh_status slh_keyset_interval(uint64_t length, slh_keyset** out);
SLH_API slh_status slh_keyset_affine(uint64_t length, uint64_t alpha,
                                     uint64_t beta, slh_keyset** out);
/* Copies and sorts the elements; duplicates give SLH_ERR_VALIDATION. */
SLH_API slh_status slh_keyset_explicit(const uint64_t* elements, size_t count,
                                       slh_keyset** out);
SLH_API void slh_keyset_destroy(slh_keyset* ks);
SLH_API uint64_t slh_keyset_size(const slh_keyset* ks);

/* Writes the elements to buf. *written receives the element count, also
 * when capacity is too small (then SLH_ERR_INVALID_ARGUMENT). */
SLH_API slh_status slh_keyset_materialize(const slh_keyset* ks,
                                          const slh_modulus* mod, uint64_t* buf,
                                          size_t capacity, size_t* written);

/* loads must hold m entries. */
SLH_API slh_status slh_load_profile(const slh_modulus* mod, uint64_t a,
                                    uint64_t b, const slh_keyset* ks,
                                    uint64_t* loads, size_t capacity,
                                    uint64_t* max_load);

SLH_API void slh_max_load_b_zero_bounds(uint64_t max_load_ab, uint64_t* lower,
                                        uint64_t* upper);

/* ---- exhaustive oracles ------------------------------------------------ */

typedef struct slh_enum_options {
  uint32_t workers; /* 0 = one per hardware thread */
  uint64_t budget;  /* maximum hash evaluations per call */
} slh_enum_options;

SLH_API void slh_enum_options_init(slh_enum_options* opts);

typedef struct slh_rational {
  uint64_t num;
  uint64_t den;
} slh_rational;

typedef struct slh_collision_stats {
  uint64_t satisfying_pairs;
  uint64_t total_pairs; /* p^2 */
} slh_collision_stats;

typedef struct slh_canonical_triple {
  uint64_t d;
  uint64_t alpha;
  uint64_t beta;
} slh_canonical_triple;

typedef struct slh_triple_bounds {
  slh_rational statement;
  slh_rational proof;
  slh_rational ceiling;
} slh_triple_bounds;

/* opts may be NULL for defaults. */
SLH_API slh_status slh_count_triple_collisions(const slh_modulus* mod,
                                               uint64_t x, uint64_t y, uint64_t z,
                                               const slh_enum_options* opts,
                                               slh_collision_stats* out);
SLH_API slh_status slh_count_prescribed_triple(const slh_modulus* mod,
                                               uint64_t x, uint64_t y, uint64_t z,
                                               uint64_t ix, uint64_t iy, uint64_t iz,
                                               const slh_enum_options* opts,
                                               slh_collision_stats* out);
SLH_API slh_status slh_count_interval_collision(const slh_modulus* mod,
                                                uint64_t d,
                                                const slh_enum_options* opts,
                                                slh_collision_stats* out);
SLH_API slh_status slh_canonicalize_triple(uint64_t p, uint64_t x, uint64_t y,
                                           uint64_t z, slh_canonical_triple* out);
SLH_API slh_status slh_triple_bound_formula(const slh_modulus* mod, uint64_t d,
                                            slh_triple_bounds* out);
SLH_API slh_status slh_interval_lower_bound(const slh_modulus* mod, uint64_t d,
                                            slh_rational* out);

/* counts[l] = number of parameter tuples whose max load is l, for
 * l in [0, |S|]; capacity must be at least |S| + 1. b_zero selects the
 * (a, 0) family instead of all (a, b). */
SLH_API slh_status slh_exact_maxload_histogram(const slh_modulus* mod,
                                               const slh_keyset* ks, int b_zero,
                                               const slh_enum_options* opts,
                                               uint64_t* counts, size_t capacity);

/* ---- Monte Carlo --------------------------------------------------------- */

typedef struct slh_estimate slh_estimate;

SLH_API slh_status slh_mc_linear_maxload(const slh_modulus* mod,
                                         const slh_keyset* ks, uint64_t samples,
                                         uint64_t seed, uint32_t workers,
                                         slh_estimate** out);
SLH_API slh_status slh_mc_fully_random_maxload(uint64_t m, uint64_t balls,
                                               uint64_t samples, uint64_t seed,
                                               uint32_t workers,
                                               slh_estimate** out);
SLH_API void slh_estimate_destroy(slh_estimate* est);
SLH_API double slh_estimate_mean(const slh_estimate* est);
SLH_API double slh_estimate_std_error(const slh_estimate* est);
SLH_API uint64_t slh_estimate_samples(const slh_estimate* est);
SLH_API uint64_t slh_estimate_seed(const slh_estimate* est);
SLH_API uint64_t slh_estimate_max_observed(const slh_estimate* est);
/* Fraction of samples with max load >= l; 0 beyond the largest observed. */
SLH_API double slh_estimate_tail(const slh_estimate* est, uint64_t l);
SLH_API const char* slh_estimate_generator(const slh_estimate* est);

/* ---- experiments --------------------------------------------------------- */

enum {
  SLH_OPT_P = 1u << 0,
  SLH_OPT_M = 1u << 1,
  SLH_OPT_SEED = 1u << 2,
  SLH_OPT_SAMPLES = 1u << 3,
  SLH_OPT_ALPHA = 1u << 4,
  SLH_OPT_BETA = 1u << 5,
  SLH_OPT_X = 1u << 6,
  SLH_OPT_Y = 1u << 7,
  SLH_OPT_Z = 1u << 8
};

typedef struct slh_experiment_options {
  uint32_t set_fields; /* SLH_OPT_* bits marking which values below are set */
  uint64_t p, m, seed, samples, alpha, beta, x, y, z;
  uint32_t workers;
  uint64_t budget;
  int full_sweep;
  int b_zero;
  const uint64_t* d_values;
  size_t d_count;
  const uint64_t* m_values;
  size_t m_count;
  const char* out_path; /* NULL or "": do not write files */
} slh_experiment_options;

SLH_API void slh_experiment_options_init(slh_experiment_options* opts);
SLH_API size_t slh_experiment_count(void);
SLH_API const char* slh_experiment_name(size_t index);

typedef struct slh_report slh_report;

typedef struct slh_check_view {
  const char* name;
  const char* claim;
  const char* observed;
  const char* required;
  int passed;
  int artifact_tolerance;
} slh_check_view;

SLH_API slh_status slh_run_experiment(const char* name,
                                      const slh_experiment_options* opts,
                                      slh_report** out);
SLH_API void slh_report_destroy(slh_report* report);
SLH_API int slh_report_overall(const slh_report* report);
SLH_API size_t slh_report_check_count(const slh_report* report);
SLH_API slh_status slh_report_check(const slh_report* report, size_t index,
                                    slh_check_view* out);
/* Human-readable table; owned by the report. */
SLH_API const char* slh_report_table(const slh_report* report);
/* Result CSV without the metadata block; owned by the report. */
SLH_API const char* slh_report_csv_body(const slh_report* report);
SLH_API size_t slh_report_note_count(const slh_report* report);
SLH_API const char* slh_report_note(const slh_report* report, size_t index);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* SLHASH_SLHASH_H_ */
