#ifndef ENTBOUND_ENTBOUND_H
#define ENTBOUND_ENTBOUND_H

/* C interface to the entbound library.
 *
 * Every fallible call returns an eb_status; on failure a description is
 * available from eb_last_error() until the next call on the same thread.
 * Handles are opaque and released with the matching *_free function.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(ENTBOUND_BUILDING_LIBRARY)
#define EB_API __attribute__((visibility("default")))
#else
#define EB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eb_status {
  EB_OK = 0,
  EB_ERR_INVALID_ARGUMENT = 1,
  EB_ERR_PARSE = 2,
  EB_ERR_DOMAIN = 3,
  EB_ERR_IO = 4,
  EB_ERR_NUMERIC = 5,
  EB_ERR_INTERNAL = 6
} eb_status;

EB_API const char* eb_last_error(void);
EB_API const char* eb_version(void);

/* ---- states ---- */

typedef struct eb_state eb_state;

/* schmidt3:l0,...,l4[,phi] | wclass:a,b,c | haar:2x2x2:seed */
EB_API eb_status eb_state_parse(const char* spec, eb_state** out);
EB_API eb_status eb_state_schmidt3(const double lambdas[5], double phi, eb_state** out);
EB_API eb_status eb_state_wclass(double a, double b, double c, eb_state** out);
EB_API eb_status eb_state_haar(const size_t* dims, size_t num_dims, uint64_t seed, eb_state** out);
EB_API void eb_state_free(eb_state* state);

EB_API size_t eb_state_num_subsystems(const eb_state* state);
EB_API size_t eb_state_dimension(const eb_state* state);
/* Copies min(capacity, dimension) amplitudes. */
EB_API eb_status eb_state_amplitudes(const eb_state* state, double* re, double* im, size_t capacity);

/* ---- measures ---- */

typedef enum eb_measure_kind {
  EB_MEASURE_CONCURRENCE = 0,
  EB_MEASURE_SCREN = 1,
  EB_MEASURE_SCRENOA = 2,
  EB_MEASURE_COA = 3
} eb_measure_kind;

#define EB_MAX_PAIRWISE 5

typedef struct eb_measure_vector {
  eb_measure_kind kind;
  double one_vs_rest;
  size_t num_pairwise;
  double pairwise[EB_MAX_PAIRWISE];
} eb_measure_vector;

EB_API eb_status eb_measure_kind_parse(const char* name, eb_measure_kind* out);
EB_API const char* eb_measure_kind_name(eb_measure_kind kind);

/* Qubit states with 3 to 6 parties; party 0 is the focus. */
EB_API eb_status eb_measure(const eb_state* state, eb_measure_kind kind, eb_measure_vector* out);

/* ---- bounds ---- */

typedef enum eb_bound_mode { EB_MONOGAMY = 0, EB_POLYGAMY = 1 } eb_bound_mode;

typedef enum eb_variant { EB_VARIANT_OURS = 0, EB_VARIANT_JFQ = 1, EB_VARIANT_ZJZ1 = 2, EB_VARIANT_ZJZ2 = 3 } eb_variant;

EB_API eb_status eb_variant_parse(const char* name, eb_variant* out);
EB_API const char* eb_variant_name(eb_variant variant);

typedef struct eb_bound_spec {
  eb_bound_mode mode;
  int has_a;       /* 0: a = max(1, largest admissible a) */
  double a;
  double base_exp;   /* r or s */
  double target_exp; /* alpha or beta */
  eb_variant variant;
  double variant_param; /* p or q for zjz1 */
  int allow_unmet;      /* nonzero: report an unmet ratio condition instead of failing */
} eb_bound_spec;

/* monogamy, a unset, r = 2, alpha = 1, ours, param 1/2, allow_unmet 0 */
EB_API void eb_bound_spec_init(eb_bound_spec* spec);

typedef struct eb_bound_report {
  double bound_value;
  int has_measured;
  double measured_value;
  double margin;
  int ratio_condition_ok;
  double max_admissible_a; /* may be +inf */
  double a_used;
  int base_relation_assumed;
} eb_bound_report;

EB_API eb_status eb_bound_evaluate(const eb_measure_vector* mv, const eb_bound_spec* spec, eb_bound_report* out);

EB_API eb_status eb_scalar_lower_bound(double t, double x, double a, eb_variant variant, double param, double* out);
EB_API eb_status eb_scalar_upper_bound(double t, double x, double a, eb_variant variant, double param, double* out);
/* values sorted descending, nonnegative */
EB_API eb_status eb_ordered_weighted_sum(const double* values, size_t n, double x, double a, double* out);
EB_API eb_status eb_max_admissible_a(const double* values, size_t n, double exponent, double* out);

/* ---- example sweeps ---- */

typedef enum eb_example { EB_EXAMPLE1 = 0, EB_EXAMPLE2 = 1 } eb_example;

typedef struct eb_axis {
  double lo, hi, step;
} eb_axis;

/* axis1 is alpha or beta, axis2 is r or s. With axis1_starts_at_axis2 set,
 * axis1 runs from the current axis2 value and axis1.lo is ignored. */
typedef struct eb_grid {
  eb_axis axis1;
  eb_axis axis2;
  int axis1_starts_at_axis2;
} eb_grid;

EB_API eb_status eb_example_parse(const char* name, eb_example* out);
EB_API eb_status eb_default_grid(eb_example example, eb_grid* out);

typedef struct eb_report eb_report;

/* Writes the CSV to path ("-" for stdout). grid may be NULL for the default.
 * rows and check are optional outputs; check receives the ordering checks. */
EB_API eb_status eb_repro_write_csv(eb_example example, const eb_grid* grid, const char* path, size_t* rows,
                                    eb_report** check);

/* ---- verification ---- */

typedef struct eb_report_summary {
  uint64_t total;
  uint64_t failures;
  uint64_t skipped;
  double worst_margin; /* +inf when nothing was checked */
} eb_report_summary;

typedef struct eb_family_summary {
  const char* name; /* owned by the report */
  double tolerance;
  int relative;
  uint64_t total;
  uint64_t failures;
  uint64_t skipped;
  double worst_margin;
} eb_family_summary;

/* suite: scalar, monogamy, polygamy, dominance, base or all.
 * n is the per-family sample count (monogamy also draws n/10 four-qubit
 * states; dominance ignores n). tolerance < 0 selects the defaults. */
EB_API eb_status eb_verify(const char* suite, uint64_t n, uint64_t seed, double tolerance, eb_report** out);

EB_API void eb_report_summary_get(const eb_report* report, eb_report_summary* out);
EB_API size_t eb_report_family_count(const eb_report* report);
EB_API eb_status eb_report_family(const eb_report* report, size_t index, eb_family_summary* out);
EB_API size_t eb_report_failure_count(const eb_report* report);
/* inputs is owned by the report */
EB_API eb_status eb_report_failure(const eb_report* report, size_t index, const char** inputs, double* margin);
EB_API void eb_report_free(eb_report* report);

#ifdef __cplusplus
}
#endif

#endif
