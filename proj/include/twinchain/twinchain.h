/*
 * twinchain C interface.
 *
 * Every function that can fail returns a twc_status; on failure a message
 * is available from twc_last_error() on the calling thread. Handles are
 * opaque and owned by the caller once returned; free them with the
 * matching *_free function (passing NULL is allowed).
 *
 * Element indices are 1-based. Subsets are reported as 32-bit masks in
 * which bit i-1 stands for element i.
 */
#ifndef TWINCHAIN_H
#define TWINCHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TWC_API __declspec(dllexport)
#else
#define TWC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twc_status {
  TWC_OK = 0,
  TWC_ERR_PARSE = 1,
  TWC_ERR_CYCLE = 2,
  TWC_ERR_INDEX = 3,
  TWC_ERR_DIMENSION_MISMATCH = 4,
  TWC_ERR_SIZE = 5,
  TWC_ERR_DEGENERATE_INPUT = 6,
  TWC_ERR_ODD_DIMENSION = 7,
  TWC_ERR_UNVALIDATED_INPUT = 8,
  TWC_ERR_BOUND_VIOLATION = 9,
  TWC_ERR_GOLDEN_MISMATCH = 10,
  TWC_ERR_IO = 11,
  TWC_ERR_OVERFLOW = 12,
  /* a geometric or census check ran and did not pass */
  TWC_ERR_VERIFICATION_FAILED = 13,
  TWC_ERR_INVALID_ARGUMENT = 14,
  TWC_ERR_INTERNAL = 15
} twc_status;

typedef struct twc_poset twc_poset;
typedef struct twc_family twc_family;
typedef struct twc_text twc_text;

TWC_API const char* twc_version(void);
/* Message of the last failure on this thread, or "" */
TWC_API const char* twc_last_error(void);
TWC_API const char* twc_status_name(twc_status status);

/* ---- posets ---- */

/* covers holds n_covers pairs (i, j), meaning i < j, as 2*n_covers ints. */
TWC_API twc_status twc_poset_from_covers(size_t d, const int* covers, size_t n_covers, twc_poset** out);
/* Line or JSON pair format; see the README. */
TWC_API twc_status twc_pair_parse(const char* text, twc_poset** p, twc_poset** q);
TWC_API twc_status twc_pair_read_file(const char* path, twc_poset** p, twc_poset** q);
TWC_API twc_status twc_pair_format(const twc_poset* p, const twc_poset* q, twc_text** out);
TWC_API size_t twc_poset_size(const twc_poset* p);
TWC_API void twc_poset_free(twc_poset* p);

/* ---- facet counts ---- */

TWC_API twc_status twc_facet_count(const twc_poset* p, const twc_poset* q, uint64_t* out);
TWC_API twc_status twc_facet_chains(const twc_poset* p, const twc_poset* q, twc_family** out);
TWC_API size_t twc_family_size(const twc_family* family);
TWC_API twc_status twc_family_get(const twc_family* family, size_t k, uint32_t* p_mask, uint32_t* q_mask);
/* One chain per line; json != 0 gives one JSON object per line. */
TWC_API twc_status twc_family_format(const twc_family* family, int json, twc_text** out);
TWC_API void twc_family_free(twc_family* family);

/* Exact bound as numerator / denominator. */
TWC_API twc_status twc_bound(size_t d, uint64_t* numerator, uint64_t* denominator);
TWC_API twc_status twc_is_equality_case(const twc_poset* p, const twc_poset* q, int* out);

/* ---- geometry ---- */

typedef enum twc_level { TWC_LEVEL_VALIDITY = 0, TWC_LEVEL_FACETS = 1, TWC_LEVEL_COMPLETE = 2 } twc_level;

/* Writes a report to *out. Returns TWC_ERR_VERIFICATION_FAILED, with the
 * report still written, when a check fails. */
TWC_API twc_status twc_verify_geometry(const twc_poset* p, const twc_poset* q, twc_level level, twc_text** out);

/* ---- census and tables ---- */

typedef struct twc_census_options {
  size_t d;
  int extended;
  int prune; /* skip labelings equivalent under automorphisms of G_P */
  unsigned jobs;
  const char* out_dir; /* NULL or "" keeps everything in memory */
} twc_census_options;

TWC_API void twc_census_options_init(twc_census_options* options);
/* Writes the summary to *out. On TWC_ERR_BOUND_VIOLATION *out holds the
 * offending pair in the line format; TWC_ERR_VERIFICATION_FAILED means the
 * equality characterization did not hold. */
TWC_API twc_status twc_census_run(const twc_census_options* options, twc_text** out);

/* which is T1, T3, T4, D2, EX23 or all. Returns TWC_ERR_GOLDEN_MISMATCH,
 * with the tables still written, if any cell differs. */
TWC_API twc_status twc_tables(const char* which, int long_run, int json, twc_text** out);

/* ---- text ---- */

TWC_API const char* twc_text_data(const twc_text* text);
TWC_API size_t twc_text_size(const twc_text* text);
TWC_API void twc_text_free(twc_text* text);

#ifdef __cplusplus
}
#endif

#endif /* TWINCHAIN_H */
