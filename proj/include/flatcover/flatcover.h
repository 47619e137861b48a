/* flatcover C API.
 *
 * Opaque handles, status codes, and JSON strings for structured results.
 * Strings returned through char** must be released with fc_string_free.
 * fc_last_error() describes the most recent failure on the calling thread.
 */
#ifndef FLATCOVER_H
#define FLATCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(FLATCOVER_BUILDING_LIBRARY)
#define FC_API __attribute__((visibility("default")))
#else
#define FC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_FAILS = 1,      /* the property does not hold */
  FC_INFEASIBLE = 2, /* the work budget would be exceeded */
  FC_EPARAM = 3,
  FC_EFORMAT = 4,
  FC_EIO = 5,
  FC_EINTERNAL = 6
} fc_status;

typedef struct fc_pointset fc_pointset;
typedef struct fc_record fc_record;

FC_API const char* fc_version(void);
FC_API const char* fc_last_error(void);
FC_API void fc_string_free(char* s);

/* 0 restores the hardware default. */
FC_API fc_status fc_set_threads(int n);
FC_API fc_status fc_set_r_max(int r);
FC_API int fc_get_r_max(void);

/* Point sets. Point p is an r-bit word; coordinate i is bit i. */
FC_API fc_status fc_pointset_new(int r, fc_pointset** out);
FC_API fc_status fc_pointset_from_points(int r, const uint64_t* points, size_t n, fc_pointset** out);
FC_API fc_status fc_pointset_load(const char* path, fc_pointset** out);
FC_API fc_status fc_pointset_save(const fc_pointset* s, const char* path, int hexmask);
FC_API int fc_pointset_dim(const fc_pointset* s);
FC_API uint64_t fc_pointset_size(const fc_pointset* s);
FC_API int fc_pointset_contains(const fc_pointset* s, uint64_t p);
FC_API fc_status fc_pointset_insert(fc_pointset* s, uint64_t p);
FC_API fc_status fc_pointset_erase(fc_pointset* s, uint64_t p);
/* Writes up to cap points (ascending) and the total count to *n. */
FC_API fc_status fc_pointset_points(const fc_pointset* s, uint64_t* buf, size_t cap, size_t* n);
FC_API void fc_pointset_free(fc_pointset* s);

/* Constructions. method: balanced | prime | multiblock | rk | simplex | bch |
 * sum3 | full. parts: "r1:d1,r2:d2,..." (multiblock only, else NULL).
 * m, e: dual-BCH override (0 = derived from r and d). */
FC_API fc_status fc_construct(const char* method, int r, int d, const char* parts, int m, int e, fc_record** out);
/* Rebuild from a JSON sidecar; set may be NULL unless the kind is "searched". */
FC_API fc_status fc_record_from_json(const char* sidecar, const fc_pointset* set, fc_record** out);
FC_API fc_status fc_record_json(const fc_record* rec, char** json);
FC_API fc_status fc_record_set(const fc_record* rec, fc_pointset** out);
/* Witness check; FC_OK if every checked point passes, FC_FAILS otherwise.
 * against: membership override (NULL = the record's own set).
 * samples = 0 checks every point when r is small enough. */
FC_API fc_status fc_record_check(const fc_record* rec, const fc_pointset* against, uint64_t samples, uint64_t seed,
                                 char** report_json);
FC_API void fc_record_free(fc_record* rec);

/* Property check by search. mode: "complete" | "nonblocking".
 * method: "search" (default) | "duality" | "direct" (non-blocking only) | "enumerate".
 * budget = 0 uses the default (FLATCOVER_BUDGET or 1e9). */
FC_API fc_status fc_verify(const fc_pointset* s, int d, const char* mode, const char* method, uint64_t budget,
                           char** report_json);

/* quantity: "gamma" | "beta" | "sum3". cache_path may be NULL. */
FC_API fc_status fc_exact(int r, int d, const char* quantity, uint64_t budget, const char* cache_path, char** json);
FC_API fc_status fc_bounds(int r, int d, char** json);
/* Rows for r_lo <= r <= r_hi and 0 <= d <= r; exact values where r <= exact_max_r. */
FC_API fc_status fc_table(int r_lo, int r_hi, int exact_max_r, uint64_t budget, const char* cache_path, char** json);
/* Pairs (r, d), r <= r_limit, where the product formula beats the double sum. */
FC_API fc_status fc_compare_lower(int r_limit, char** json);
/* family: "simplex" (a = d) | "dual-bch" (a = m, b = e). */
FC_API fc_status fc_code_weights(const char* family, int a, int b, char** json);

#ifdef __cplusplus
}
#endif

#endif
