#ifndef CYCLIC_AQEC_H
#define CYCLIC_AQEC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AqecStatus {
  AQEC_STATUS_OK = 0,
  AQEC_STATUS_NULL_POINTER = 1,
  AQEC_STATUS_INVALID_UTF8 = 2,
  AQEC_STATUS_PANIC = 3,
  AQEC_STATUS_BUFFER_TOO_SMALL = 4,
  AQEC_STATUS_NOT_PRIME = 10,
  AQEC_STATUS_TOO_LARGE = 11,
  AQEC_STATUS_DEGREE_OUT_OF_RANGE = 12,
  AQEC_STATUS_DIVISION_BY_ZERO = 13,
  AQEC_STATUS_FIELD_MISMATCH = 14,
  AQEC_STATUS_ORDER_UNAVAILABLE = 15,
  AQEC_STATUS_NOT_COPRIME = 16,
  AQEC_STATUS_NOT_COSET_CLOSED = 17,
  AQEC_STATUS_DUPLICATE_RESIDUES = 18,
  AQEC_STATUS_RESIDUE_OUT_OF_RANGE = 19,
  AQEC_STATUS_NOT_DIVISOR = 20,
  AQEC_STATUS_NOT_MONIC = 21,
  AQEC_STATUS_DELTA_OUT_OF_RANGE = 22,
  AQEC_STATUS_K_OUT_OF_RANGE = 23,
  AQEC_STATUS_LENGTH_MISMATCH = 24,
  AQEC_STATUS_ZERO_CODE = 25,
  AQEC_STATUS_EMPTY_DIFFERENCE = 26,
  AQEC_STATUS_NOT_NESTED = 27,
  AQEC_STATUS_NONPOSITIVE_DIMENSION = 28,
  AQEC_STATUS_GAUGE_OUT_OF_RANGE = 29,
  AQEC_STATUS_INEXACT_DISTANCE = 30,
  AQEC_STATUS_CONSTANT_FACTOR = 31,
  AQEC_STATUS_RANGE_VIOLATION = 32,
  AQEC_STATUS_T_NOT_IN_ADMISSIBLE_SET = 33,
  AQEC_STATUS_HULL_TOO_LARGE = 34,
  AQEC_STATUS_DIMENSION_IDENTITY = 35,
  AQEC_STATUS_UNKNOWN_COMMAND = 36,
  AQEC_STATUS_BAD_FLAG = 37,
  AQEC_STATUS_SCHEMA_VIOLATION = 38,
  AQEC_STATUS_BUDGET_EXCEEDED = 39,
  AQEC_STATUS_SEARCH_SPACE_TOO_LARGE = 40,
  AQEC_STATUS_IO = 41,
} AqecStatus;

/**
 * Opaque cyclic code.
 */
typedef struct AqecCode AqecCode;

/**
 * A minimum weight; when `exact` is set, `lower == upper == value`.
 */
typedef struct AqecWeight {
  size_t value;
  bool exact;
  size_t lower;
  size_t upper;
} AqecWeight;

/**
 * Parameters of an asymmetric quantum or subsystem code.
 * `r` is -1 for plain quantum codes; `pure_x`/`pure_z` are -1 when unknown.
 */
typedef struct AqecParams {
  size_t n;
  uint32_t q;
  size_t k;
  int64_t r;
  size_t dx;
  size_t dz;
  bool dx_exact;
  bool dz_exact;
  int8_t pure_x;
  int8_t pure_z;
} AqecParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *aqec_last_error_message(void);

/**
 * Library name and version, statically allocated.
 */
const char *aqec_version(void);

/**
 * Cyclic code of length `n` over GF(q) with the given defining set.
 *
 * # Safety
 * `defset` must point to `len` values (may be null when `len == 0`);
 * `out` must be writable.
 */
enum AqecStatus aqec_code_from_defset(size_t n,
                                      uint32_t q,
                                      const size_t *defset,
                                      size_t len,
                                      struct AqecCode **out);

/**
 * Cyclic code generated by a monic divisor of x^n - 1; coefficients are
 * field element indices, constant term first.
 *
 * # Safety
 * `coeffs` must point to `len` values; `out` must be writable.
 */
enum AqecStatus aqec_code_from_genpoly(size_t n,
                                       uint32_t q,
                                       const uint32_t *coeffs,
                                       size_t len,
                                       struct AqecCode **out);

/**
 * BCH code with designed distance `delta` and first root exponent `b`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AqecStatus aqec_code_bch(size_t n, uint32_t q, size_t delta, size_t b, struct AqecCode **out);

/**
 * Reed-Solomon code of length q - 1 and dimension `k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AqecStatus aqec_code_rs(uint32_t q, size_t k, size_t b, struct AqecCode **out);

/**
 * Euclidean dual code.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum AqecStatus aqec_code_dual(const struct AqecCode *c, struct AqecCode **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void aqec_code_free(struct AqecCode *c);

/**
 * Length n, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t aqec_code_length(const struct AqecCode *c);

/**
 * Dimension k, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t aqec_code_dimension(const struct AqecCode *c);

/**
 * Copies up to `cap` residues of the sorted defining set into `buf` and
 * returns the full size of the set.
 *
 * # Safety
 * `c` must be null or a live handle; `buf` must hold `cap` values.
 */
size_t aqec_code_defset(const struct AqecCode *c, size_t *buf, size_t cap);

/**
 * Minimum Hamming weight, exact when at most `budget` codewords suffice.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum AqecStatus aqec_code_min_weight(const struct AqecCode *c,
                                     uint64_t budget,
                                     struct AqecWeight *out);

/**
 * CSS code from C2^perp inside C1.
 *
 * # Safety
 * `c1`, `c2` must be live handles; `out` must be writable.
 */
enum AqecStatus aqec_css(const struct AqecCode *c1,
                         const struct AqecCode *c2,
                         uint64_t budget,
                         struct AqecParams *out);

/**
 * CSS subsystem code with `r` gauge qudits.
 *
 * # Safety
 * `c1`, `c2` must be live handles; `out` must be writable.
 */
enum AqecStatus aqec_css_subsystem(const struct AqecCode *c1,
                                   const struct AqecCode *c2,
                                   size_t r,
                                   uint64_t budget,
                                   struct AqecParams *out);

/**
 * Construction from a factor f of (x^n - 1) / g1; coefficients constant term first.
 *
 * # Safety
 * `c1` must be a live handle; `coeffs` must point to `len` values; `out` must be writable.
 */
enum AqecStatus aqec_genpoly(const struct AqecCode *c1,
                             const uint32_t *coeffs,
                             size_t len,
                             uint64_t budget,
                             struct AqecParams *out);

/**
 * Construction from a coset-closed set T of admissible residues.
 *
 * # Safety
 * `c1` must be a live handle; `t` must point to `len` values; `out` must be writable.
 */
enum AqecStatus aqec_defset(const struct AqecCode *c1,
                            const size_t *t,
                            size_t len,
                            uint64_t budget,
                            struct AqecParams *out);

/**
 * The two subsystem codes built from C1 and its hull; `out` receives two entries.
 *
 * # Safety
 * `c1` must be a live handle; `out` must point to two writable `AqecParams`.
 */
enum AqecStatus aqec_euclidean(const struct AqecCode *c1, uint64_t budget, struct AqecParams *out);

/**
 * Row-major stabilizer matrices: HX spans C2^perp, HZ spans C1^perp, both
 * with n columns. Row counts are always written; entries are written only
 * when the buffers are large enough, otherwise `BufferTooSmall` is returned.
 *
 * # Safety
 * `c1`, `c2` must be live handles; `hx`/`hz` must hold `hx_cap`/`hz_cap`
 * values (may be null when the capacity is 0); row-count pointers must be writable.
 */
enum AqecStatus aqec_stabilizer_matrices(const struct AqecCode *c1,
                                         const struct AqecCode *c2,
                                         uint32_t *hx,
                                         size_t hx_cap,
                                         uint32_t *hz,
                                         size_t hz_cap,
                                         size_t *hx_rows,
                                         size_t *hz_rows);

/**
 * Catalog for length `n` over GF(q), one JSON record per line.
 *
 * # Safety
 * `out` must be writable; the string is released with `aqec_string_free`.
 */
enum AqecStatus aqec_search_json(size_t n, uint32_t q, uint64_t budget, char **out);

/**
 * Recomputes one JSON record; `pass` receives whether (n, q, k, r, dx, dz) match.
 *
 * # Safety
 * `json` must be a nul-terminated string; `pass` must be writable.
 */
enum AqecStatus aqec_verify_json(const char *json, uint64_t budget, bool *pass);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void aqec_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_AQEC_H */
