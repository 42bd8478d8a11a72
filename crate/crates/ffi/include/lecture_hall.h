#ifndef LECTURE_HALL_H
#define LECTURE_HALL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  LH_STATUS_OK = 0,
  LH_STATUS_NULL_POINTER = 1,
  LH_STATUS_INVALID_PARTITION = 2,
  LH_STATUS_INVALID_ABACUS = 3,
  LH_STATUS_BUFFER_TOO_SMALL = 4,
  LH_STATUS_OVERFLOW = 5,
  LH_STATUS_MISMATCH = 6,
  LH_STATUS_PANIC = 7,
} LhStatus;

/**
 * An abacus diagram given by its defining beads.
 */
typedef struct LhAbacus LhAbacus;

/**
 * A bounded partition together with its `n`.
 */
typedef struct LhBounded LhBounded;

/**
 * A lecture hall partition.
 */
typedef struct LhPartition LhPartition;

/**
 * Outcome of a generating-function check. When `mismatch` is nonzero the
 * `x`, `u`, `v` fields hold the first exponent where the two sides differ.
 */
typedef struct {
  uint64_t compared;
  uint8_t mismatch;
  uint32_t x;
  uint32_t u;
  uint32_t v;
} LhVerifyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *lh_status_message(LhStatus status);

/**
 * # Safety
 * `parts` must point to `len` readable values (or be null when `len` is 0)
 * and `out` must be a valid pointer to write the handle into.
 */
LhStatus lh_partition_new(const int64_t *parts, size_t len, LhPartition **out);

/**
 * # Safety
 * `partition` must be null or a handle from this library not yet freed.
 */
void lh_partition_free(LhPartition *partition);

/**
 * Number of parts, or 0 for a null handle.
 *
 * # Safety
 * `partition` must be null or a live handle.
 */
size_t lh_partition_len(const LhPartition *partition);

/**
 * # Safety
 * `partition` must be a live handle and `out` must have room for `capacity` values.
 */
LhStatus lh_partition_parts(const LhPartition *partition, int64_t *out, size_t capacity);

/**
 * # Safety
 * `partition` must be a live handle and `out` writable.
 */
LhStatus lh_partition_weight(const LhPartition *partition, int64_t *out);

/**
 * # Safety
 * Same contract as [`lh_partition_new`].
 */
LhStatus lh_bounded_new(size_t n, const int64_t *parts, size_t len, LhBounded **out);

/**
 * # Safety
 * `bounded` must be null or a handle from this library not yet freed.
 */
void lh_bounded_free(LhBounded *bounded);

/**
 * Number of parts (possibly 0), or 0 for a null handle.
 *
 * # Safety
 * `bounded` must be null or a live handle.
 */
size_t lh_bounded_len(const LhBounded *bounded);

/**
 * # Safety
 * `bounded` must be a live handle and `out` must have room for `capacity` values.
 */
LhStatus lh_bounded_parts(const LhBounded *bounded, int64_t *out, size_t capacity);

/**
 * # Safety
 * `bounded` must be a live handle and `out` writable.
 */
LhStatus lh_bounded_weight(const LhBounded *bounded, int64_t *out);

/**
 * Builds an abacus from `n` defining beads in increasing order.
 *
 * # Safety
 * `beads` must point to `len` readable values and `out` must be writable.
 */
LhStatus lh_abacus_new(size_t n, const int64_t *beads, size_t len, LhAbacus **out);

/**
 * # Safety
 * `abacus` must be null or a handle from this library not yet freed.
 */
void lh_abacus_free(LhAbacus *abacus);

/**
 * `n`, which is also the number of defining beads; 0 for a null handle.
 *
 * # Safety
 * `abacus` must be null or a live handle.
 */
size_t lh_abacus_n(const LhAbacus *abacus);

/**
 * # Safety
 * `abacus` must be a live handle and `out` must have room for `capacity` values.
 */
LhStatus lh_abacus_beads(const LhAbacus *abacus, int64_t *out, size_t capacity);

/**
 * Writes 1 to `out` if `position` holds a bead, else 0.
 *
 * # Safety
 * `abacus` must be a live handle and `out` writable.
 */
LhStatus lh_abacus_is_bead(const LhAbacus *abacus, int64_t position, uint8_t *out);

/**
 * # Safety
 * `partition` must be a live handle and `out` writable.
 */
LhStatus lh_encode(const LhPartition *partition, LhAbacus **out);

/**
 * # Safety
 * `abacus` must be a live handle and `out` writable.
 */
LhStatus lh_decode(const LhAbacus *abacus, LhPartition **out);

/**
 * # Safety
 * `abacus` must be a live handle and `out` writable.
 */
LhStatus lh_to_bounded(const LhAbacus *abacus, LhBounded **out);

/**
 * # Safety
 * `bounded` must be a live handle and `out` writable.
 */
LhStatus lh_from_bounded(const LhBounded *bounded, LhAbacus **out);

/**
 * Compares both sides of the lecture hall generating-function identity up
 * to `x^max_x`, in `x` alone or with the `u`, `v` refinement when `refined`
 * is nonzero. Returns `Ok` or `Mismatch` and fills `report` in both cases.
 *
 * # Safety
 * `report` must be writable.
 */
LhStatus lh_verify(size_t n, uint32_t max_x, uint8_t refined, LhVerifyReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LECTURE_HALL_H */
