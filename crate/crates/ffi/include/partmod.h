#ifndef PARTMOD_H
#define PARTMOD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PartmodStatus {
  PARTMOD_STATUS_OK = 0,
  PARTMOD_STATUS_NULL_POINTER = 1,
  PARTMOD_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed partition or label text.
   */
  PARTMOD_STATUS_PARSE = 3,
  /**
   * Well-formed input the operation does not accept (characteristic,
   * regularity, sizes, ranges).
   */
  PARTMOD_STATUS_INVALID_ARGUMENT = 4,
  /**
   * Input outside the domain of the underlying rule.
   */
  PARTMOD_STATUS_PRECONDITION = 5,
  /**
   * Input above the oracle size cap.
   */
  PARTMOD_STATUS_TOO_LARGE = 6,
  /**
   * A computation failed in a way that indicates a defect.
   */
  PARTMOD_STATUS_INTERNAL = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  PARTMOD_STATUS_PANIC = 8,
} PartmodStatus;

typedef enum PartmodVerdict {
  PARTMOD_VERDICT_TRIVIAL = 0,
  PARTMOD_VERDICT_NOT_IRREDUCIBLE = 1,
  PARTMOD_VERDICT_IRREDUCIBLE = 2,
  PARTMOD_VERDICT_BASIC_SPIN_OPEN = 3,
} PartmodVerdict;

/**
 * Opaque classification handle.
 */
typedef struct PartmodClassification PartmodClassification;

/**
 * Opaque partition handle.
 */
typedef struct PartmodPartition PartmodPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread. Valid until the next failing
 * call on the same thread; never NULL.
 */
const char *partmod_last_error(void);

/**
 * Library version, statically allocated.
 */
const char *partmod_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void partmod_string_free(char *s);

/**
 * Parses `5,3,1` (or `-` for the empty partition).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PartmodStatus partmod_partition_parse(const char *text, struct PartmodPartition **out);

/**
 * # Safety
 * `lambda` must come from this library and not have been freed.
 */
void partmod_partition_free(struct PartmodPartition *lambda);

/**
 * `|λ|`; 0 for NULL.
 *
 * # Safety
 * `lambda` must be NULL or a live handle.
 */
size_t partmod_partition_size(const struct PartmodPartition *lambda);

/**
 * Number of rows; 0 for NULL.
 *
 * # Safety
 * `lambda` must be NULL or a live handle.
 */
size_t partmod_partition_height(const struct PartmodPartition *lambda);

/**
 * Writes a newly allocated `5,3,1` string; free with `partmod_string_free`.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_partition_to_string(const struct PartmodPartition *lambda, char **out);

/**
 * The Mullineux image `λ^M` as a new handle.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_mullineux(const struct PartmodPartition *lambda,
                                     size_t p,
                                     struct PartmodPartition **out);

/**
 * Whether `D^λ` splits on restriction to the alternating group.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_splits(const struct PartmodPartition *lambda, size_t p, bool *out);

/**
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_is_js(const struct PartmodPartition *lambda, size_t p, bool *out);

/**
 * Total number of normal nodes over all residues.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_normal_count(const struct PartmodPartition *lambda,
                                        size_t p,
                                        size_t *out);

/**
 * `dim D^λ` over `F_p` as a Gram rank, plus the number of standard
 * tableaux. `syt_out` may be NULL.
 *
 * # Safety
 * `lambda` must be a live handle; `rank_out` must be writable.
 */
enum PartmodStatus partmod_gram_rank(const struct PartmodPartition *lambda,
                                     size_t p,
                                     size_t *rank_out,
                                     size_t *syt_out);

/**
 * Classifies `lhs ⊗ rhs` for `A_n`, `p ∈ {2, 3}`.
 *
 * # Safety
 * `lhs` and `rhs` must be NUL-terminated strings; `out` must be writable.
 */
enum PartmodStatus partmod_classify(size_t p,
                                    size_t n,
                                    const char *lhs,
                                    const char *rhs,
                                    struct PartmodClassification **out);

/**
 * # Safety
 * `c` must come from this library and not have been freed.
 */
void partmod_classification_free(struct PartmodClassification *c);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_classification_verdict(const struct PartmodClassification *c,
                                                  enum PartmodVerdict *out);

/**
 * Writes the product label (e.g. `4,3,2`), or NULL when the verdict carries
 * none.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_classification_product(const struct PartmodClassification *c,
                                                  char **out);

/**
 * The full record as a JSON object, matching the CLI payload.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PartmodStatus partmod_classification_to_json(const struct PartmodClassification *c,
                                                  char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARTMOD_H */
