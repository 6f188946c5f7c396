#ifndef POISSON_FORGE_H
#define POISSON_FORGE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stdint.h>

/**
 * Outcome of a call.
 */
typedef enum PfStatus {
  PF_STATUS_OK = 0,
  /**
   * Well-formed input violating a mathematical precondition.
   */
  PF_STATUS_DOMAIN_ERROR = 1,
  /**
   * Malformed JSON or encoding.
   */
  PF_STATUS_PARSE_ERROR = 2,
  PF_STATUS_NULL_POINTER = 3,
  PF_STATUS_INVALID_UTF8 = 4,
  /**
   * A bug: the library panicked.
   */
  PF_STATUS_PANIC = 5,
} PfStatus;

/**
 * Polynomial multivector field with rational coefficients.
 */
typedef struct PfField PfField;

/**
 * Compatible pair `(k, f)` of a linear Poisson structure on R³.
 */
typedef struct PfLinearPair PfLinearPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread (empty after success).
 * The pointer stays valid until the next call on the same thread.
 */
const char *pf_last_error(void);

/**
 * Library version, a static string.
 */
const char *pf_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library, released once.
 */
void pf_string_free(char *s);

/**
 * Parses `{"k": [..], "A": [[..], ..]}` into a new handle.
 *
 * # Safety
 * `json_in` must be a NUL-terminated string; `out` must be writable.
 */
enum PfStatus pf_linear_pair_from_json(const char *json_in, struct PfLinearPair **out);

/**
 * # Safety
 * `pair` must be null or a handle from this library, released once.
 */
void pf_linear_pair_free(struct PfLinearPair *pair);

/**
 * JSON encoding of a pair.
 *
 * # Safety
 * `pair` must be a live handle; `out` must be writable.
 */
enum PfStatus pf_linear_pair_to_json(const struct PfLinearPair *pair, char **out);

/**
 * Standard form: writes the case id and the classification JSON.
 *
 * # Safety
 * `pair` must be a live handle; `case_id` and `out` must be writable.
 */
enum PfStatus pf_classify(const struct PfLinearPair *pair, uint8_t *case_id, char **out);

/**
 * Cubics `F` making `(K, F)` a deformation of the pair; `k_json` is a
 * traceless rational 3×3 matrix. Writes the solution-space JSON.
 *
 * # Safety
 * `pair` must be a live handle, `k_json` a NUL-terminated string and `out`
 * writable.
 */
enum PfStatus pf_deform_solve(const struct PfLinearPair *pair, const char *k_json, char **out);

/**
 * Whether `{"K", "F"}` is a quadratic deformation of the pair.
 *
 * # Safety
 * `pair` must be a live handle, `qpair_json` a NUL-terminated string and
 * `result` writable.
 */
enum PfStatus pf_deform_check(const struct PfLinearPair *pair,
                              const char *qpair_json,
                              bool *result);

/**
 * Parses `{"n", "grade", "components"}` into a new field handle.
 *
 * # Safety
 * `json_in` must be a NUL-terminated string; `out` must be writable.
 */
enum PfStatus pf_field_from_json(const char *json_in, struct PfField **out);

/**
 * # Safety
 * `field` must be null or a handle from this library, released once.
 */
void pf_field_free(struct PfField *field);

/**
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum PfStatus pf_field_to_json(const struct PfField *field, char **out);

/**
 * Schouten bracket `[u, v]` as a new handle.
 *
 * # Safety
 * `u` and `v` must be live handles; `out` must be writable.
 */
enum PfStatus pf_schouten(const struct PfField *u, const struct PfField *v, struct PfField **out);

/**
 * Jacobi identity of a bivector.
 *
 * # Safety
 * `field` must be a live handle; `result` must be writable.
 */
enum PfStatus pf_is_poisson(const struct PfField *field, bool *result);

/**
 * Runs the reproduction report (`threads` = 0 for all cores) against the
 * built-in golden data, or the file contents `golden_json` when non-null.
 * Writes the JSON array of items and whether every item passed.
 *
 * # Safety
 * `golden_json` must be null or a NUL-terminated string; `all_pass` and
 * `out` must be writable.
 */
enum PfStatus pf_verify_paper(const char *golden_json,
                              uint32_t threads,
                              bool *all_pass,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POISSON_FORGE_H */
