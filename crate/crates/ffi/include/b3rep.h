#ifndef B3REP_H
#define B3REP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum B3Status {
  B3_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  B3_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  B3_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed scalar, JSON, or unknown option.
   */
  B3_STATUS_PARSE = 3,
  /**
   * The parameters violate a constraint of the construction.
   */
  B3_STATUS_CONSTRAINT = 4,
  /**
   * Unsupported dimension or family.
   */
  B3_STATUS_UNSUPPORTED = 5,
  /**
   * Internal error, including a caught panic.
   */
  B3_STATUS_INTERNAL = 6,
} B3Status;

/**
 * Opaque representation handle.
 */
typedef struct B3Rep B3Rep;

/**
 * Opaque classification report handle.
 */
typedef struct B3Report B3Report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on this thread.
 */
const char *b3rep_last_error(void);

/**
 * Builds a classified representation.
 *
 * `eigs` holds `n_eigs` scalar strings (`dim`, or `dim − 1` for `dim = 4, 5`
 * when `root` is given). `root` is `D` for `dim = 4`, `γ` for `dim = 5` and
 * must be null otherwise. With a non-null `modulus` (e.g. `"z^2-z+1"`) the
 * scalars live in `Q[z]/(modulus)`, otherwise in `Q`.
 *
 * # Safety
 * `eigs` must point to `n_eigs` valid C strings; `out` must be writable.
 */
enum B3Status b3rep_rep_build(size_t dim,
                              const char *const *eigs,
                              size_t n_eigs,
                              const char *root,
                              const char *modulus,
                              struct B3Rep **out);

/**
 * Builds the representation with free symbolic parameters.
 *
 * # Safety
 * `out` must be writable.
 */
enum B3Status b3rep_rep_build_symbolic(size_t dim, struct B3Rep **out);

/**
 * Parses representation JSON as produced by [`b3rep_rep_to_json`].
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
enum B3Status b3rep_rep_from_json(const char *json, struct B3Rep **out);

/**
 * # Safety
 * `rep` must be a live handle; `out` must be writable. Free the string
 * with [`b3rep_string_free`].
 */
enum B3Status b3rep_rep_to_json(const struct B3Rep *rep, char **out);

/**
 * Matrix size of the representation, or 0 for a null handle.
 *
 * # Safety
 * `rep` must be null or a live handle.
 */
size_t b3rep_rep_dim(const struct B3Rep *rep);

/**
 * Writes whether `ABA = BAB` holds exactly.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum B3Status b3rep_rep_verify_braid(const struct B3Rep *rep, bool *out);

/**
 * # Safety
 * `rep` must be null or a handle not yet freed.
 */
void b3rep_rep_free(struct B3Rep *rep);

/**
 * Classifies the representation; `burnside` also runs the span oracle.
 *
 * # Safety
 * `rep` must be a live handle; `out` must be writable.
 */
enum B3Status b3rep_classify(const struct B3Rep *rep, bool burnside, struct B3Report **out);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum B3Status b3rep_report_is_simple(const struct B3Report *report, bool *out);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable. Free the string
 * with [`b3rep_string_free`].
 */
enum B3Status b3rep_report_to_json(const struct B3Report *report, char **out);

/**
 * # Safety
 * `report` must be null or a handle not yet freed.
 */
void b3rep_report_free(struct B3Report *report);

/**
 * Runs the dimension comparison for `"bcd"` or `"exceptional"`, writing the
 * JSON report and whether every comparison succeeded.
 *
 * # Safety
 * `series` must be a valid C string; `json_out` and `all_equal` writable.
 */
enum B3Status b3rep_dims(const char *series, char **json_out, bool *all_equal);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void b3rep_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* B3REP_H */
