#ifndef NEK_H
#define NEK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of every fallible call. On anything but `NEK_STATUS_OK` a message
 * is available from [`nek_last_error_message`].
 */
typedef enum NekStatus {
  NEK_STATUS_OK = 0,
  NEK_STATUS_NULL_POINTER = 1,
  NEK_STATUS_INVALID_UTF8 = 2,
  NEK_STATUS_PARSE_ERROR = 3,
  NEK_STATUS_PRECONDITION = 4,
  NEK_STATUS_IMPOSSIBLE = 5,
  NEK_STATUS_INCONSISTENT = 6,
  NEK_STATUS_UNKNOWN_FLAG = 7,
  NEK_STATUS_PANIC = 8,
} NekStatus;

typedef enum NekFlagValue {
  NEK_FLAG_VALUE_TRUE = 0,
  NEK_FLAG_VALUE_FALSE = 1,
  NEK_FLAG_VALUE_NOT_APPLICABLE = 2,
  NEK_FLAG_VALUE_INCONCLUSIVE = 3,
} NekFlagValue;

typedef struct NekGse NekGse;

typedef struct NekPoset NekPoset;

typedef struct NekReport NekReport;

typedef struct NekStateSet NekStateSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or NULL. Valid
 * until the next call into this library on the same thread.
 */
const char *nek_last_error_message(void);

/**
 * # Safety
 *
 * `s` must be NULL or a string returned by this library, freed once.
 */
void nek_string_free(char *s);

/**
 * Parses a GSE in the text format.
 *
 * # Safety
 *
 * `text_in` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NekStatus nek_gse_parse(const char *text_in, bool autoclose, struct NekGse **out);

/**
 * # Safety
 *
 * `gse` must be NULL or a handle from this library, freed once.
 */
void nek_gse_free(struct NekGse *gse);

/**
 * Number of members including 0 and 1; 0 for NULL.
 *
 * # Safety
 *
 * `gse` must be NULL or a live handle.
 */
size_t nek_gse_member_count(const struct NekGse *gse);

/**
 * # Safety
 *
 * `gse` must be NULL or a live handle.
 */
size_t nek_gse_state_count(const struct NekGse *gse);

/**
 * The GSE in canonical text form, or NULL for a NULL handle.
 *
 * # Safety
 *
 * `gse` must be NULL or a live handle.
 */
char *nek_gse_write(const struct NekGse *gse);

/**
 * Classifies a GSE. `max_nodes` bounds each exhaustive search; 0 selects
 * the default.
 *
 * # Safety
 *
 * `gse` must be a live handle and `out` a valid pointer.
 */
enum NekStatus nek_gse_classify(const struct NekGse *gse,
                                uint64_t max_nodes,
                                struct NekReport **out);

/**
 * # Safety
 *
 * `report` must be NULL or a handle from this library, freed once.
 */
void nek_report_free(struct NekReport *report);

/**
 * Looks up one flag by name, e.g. `"algebra"` or `"prop_U"`.
 *
 * # Safety
 *
 * `report` must be a live handle, `name` a NUL-terminated string and
 * `out` a valid pointer.
 */
enum NekStatus nek_report_flag(const struct NekReport *report,
                               const char *name,
                               enum NekFlagValue *out);

/**
 * The sorted `key=value` report, or NULL for a NULL handle.
 *
 * # Safety
 *
 * `report` must be NULL or a live handle.
 */
char *nek_report_machine(const struct NekReport *report, bool verbose);

/**
 * 0 classified, 2 consistency violation, 3 inconclusive; -1 for NULL.
 *
 * # Safety
 *
 * `report` must be NULL or a live handle.
 */
int32_t nek_report_exit_code(const struct NekReport *report);

/**
 * Parses a poset in the text format.
 *
 * # Safety
 *
 * `text_in` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NekStatus nek_poset_parse(const char *text_in, struct NekPoset **out);

/**
 * # Safety
 *
 * `poset` must be NULL or a handle from this library, freed once.
 */
void nek_poset_free(struct NekPoset *poset);

/**
 * # Safety
 *
 * `poset` must be NULL or a live handle.
 */
size_t nek_poset_element_count(const struct NekPoset *poset);

/**
 * Decides whether a full and proper state set exists and builds one.
 * Returns `NEK_STATUS_IMPOSSIBLE` with the reason as the last error when
 * none exists.
 *
 * # Safety
 *
 * `poset` must be a live handle and `out` a valid pointer.
 */
enum NekStatus nek_poset_synthesize_states(const struct NekPoset *poset, struct NekStateSet **out);

/**
 * # Safety
 *
 * `set` must be NULL or a handle from this library, freed once.
 */
void nek_state_set_free(struct NekStateSet *set);

/**
 * # Safety
 *
 * `set` must be NULL or a live handle.
 */
size_t nek_state_set_count(const struct NekStateSet *set);

/**
 * The value of state `state` at element `element` as `"n/d"`, or NULL
 * when out of range.
 *
 * # Safety
 *
 * `set` must be NULL or a live handle.
 */
char *nek_state_set_value(const struct NekStateSet *set, size_t state, size_t element);

/**
 * Realizes the poset as a GSE through a full and proper state set.
 *
 * # Safety
 *
 * `poset` and `set` must be live handles and `out` a valid pointer.
 */
enum NekStatus nek_poset_embed(const struct NekPoset *poset,
                               const struct NekStateSet *set,
                               struct NekGse **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NEK_H */
