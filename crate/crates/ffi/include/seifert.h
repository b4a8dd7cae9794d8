#ifndef SEIFERT_H
#define SEIFERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Invariant named by a `NotEquivalent` verdict; `None` for other kinds.
 */
typedef enum SeifertSeparator {
  SEIFERT_SEPARATOR_NONE = 0,
  SEIFERT_SEPARATOR_BASE_ORBIFOLD = 1,
  SEIFERT_SEPARATOR_EULER_NUMBER = 2,
  SEIFERT_SEPARATOR_H1 = 3,
  SEIFERT_SEPARATOR_CLASS_VECTOR = 4,
} SeifertSeparator;

/**
 * Result code of every fallible call.
 */
typedef enum SeifertStatus {
  SEIFERT_STATUS_OK = 0,
  SEIFERT_STATUS_NULL_POINTER = 1,
  SEIFERT_STATUS_INVALID_UTF8 = 2,
  SEIFERT_STATUS_PARSE = 3,
  SEIFERT_STATUS_CATALOGUE = 4,
  SEIFERT_STATUS_BOUNDED_SYMBOL = 5,
  SEIFERT_STATUS_CLOSED_SYMBOL = 6,
  SEIFERT_STATUS_ORIENTABLE_BASE = 7,
  SEIFERT_STATUS_ORBIFOLD_BOUNDARY = 8,
  SEIFERT_STATUS_MIXED_BOUNDARY = 9,
  SEIFERT_STATUS_CAP_EXCEEDED = 10,
  SEIFERT_STATUS_INVALID_COSET_TABLE = 11,
  SEIFERT_STATUS_DIAGNOSTIC = 12,
  SEIFERT_STATUS_PANIC = 13,
} SeifertStatus;

typedef enum SeifertVerdictKind {
  SEIFERT_VERDICT_KIND_HOMEOMORPHIC = 0,
  SEIFERT_VERDICT_KIND_HEMPEL = 1,
  SEIFERT_VERDICT_KIND_NOT_EQUIVALENT = 2,
  SEIFERT_VERDICT_KIND_FINITE_GROUP = 3,
  SEIFERT_VERDICT_KIND_EQUIVALENT = 4,
} SeifertVerdictKind;

/**
 * Opaque parsed symbol.
 */
typedef struct SeifertSymbolHandle SeifertSymbolHandle;

/**
 * Opaque decision result.
 */
typedef struct SeifertVerdictHandle SeifertVerdictHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or NULL after
 * a successful call. The pointer stays valid until the next library call on
 * the same thread.
 */
const char *seifert_last_error(void);

/**
 * Releases a string produced by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void seifert_string_free(char *s);

/**
 * Parses `SFS[...]` text into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SeifertStatus seifert_symbol_parse(const char *text, struct SeifertSymbolHandle **out);

/**
 * # Safety
 * `h` must be NULL or a handle from this library that is not used afterwards.
 */
void seifert_symbol_free(struct SeifertSymbolHandle *h);

/**
 * # Safety
 * `h` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_symbol_to_string(const struct SeifertSymbolHandle *h, char **out);

/**
 * # Safety
 * `h` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_symbol_normalize(const struct SeifertSymbolHandle *h,
                                            struct SeifertSymbolHandle **out);

/**
 * # Safety
 * `h` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_symbol_canonical_form(const struct SeifertSymbolHandle *h,
                                                 struct SeifertSymbolHandle **out);

/**
 * True for symbols without boundary. A NULL handle yields false.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
bool seifert_symbol_is_closed(const struct SeifertSymbolHandle *h);

/**
 * Euler number as a reduced fraction with positive denominator.
 *
 * # Safety
 * `h` must be a live handle; `num` and `den` must be writable.
 */
enum SeifertStatus seifert_symbol_euler_number(const struct SeifertSymbolHandle *h,
                                               int64_t *num,
                                               int64_t *den);

/**
 * Invariant report as a JSON object.
 *
 * # Safety
 * `h` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_invariants_json(const struct SeifertSymbolHandle *h, char **out);

/**
 * Canonical forms of all closed symbols sharing the profinite completion,
 * as a JSON array of strings.
 *
 * # Safety
 * `h` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_partners_json(const struct SeifertSymbolHandle *h, char **out);

/**
 * Finite-quotient fingerprint of the fundamental group as JSON. Zero
 * arguments select the defaults (index 5, groups of order at most 24).
 *
 * # Safety
 * `h` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_fingerprint_json(const struct SeifertSymbolHandle *h,
                                            size_t max_index,
                                            size_t max_order,
                                            char **out);

/**
 * Decides two closed or two bounded symbols at the default depth.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a writable pointer.
 */
enum SeifertStatus seifert_decide(const struct SeifertSymbolHandle *a,
                                  const struct SeifertSymbolHandle *b,
                                  struct SeifertVerdictHandle **out);

/**
 * Like [`seifert_decide`] with an explicit fingerprint depth; zero selects
 * the default for either argument.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a writable pointer.
 */
enum SeifertStatus seifert_decide_with_depth(const struct SeifertSymbolHandle *a,
                                             const struct SeifertSymbolHandle *b,
                                             size_t max_index,
                                             size_t max_order,
                                             struct SeifertVerdictHandle **out);

/**
 * # Safety
 * `v` must be NULL or a handle from this library that is not used afterwards.
 */
void seifert_verdict_free(struct SeifertVerdictHandle *v);

/**
 * # Safety
 * `v` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_verdict_kind(const struct SeifertVerdictHandle *v,
                                        enum SeifertVerdictKind *out);

/**
 * Scaling unit of a `Hempel` or `Equivalent` verdict; 0 for other kinds.
 *
 * # Safety
 * `v` must be NULL or a live handle.
 */
int64_t seifert_verdict_k(const struct SeifertVerdictHandle *v);

/**
 * # Safety
 * `v` must be NULL or a live handle.
 */
enum SeifertSeparator seifert_verdict_separator(const struct SeifertVerdictHandle *v);

/**
 * True when a `FiniteGroup` verdict could not separate the groups.
 *
 * # Safety
 * `v` must be NULL or a live handle.
 */
bool seifert_verdict_inconclusive(const struct SeifertVerdictHandle *v);

/**
 * Notes text, borrowed from the handle; NULL for a NULL handle.
 *
 * # Safety
 * `v` must be NULL or a live handle; the result dies with the handle.
 */
const char *seifert_verdict_notes(const struct SeifertVerdictHandle *v);

/**
 * Verdict in the same JSON shape the command-line tool prints.
 *
 * # Safety
 * `v` must be a live handle and `out` a writable pointer.
 */
enum SeifertStatus seifert_verdict_json(const struct SeifertVerdictHandle *v, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEIFERT_H */
