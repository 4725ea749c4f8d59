#ifndef TRANSFINITA_H
#define TRANSFINITA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every fallible function.
 */
typedef enum TfStatus {
  TF_STATUS_OK = 0,
  TF_STATUS_NULL_ARGUMENT = 1,
  TF_STATUS_INVALID_UTF8 = 2,
  TF_STATUS_PARSE_ERROR = 3,
  TF_STATUS_UNDEFINED = 4,
  TF_STATUS_NOT_REPRESENTABLE = 5,
  TF_STATUS_DIVISION_BY_ZERO = 6,
  TF_STATUS_NOT_DIVISIBLE = 7,
  TF_STATUS_NO_WITNESS = 8,
  TF_STATUS_INVALID_LAMBDA = 9,
  TF_STATUS_OUT_OF_FIELD = 10,
  TF_STATUS_INCONCLUSIVE = 11,
  TF_STATUS_RESOURCE_EXCEEDED = 12,
  TF_STATUS_UNSUPPORTED = 13,
  TF_STATUS_ORACLE_MISMATCH = 14,
  TF_STATUS_PANIC = 15,
} TfStatus;

/**
 * Evaluation settings and `:let`-style bindings.
 */
typedef struct TfContext TfContext;

/**
 * An evaluated value.
 */
typedef struct TfValue TfValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a context with default limits and `lambda = w^w`.
 */
struct TfContext *tf_context_new(void);

/**
 * # Safety
 * `ctx` must come from [`tf_context_new`] and not be used afterwards. Null is ignored.
 */
void tf_context_free(struct TfContext *ctx);

/**
 * Caps the bit length of natural coefficients produced during evaluation.
 *
 * # Safety
 * `ctx` must be a live context or null.
 */
enum TfStatus tf_context_set_max_magnitude(struct TfContext *ctx, uint64_t bits);

/**
 * Enables or disables cross-checking against the definitional oracle.
 *
 * # Safety
 * `ctx` must be a live context or null.
 */
enum TfStatus tf_context_set_oracle(struct TfContext *ctx, bool enabled);

/**
 * Sets the ambient `lambda` from an expression evaluating to a valid ordinal.
 *
 * # Safety
 * `ctx` must be a live context or null; `expr` a NUL-terminated string or null.
 */
enum TfStatus tf_context_set_lambda(struct TfContext *ctx, const char *expr);

/**
 * Binds `name` to a copy of `value` for later expressions.
 *
 * # Safety
 * `ctx` and `value` must be live handles or null; `name` a NUL-terminated string or null.
 */
enum TfStatus tf_context_bind(struct TfContext *ctx, const char *name, const struct TfValue *value);

/**
 * Parses and evaluates `expr`. On success `*out` receives a new value handle.
 *
 * # Safety
 * `ctx` must be a live context, `expr` a NUL-terminated string and `out` a
 * writable pointer; any of them may be null, which yields `NullArgument`.
 */
enum TfStatus tf_eval(const struct TfContext *ctx, const char *expr, struct TfValue **out);

/**
 * # Safety
 * `value` must come from [`tf_eval`] and not be used afterwards. Null is ignored.
 */
void tf_value_free(struct TfValue *value);

/**
 * Canonical text of a value, parseable back to an equal value. Null on a null handle.
 *
 * # Safety
 * `value` must be a live handle or null.
 */
char *tf_value_canonical(const struct TfValue *value);

/**
 * JSON document for a value (schema "1"). Null on a null handle.
 *
 * # Safety
 * `value` must be a live handle or null.
 */
char *tf_value_json(const struct TfValue *value);

/**
 * Type name of a value, such as "Ordinal" or "SurRational". Null on a null handle.
 *
 * # Safety
 * `value` must be a live handle or null.
 */
char *tf_value_type(const struct TfValue *value);

/**
 * Equality up to the identifications between number levels; false if either handle is null.
 *
 * # Safety
 * Both handles must be live or null.
 */
bool tf_value_equal(const struct TfValue *a, const struct TfValue *b);

/**
 * Message of the most recent failure on this thread, or null if the last call succeeded.
 */
char *tf_last_error(void);

/**
 * # Safety
 * `s` must come from one of this library's string-returning functions. Null is ignored.
 */
void tf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRANSFINITA_H */
