#ifndef CARTAN_LIFT_H
#define CARTAN_LIFT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * PBW order selector.
 */
typedef enum CliftOrder {
  /**
   * `(n, a, n̄)`
   */
  CLIFT_ORDER_PR = 0,
  /**
   * `(n, a, k)`
   */
  CLIFT_ORDER_B = 1,
} CliftOrder;

/**
 * Result codes. `CLIFT_STATUS_OK` is zero; everything else is an error.
 */
typedef enum CliftStatus {
  CLIFT_STATUS_OK = 0,
  CLIFT_STATUS_NULL_POINTER = 1,
  CLIFT_STATUS_INVALID_UTF8 = 2,
  CLIFT_STATUS_PARSE = 3,
  CLIFT_STATUS_INVALID_RANK = 4,
  CLIFT_STATUS_UNKNOWN_LETTER = 5,
  CLIFT_STATUS_ORDER_MISMATCH = 6,
  CLIFT_STATUS_DOMAIN_VIOLATION = 7,
  CLIFT_STATUS_TOO_LARGE = 8,
  CLIFT_STATUS_INVALID_DEGREE = 9,
  CLIFT_STATUS_NOT_CENTRAL = 10,
  CLIFT_STATUS_DEGENERATE_DEGREE = 11,
  CLIFT_STATUS_CERTIFICATION_FAILURE = 12,
  CLIFT_STATUS_INVARIANCE_VIOLATION = 13,
  CLIFT_STATUS_SINGULAR = 14,
  CLIFT_STATUS_UNCERTIFIED = 15,
  CLIFT_STATUS_NOT_NUMERIC = 16,
  CLIFT_STATUS_DIMENSION = 17,
  CLIFT_STATUS_PANIC = 99,
} CliftStatus;

/**
 * A certified annihilating pair.
 */
typedef struct CliftAnnihilator CliftAnnihilator;

/**
 * An algebra with its PBW orders and rewrite memo.
 */
typedef struct CliftContext CliftContext;

/**
 * An element of the enveloping algebra in one PBW order.
 */
typedef struct CliftElement CliftElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *clift_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void clift_string_free(char *s);

/**
 * Library version, static storage.
 */
const char *clift_version(void);

/**
 * Creates a context for an algebra name such as `"sl3"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CliftStatus clift_context_new(const char *name, struct CliftContext **out);

/**
 * # Safety
 * `ctx` must come from [`clift_context_new`] and not be freed twice.
 */
void clift_context_free(struct CliftContext *ctx);

/**
 * Rank of the algebra.
 *
 * # Safety
 * `ctx` must be a live handle; `out` must be writable.
 */
enum CliftStatus clift_context_rank(const struct CliftContext *ctx, size_t *out);

/**
 * Algebra descriptor as JSON.
 *
 * # Safety
 * `ctx` must be a live handle; `out` must be writable.
 */
enum CliftStatus clift_context_describe(const struct CliftContext *ctx, char **out);

/**
 * Center element from a spec: `casimir`, `gelfand:<k>` or `solve:<d>`.
 *
 * # Safety
 * `ctx` must be a live handle; `spec` NUL-terminated; `out` writable.
 */
enum CliftStatus clift_element_center(const struct CliftContext *ctx,
                                      const char *spec,
                                      struct CliftElement **out);

/**
 * Parses an element from its JSON form.
 *
 * # Safety
 * `ctx` must be a live handle; `text` NUL-terminated; `out` writable.
 */
enum CliftStatus clift_element_from_json(const struct CliftContext *ctx,
                                         const char *text,
                                         struct CliftElement **out);

/**
 * # Safety
 * `el` must come from this library and not be freed twice.
 */
void clift_element_free(struct CliftElement *el);

/**
 * JSON form; byte-stable for equal elements.
 *
 * # Safety
 * `el` must be a live handle; `out` writable.
 */
enum CliftStatus clift_element_to_json(const struct CliftElement *el, char **out);

/**
 * Compact human-readable form such as `H²-2H+4X₊²-4X₊W`.
 *
 * # Safety
 * `el` must be a live handle; `out` writable.
 */
enum CliftStatus clift_element_pretty(const struct CliftElement *el, char **out);

/**
 * Rewrites the element in another PBW order.
 *
 * # Safety
 * `el` must be a live handle; `out` writable.
 */
enum CliftStatus clift_element_change_order(const struct CliftElement *el,
                                            enum CliftOrder order,
                                            struct CliftElement **out);

/**
 * Product `a · b`; both must be in the same order.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` writable.
 */
enum CliftStatus clift_element_multiply(const struct CliftElement *a,
                                        const struct CliftElement *b,
                                        struct CliftElement **out);

/**
 * Whether the element commutes with every basis vector.
 *
 * # Safety
 * `el` must be a live handle; `out` writable.
 */
enum CliftStatus clift_element_is_central(const struct CliftElement *el, bool *out);

/**
 * Harish-Chandra image of a central element, as polynomial JSON.
 *
 * # Safety
 * `el` must be a live handle; `out` writable.
 */
enum CliftStatus clift_element_hc_image(const struct CliftElement *el, char **out);

/**
 * Builds the annihilating pair; fails with `CertificationFailure` (or
 * `NotCentral`, `DegenerateDegree`) if any certificate is false.
 *
 * # Safety
 * `el` must be a live handle; `out` writable.
 */
enum CliftStatus clift_annihilator_new(const struct CliftElement *el,
                                       struct CliftAnnihilator **out);

/**
 * # Safety
 * `ann` must come from this library and not be freed twice.
 */
void clift_annihilator_free(struct CliftAnnihilator *ann);

/**
 * Full JSON record: `H_part`, `J`, certificates, `P`, `pr`, `b`, source.
 *
 * # Safety
 * `ann` must be a live handle; `out` writable.
 */
enum CliftStatus clift_annihilator_to_json(const struct CliftAnnihilator *ann, char **out);

/**
 * `J` as an element handle in the `(n, a, k)` order.
 *
 * # Safety
 * `ann` must be a live handle; `out` writable.
 */
enum CliftStatus clift_annihilator_j(const struct CliftAnnihilator *ann, struct CliftElement **out);

/**
 * Rank-one normalized form, e.g. `H + (H²+4X₊²)/(4i r)`. Fails with
 * `DomainViolation` in higher rank.
 *
 * # Safety
 * `ann` must be a live handle; `out` writable.
 */
enum CliftStatus clift_annihilator_normalized(const struct CliftAnnihilator *ann, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CARTAN_LIFT_H */
