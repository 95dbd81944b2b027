/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ORDSGP_H
#define ORDSGP_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result of every fallible call.
typedef enum OrdsgpStatus {
  ORDSGP_STATUS_OK = 0,
  // Well-formed input that breaks an axiom.
  ORDSGP_STATUS_INVALID = 1,
  // Input that is not a table and relation of matching shape.
  ORDSGP_STATUS_PARSE = 2,
  ORDSGP_STATUS_NULL_POINTER = 3,
  ORDSGP_STATUS_INVALID_UTF8 = 4,
  ORDSGP_STATUS_UNKNOWN_NAME = 5,
  ORDSGP_STATUS_OUT_OF_RANGE = 6,
  ORDSGP_STATUS_SIZE_CAP = 7,
  ORDSGP_STATUS_INTERNAL = 8,
} OrdsgpStatus;

typedef enum OrdsgpVerdict {
  ORDSGP_VERDICT_EQUIVALENT = 0,
  ORDSGP_VERDICT_HYPOTHESIS_NOT_MET = 1,
  ORDSGP_VERDICT_DISCREPANCY = 2,
} OrdsgpVerdict;

// An enumerated list of structures.
typedef struct OrdsgpCatalog OrdsgpCatalog;

// A validated finite ordered semigroup.
typedef struct OrdsgpStructure OrdsgpStructure;

// Message for the last failure on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *ordsgp_last_error(void);

// Static name of a status code.
const char *ordsgp_status_name(enum OrdsgpStatus status);

// `s` must come from this library (or be NULL) and not be used again.
void ordsgp_string_free(char *s);

// Parses `{"order": n, "table": [[..]], "leq": [[..]]}` and validates it.
//
// `json` must be a NUL-terminated string; `out` must be writable.
enum OrdsgpStatus ordsgp_structure_from_json(const char *json, struct OrdsgpStructure **out);

// Builds a structure from a row-major `n*n` product table and `n*n`
// order matrix (nonzero means `i <= j`).
//
// `table` and `leq` must each point to `n*n` readable values.
enum OrdsgpStatus ordsgp_structure_from_arrays(size_t n,
                                               const uint32_t *table,
                                               const uint8_t *leq,
                                               struct OrdsgpStructure **out);

// `s` must come from this library (or be NULL) and not be used again.
void ordsgp_structure_free(struct OrdsgpStructure *s);

// Number of elements, or 0 for NULL.
//
// `s` must be a live handle or NULL.
size_t ordsgp_structure_order(const struct OrdsgpStructure *s);

// `s` must be a live handle; `out` must be writable.
enum OrdsgpStatus ordsgp_structure_mul(const struct OrdsgpStructure *s,
                                       size_t a,
                                       size_t b,
                                       size_t *out);

// `s` must be a live handle; `out` must be writable.
enum OrdsgpStatus ordsgp_structure_leq(const struct OrdsgpStructure *s,
                                       size_t a,
                                       size_t b,
                                       bool *out);

// `s` must be a live handle; `out` must be writable.
enum OrdsgpStatus ordsgp_structure_to_json(const struct OrdsgpStructure *s, char **out);

// Isomorphism-invariant key (orders up to 6).
//
// `s` must be a live handle; `out` must be writable.
enum OrdsgpStatus ordsgp_canonical_form(const struct OrdsgpStructure *s, char **out);

// Axiom report for a JSON document: status `Ok` or `Invalid` with the
// report written to `report` either way, `Parse` for malformed input.
//
// `json` must be NUL-terminated; `report` must be writable.
enum OrdsgpStatus ordsgp_validate_json(const char *json, char **report);

// Evaluates a named predicate (`left-simple`, `right-pi-inverse`, ...).
// `witness_json` may be NULL; otherwise it receives the full result.
//
// `s` must be a live handle, `name` NUL-terminated, `holds` writable.
enum OrdsgpStatus ordsgp_predicate(const struct OrdsgpStructure *s,
                                   const char *name,
                                   bool *holds,
                                   char **witness_json);

// Runs one theorem suite (`thm2`, ..., `cor-cpr`). `report_json` may be
// NULL; otherwise it receives the full report.
//
// `s` must be a live handle, `theorem` NUL-terminated, `verdict` writable.
enum OrdsgpStatus ordsgp_verify(const struct OrdsgpStructure *s,
                                const char *theorem,
                                enum OrdsgpVerdict *verdict,
                                char **report_json);

// Every ordered semigroup of the given order (up to 4), optionally
// discrete orders only and one per isomorphism class.
//
// `out` must be writable.
enum OrdsgpStatus ordsgp_enumerate(size_t order,
                                   bool discrete_only,
                                   bool up_to_iso,
                                   struct OrdsgpCatalog **out);

// `c` must be a live catalog or NULL.
size_t ordsgp_catalog_len(const struct OrdsgpCatalog *c);

// Copies entry `index` into a new structure handle.
//
// `c` must be a live catalog; `out` must be writable.
enum OrdsgpStatus ordsgp_catalog_get(const struct OrdsgpCatalog *c,
                                     size_t index,
                                     struct OrdsgpStructure **out);

// `c` must come from this library (or be NULL) and not be used again.
void ordsgp_catalog_free(struct OrdsgpCatalog *c);

#endif  /* ORDSGP_H */
