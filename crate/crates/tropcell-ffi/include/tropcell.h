#ifndef TROPCELL_H
#define TROPCELL_H

/* Generated by the crate build script; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum TropStatus {
  // The call succeeded.
  TROP_STATUS_OK = 0,
  // A computed object violated an invariant it was required to satisfy.
  TROP_STATUS_INVARIANT_VIOLATION = 1,
  // The input was malformed, out of range, or outside the supported scope.
  TROP_STATUS_INVALID_INPUT = 2,
  // An enumeration exceeded a configured size budget.
  TROP_STATUS_RESOURCE_LIMIT = 3,
  // A required pointer argument was null.
  TROP_STATUS_NULL_ARGUMENT = 4,
  // A string argument was not valid UTF-8.
  TROP_STATUS_INVALID_UTF8 = 5,
  // The library failed internally; this indicates a bug in the library.
  TROP_STATUS_INTERNAL = 6,
} TropStatus;

// Selects which plain-text report `trop_complex_report()` produces.
typedef enum TropReport {
  // Every cell with dimension, boundedness, coarse and fine type.
  TROP_REPORT_CELLS = 0,
  // The cells of the bounded subcomplex.
  TROP_REPORT_BOUNDED = 1,
  // The type and cotype ideals, fine and coarse.
  TROP_REPORT_IDEALS = 2,
  // Betti tables of the four minimal resolutions.
  TROP_REPORT_BETTI = 3,
  // Face counts next to the generic prediction.
  TROP_REPORT_FVECTOR = 4,
  // The dual mixed subdivision of the dilated simplex.
  TROP_REPORT_MIXED = 5,
} TropReport;

// An arrangement document together with the cell decomposition it induces.
// Opaque; create with one of the `trop_complex_from_*` functions and
// release with `trop_complex_free()`.
typedef struct TropComplexHandle TropComplexHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a JSON arrangement document, enumerates the cell decomposition it
// induces, and returns a handle to both through `out`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` valid for one write.
enum TropStatus trop_complex_from_document(const char *text, struct TropComplexHandle **out);

// Builds the decomposition induced by `n` hyperplanes with integer
// coefficient rows, given row-major as `n * d` values.
//
// # Safety
// `coords` must point to `n * d` readable values (it may be null only when
// `n * d == 0`) and `out` must be valid for one write.
enum TropStatus trop_complex_from_rows(const int64_t *coords,
                                       size_t n,
                                       size_t d,
                                       struct TropComplexHandle **out);

// Generates a random generic arrangement of `n` hyperplanes in `d`
// coordinates from a deterministic seed and returns its decomposition.
//
// # Safety
// `out` must be valid for one write.
enum TropStatus trop_complex_generate(size_t n,
                                      size_t d,
                                      uint64_t seed,
                                      struct TropComplexHandle **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `h` must be null or a handle not yet freed, and must not be used after.
void trop_complex_free(struct TropComplexHandle *h);

// Number of hyperplanes, or 0 for a null handle.
//
// # Safety
// `h` must be null or a live handle.
size_t trop_complex_n(const struct TropComplexHandle *h);

// Ambient coordinate count (the torus has dimension d - 1), or 0 for null.
//
// # Safety
// `h` must be null or a live handle.
size_t trop_complex_d(const struct TropComplexHandle *h);

// Dimension of the decomposition, or -1 for a null handle.
//
// # Safety
// `h` must be null or a live handle.
int64_t trop_complex_dim(const struct TropComplexHandle *h);

// Total number of cells across all dimensions, or 0 for a null handle.
//
// # Safety
// `h` must be null or a live handle.
size_t trop_complex_cell_count(const struct TropComplexHandle *h);

// Euler characteristic of the decomposition, or 0 for a null handle.
//
// # Safety
// `h` must be null or a live handle.
int64_t trop_complex_euler_characteristic(const struct TropComplexHandle *h);

// Face counts by dimension. Returns the required length (`dim + 1`) and
// copies the first `min(len, dim + 1)` entries into `buf` when it is
// non-null. Returns 0 for a null handle.
//
// # Safety
// `buf` must be null or valid for `len` writes; `h` null or live.
size_t trop_complex_f_vector(const struct TropComplexHandle *h, size_t *buf, size_t len);

// Dimension of cell `idx`, or -1 when the handle is null or `idx` is out
// of range. Cells are indexed 0 .. cell_count in a deterministic order.
//
// # Safety
// `h` must be null or a live handle.
int64_t trop_cell_dim(const struct TropComplexHandle *h, size_t idx);

// 1 when cell `idx` is bounded, 0 when unbounded, -1 when the handle is
// null or `idx` is out of range.
//
// # Safety
// `h` must be null or a live handle.
int32_t trop_cell_is_bounded(const struct TropComplexHandle *h, size_t idx);

// Coarse type of cell `idx`: entry j counts the hyperplanes whose sector j
// contains the cell. Returns the required length `d` and copies the first
// `min(len, d)` entries into `buf` when non-null; 0 when the handle is
// null or `idx` is out of range.
//
// # Safety
// `buf` must be null or valid for `len` writes; `h` null or live.
size_t trop_cell_coarse_type(const struct TropComplexHandle *h,
                             size_t idx,
                             uint32_t *buf,
                             size_t len);

// The document the handle was built from, rendered as pretty-printed JSON.
//
// # Safety
// `h` must be null or a live handle; `out` valid for one write.
enum TropStatus trop_complex_document_text(const struct TropComplexHandle *h, char **out);

// Renders one of the plain-text reports into a caller-owned string.
//
// # Safety
// `h` must be null or a live handle; `out` valid for one write.
enum TropStatus trop_complex_report(const struct TropComplexHandle *h,
                                    enum TropReport kind,
                                    char **out);

// Draws the decomposition (or, when `mixed` is nonzero, the dual mixed
// subdivision of the dilated simplex) as an SVG document. Supported for
// d = 3 only.
//
// # Safety
// `h` must be null or a live handle; `out` valid for one write.
enum TropStatus trop_complex_render_svg(const struct TropComplexHandle *h,
                                        int32_t mixed,
                                        char **out);

// Runs the full invariant suite on the handle's document. Returns the
// success status when every check passes and the invariant-violation
// status when one fails; in both cases the per-check report is written to
// `out` unless `out` is null.
//
// # Safety
// `h` must be null or a live handle; `out` null or valid for one write.
enum TropStatus trop_complex_verify(const struct TropComplexHandle *h, char **out);

// Generates a random generic arrangement document as pretty-printed JSON.
// The same seed always yields the same document.
//
// # Safety
// `out` must be valid for one write.
enum TropStatus trop_generate_document(size_t n, size_t d, uint64_t seed, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void trop_string_free(char *s);

// Message describing the most recent failure on this thread, or an empty
// string. The pointer stays valid until the next failing call on the same
// thread; do not free it.
const char *trop_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROPCELL_H */
