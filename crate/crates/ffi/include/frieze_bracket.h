#ifndef FRIEZE_BRACKET_H
#define FRIEZE_BRACKET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes. Zero is success.
enum FbStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  FB_STATUS_OK = 0,
  FB_STATUS_NULL_POINTER = 1,
  FB_STATUS_INVALID_UTF8 = 2,
  FB_STATUS_PARSE = 3,
  FB_STATUS_DOMAIN = 4,
  FB_STATUS_NOT_ZIGZAG = 5,
  FB_STATUS_PATH_CAP = 6,
  FB_STATUS_OVERFLOW = 7,
  FB_STATUS_INTERNAL = 99,
};
#ifndef __cplusplus
typedef int32_t FbStatus;
#endif // __cplusplus

// A frieze of zigzag type (or any frieze built from a quiddity cycle).
typedef struct FbFrieze FbFrieze;

// A Laurent polynomial in `A`.
typedef struct FbPoly FbPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copy of the last error message on this thread, or null. Free with
// `fb_string_free`.
char *fb_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void fb_string_free(char *s);

// Parses a polynomial such as `-A^4-A^-4`.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
FbStatus fb_poly_parse(const char *text, struct FbPoly **out);

// # Safety
// `p` must be a live handle or null; `out` must be writable.
FbStatus fb_poly_to_string(const struct FbPoly *p, char **out);

// Value at `A^4 = -1`; fails unless every exponent is a multiple of 4.
//
// # Safety
// `p` must be a live handle or null; `out` must be writable.
FbStatus fb_poly_eval_at_a4_minus1(const struct FbPoly *p, int64_t *out);

// Lowest and highest exponent; fails on the zero polynomial.
//
// # Safety
// `p` must be a live handle or null; `lo` and `hi` must be writable.
FbStatus fb_poly_degree_range(const struct FbPoly *p, int32_t *lo, int32_t *hi);

// `A -> A^-1`.
//
// # Safety
// `p` must be a live handle or null; `out` must be writable.
FbStatus fb_poly_bar(const struct FbPoly *p, struct FbPoly **out);

// # Safety
// `a`, `b` must be live handles or null; `out` must be writable.
FbStatus fb_poly_equal(const struct FbPoly *a, const struct FbPoly *b, bool *out);

// # Safety
// `p` must come from this library and not have been freed. Null is ignored.
void fb_poly_free(struct FbPoly *p);

// `<Γ(w)>` for an LR word such as `RL^2RL` (`-` is the empty word).
//
// # Safety
// `w` must be a nul-terminated string; `out` must be writable.
FbStatus fb_bracket_of_word(const char *w, struct FbPoly **out);

// `v(φ(p/q))` for any positive `p/q`.
//
// # Safety
// `out` must be writable.
FbStatus fb_bracket_of_fraction(uint64_t p, uint64_t q, struct FbPoly **out);

// Sum over the folded frieze's paths ending at the floor 1, for `0 < p/q < 1`.
//
// # Safety
// `out` must be writable.
FbStatus fb_bracket_num_of_fraction(uint64_t p, uint64_t q, struct FbPoly **out);

// Bracket of the denominator closure of the rational tangle `p/q`, `0 < p/q < 1`.
//
// # Safety
// `out` must be writable.
FbStatus fb_denominator_link(uint64_t p, uint64_t q, struct FbPoly **out);

// The LR word of `p/q`, `0 < p/q < 1`, in power notation.
//
// # Safety
// `out` must be writable.
FbStatus fb_word_of_fraction(uint64_t p, uint64_t q, char **out);

// # Safety
// `w` must be a nul-terminated string; `p`, `q` must be writable.
FbStatus fb_fraction_of_word(const char *w, uint64_t *p, uint64_t *q);

// `C_w` as text, e.g. `{2/9, 4/9, 5/9, 7/9}`.
//
// # Safety
// `w` must be a nul-terminated string; `out` must be writable.
FbStatus fb_complete_invariant(const char *w, char **out);

// # Safety
// `w` must be a nul-terminated string; `out` must be writable.
FbStatus fb_frieze_from_word(const char *w, struct FbFrieze **out);

// # Safety
// `quiddity` must point to `len` readable values; `out` must be writable.
FbStatus fb_frieze_from_quiddity(const uint64_t *quiddity, uintptr_t len, struct FbFrieze **out);

// # Safety
// `f` must come from this library and not have been freed. Null is ignored.
void fb_frieze_free(struct FbFrieze *f);

// Number of interior rows.
//
// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_height(const struct FbFrieze *f, uintptr_t *out);

// Length of the quiddity cycle.
//
// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_width(const struct FbFrieze *f, uintptr_t *out);

// Smallest translation period.
//
// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_period(const struct FbFrieze *f, uintptr_t *out);

// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_max_entry(const struct FbFrieze *f, uint64_t *out);

// Entry at `(row, col)`; rows `-1` and `height` are the boundary 1s and
// anything further out is 0. Columns wrap around the cycle.
//
// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_entry(const struct FbFrieze *f, int64_t row, int64_t col, uint64_t *out);

// The word read along a 1-zigzag; `FB_STATUS_NOT_ZIGZAG` if there is none.
//
// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_word(const struct FbFrieze *f, char **out);

// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_bracket(const struct FbFrieze *f, struct FbPoly **out);

// # Safety
// `f` must be a live handle or null; `out` must be writable.
FbStatus fb_frieze_render(const struct FbFrieze *f, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRIEZE_BRACKET_H */
