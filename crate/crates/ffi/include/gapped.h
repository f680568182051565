/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef GAPPED_H
#define GAPPED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum GappedStatus {
  GAPPED_STATUS_OK = 0,
  GAPPED_STATUS_NULL_POINTER = 1,
  GAPPED_STATUS_INPUT = 2,
  GAPPED_STATUS_RANGE = 3,
  GAPPED_STATUS_PARAM = 4,
  GAPPED_STATUS_PLAN = 5,
  GAPPED_STATUS_PRECONDITION = 6,
  GAPPED_STATUS_BUFFER_TOO_SMALL = 7,
  GAPPED_STATUS_PANIC = 8,
} GappedStatus;

// Values accepted for `kind` arguments.
typedef enum GappedKind {
  GAPPED_KIND_REPEAT = 0,
  GAPPED_KIND_PALINDROME = 1,
} GappedKind;

// Opaque text with its index.
typedef struct GappedText GappedText;

// A gapped structure; `left_start` is 1-based.
typedef struct GappedStructure {
  size_t left_start;
  size_t arm_len;
  size_t gap_len;
} GappedStructure;

// A maximal run `w[start..=end]` with smallest period `period`.
typedef struct GappedRun {
  size_t start;
  size_t end;
  size_t period;
} GappedRun;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a text over the bytes `data[0..len]`. The handle must be released
// with `gapped_text_free`.
enum GappedStatus gapped_text_new(const uint8_t *data, size_t len, struct GappedText **out);

// Releases a handle; null is ignored.
void gapped_text_free(struct GappedText *text);

// Length of the text, 0 for a null handle.
size_t gapped_text_len(const struct GappedText *text);

// Message for the last failed call on this thread; empty after success.
// Valid until the next call on the same thread.
const char *gapped_last_error(void);

// Longest common prefix of the suffixes at `i` and `j`.
enum GappedStatus gapped_lcp(const struct GappedText *text, size_t i, size_t j, size_t *out);

// Longest common suffix of the prefixes ending at `i` and `j`.
enum GappedStatus gapped_lcs(const struct GappedText *text, size_t i, size_t j, size_t *out);

// Longest common prefix of the suffix at `i` and the reversed prefix
// ending at `j`.
enum GappedStatus gapped_lcp_rev(const struct GappedText *text, size_t i, size_t j, size_t *out);

// Gapped palindromes with gap in `[g, big_g)`. `values` must hold n
// entries; `witness` (n entries, end of the left arm) may be null.
enum GappedStatus gapped_lprf_bounded(const struct GappedText *text,
                                      size_t g,
                                      size_t big_g,
                                      size_t *values,
                                      int64_t *witness,
                                      size_t cap);

// Gapped repeats with gap in `[g, big_g)`; witnesses are left-arm starts.
enum GappedStatus gapped_lpf_bounded(const struct GappedText *text,
                                     size_t g,
                                     size_t big_g,
                                     size_t *values,
                                     int64_t *witness,
                                     size_t cap);

// Gapped palindromes with gap at least `gaps[i-1]`; `gaps` holds n values.
enum GappedStatus gapped_lprf_positional(const struct GappedText *text,
                                         const size_t *gaps,
                                         size_t *values,
                                         int64_t *witness,
                                         size_t cap);

// Gapped repeats with gap at least `gaps[i-1]`; `gaps` holds n values.
enum GappedStatus gapped_lpf_positional(const struct GappedText *text,
                                        const size_t *gaps,
                                        size_t *values,
                                        int64_t *witness,
                                        size_t cap);

// α-gapped palindromes with `α = p / q`.
enum GappedStatus gapped_lpal_alpha(const struct GappedText *text,
                                    uint64_t p,
                                    uint64_t q,
                                    size_t *values,
                                    int64_t *witness,
                                    size_t cap);

// α-gapped repeats with `α = p / q`.
enum GappedStatus gapped_lrep_alpha(const struct GappedText *text,
                                    uint64_t p,
                                    uint64_t q,
                                    size_t *values,
                                    int64_t *witness,
                                    size_t cap);

// A longest structure of `kind` (a `GappedKind` value) with gap in
// `[g, big_g)`. `*found` is false when none exists.
enum GappedStatus gapped_longest_bounded(const struct GappedText *text,
                                         size_t g,
                                         size_t big_g,
                                         uint32_t kind,
                                         struct GappedStructure *out,
                                         bool *found);

// A longest α-gapped structure of `kind` with `α = p / q`.
enum GappedStatus gapped_longest_alpha(const struct GappedText *text,
                                       uint64_t p,
                                       uint64_t q,
                                       uint32_t kind,
                                       struct GappedStructure *out,
                                       bool *found);

// Writes up to `cap` runs to `out` and their total number to `*count`.
// Returns `BUFFER_TOO_SMALL` when `cap < *count`; `out` may be null when
// `cap` is 0.
enum GappedStatus gapped_runs(const struct GappedText *text,
                              struct GappedRun *out,
                              size_t cap,
                              size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAPPED_H */
