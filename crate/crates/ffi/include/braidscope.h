#ifndef BRAIDSCOPE_H
#define BRAIDSCOPE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BsStatus {
  BS_STATUS_OK = 0,
  BS_STATUS_NULL_POINTER = 1,
  BS_STATUS_INVALID_UTF8 = 2,
  BS_STATUS_PARSE = 3,
  BS_STATUS_INVALID_ARGUMENT = 4,
  BS_STATUS_OUT_OF_BALL = 5,
  BS_STATUS_BUDGET = 6,
  BS_STATUS_BUFFER_TOO_SMALL = 7,
  BS_STATUS_PANIC = 8,
} BsStatus;

// Opaque ball of the Cayley graph.
typedef struct BsBall BsBall;

// Opaque braid word.
typedef struct BsWord BsWord;

typedef struct BsWordStats {
  // Positive letters.
  size_t positive;
  // Negative letters.
  size_t negative;
  int64_t exponent_sum;
  size_t length;
} BsWordStats;

typedef struct BsClassFlags {
  bool positive;
  bool negative;
  bool homogeneous;
  bool alternating;
  bool reduced;
  bool degenerate;
} BsClassFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// success. Valid until the next call into this library.
const char *bs_last_error(void);

// Parses letters (`aB…`) or signed indices (`1 -2 …`) as a word on
// `strands` strands.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum BsStatus bs_word_parse(const char *text, size_t strands, struct BsWord **out);

// # Safety
// `word` must come from this library and not be freed twice. NULL is a no-op.
void bs_word_free(struct BsWord *word);

// # Safety
// `s` must be a string returned by this library, or NULL.
void bs_string_free(char *s);

// Writes the word in letter notation; free with [`bs_string_free`].
//
// # Safety
// `word` and `out` must be valid.
enum BsStatus bs_word_to_string(const struct BsWord *word, char **out);

// ASCII diagram; free with [`bs_string_free`].
//
// # Safety
// `word` and `out` must be valid.
enum BsStatus bs_word_render(const struct BsWord *word, char **out);

// Left-greedy normal form written as a word; free with [`bs_string_free`].
//
// # Safety
// `word` and `out` must be valid.
enum BsStatus bs_word_normal_form(const struct BsWord *word, char **out);

// # Safety
// `word` and `out` must be valid.
enum BsStatus bs_word_stats(const struct BsWord *word, struct BsWordStats *out);

// # Safety
// `word` and `out` must be valid.
enum BsStatus bs_word_classify(const struct BsWord *word, struct BsClassFlags *out);

// Whether two words on the same strands represent the same braid.
//
// # Safety
// All pointers must be valid.
enum BsStatus bs_word_equal(const struct BsWord *a, const struct BsWord *b, bool *out);

// Closed-form geodesic test in `B_3`.
//
// # Safety
// `word` and `out` must be valid.
enum BsStatus bs_b3_geodesic(const struct BsWord *word, bool *out);

// Conway coefficients `a_0..a_d` under the standard ordering. `*len`
// receives the number of coefficients; when it exceeds `capacity`
// nothing is written to `coefficients` and the status is
// `BufferTooSmall`. `coefficients` may be NULL when `capacity` is 0.
//
// # Safety
// `coefficients` must have room for `capacity` values; `len` must be valid.
enum BsStatus bs_conway_standard(const struct BsWord *word,
                                 int64_t *coefficients,
                                 size_t capacity,
                                 size_t *len);

// Builds every braid of length at most `radius`, stopping with `Budget`
// past `budget` elements (0 selects the library default).
//
// # Safety
// `out` must be valid.
enum BsStatus bs_ball_build(size_t strands, size_t radius, size_t budget, struct BsBall **out);

// # Safety
// `ball` must come from this library and not be freed twice. NULL is a no-op.
void bs_ball_free(struct BsBall *ball);

// Number of elements in the ball.
//
// # Safety
// `ball` must be valid or NULL (which yields 0).
size_t bs_ball_size(const struct BsBall *ball);

// Word length of the braid. `OutOfBall` when it lies beyond the radius.
//
// # Safety
// All pointers must be valid.
enum BsStatus bs_ball_length(const struct BsBall *ball, const struct BsWord *word, uint32_t *out);

// # Safety
// All pointers must be valid.
enum BsStatus bs_ball_is_geodesic(const struct BsBall *ball, const struct BsWord *word, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDSCOPE_H */
