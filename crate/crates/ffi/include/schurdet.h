#ifndef SCHURDET_H
#define SCHURDET_H

#include <stdint.h>
#include <stddef.h>

#define SCHURDET_OK 0

// A required pointer argument was null.
#define SCHURDET_ERR_NULL -1

// A string argument was not valid UTF-8.
#define SCHURDET_ERR_UTF8 -2

// The library panicked; the message is available from [`schurdet_last_error`].
#define SCHURDET_ERR_PANIC -3

#define SCHURDET_ERR_INVALID_PARTITION 1

#define SCHURDET_ERR_INVALID_ARITY 2

#define SCHURDET_ERR_INVALID_CONTENT_SET 3

#define SCHURDET_ERR_INVALID_MOVE 4

#define SCHURDET_ERR_PLACEMENT 5

#define SCHURDET_ERR_NOT_A_SKEW_SHAPE 6

#define SCHURDET_ERR_NOT_A_BORDER_STRIP 7

#define SCHURDET_ERR_NOT_CONTAINED 8

#define SCHURDET_ERR_OUT_OF_RANGE 9

#define SCHURDET_ERR_INCOMPATIBLE_CUTTING_STRIP 10

#define SCHURDET_ERR_NOT_SQUARE 11

#define SCHURDET_ERR_SIZE_GUARD 12

#define SCHURDET_ERR_UNBOUND_VARIABLE 13

#define SCHURDET_ERR_SINGULAR_EVALUATION 14

#define SCHURDET_ERR_SHORT_PARAMETERS 15

#define SCHURDET_ERR_PRECONDITION 16

#define SCHURDET_ERR_GLUE_FAILURE 17

#define SCHURDET_ERR_ATTACH 18

#define SCHURDET_ERR_CONSTRUCTION_UNAVAILABLE 19

#define SCHURDET_ERR_INPUT 20

#define SCHURDET_VERDICT_PASS 0

#define SCHURDET_VERDICT_FAIL 1

#define SCHURDET_VERDICT_TRIVIAL 2

#define SCHURDET_VERDICT_ZERO 3

#define SCHURDET_STRIP_OUTER 0

#define SCHURDET_STRIP_INNER 1

// An element of the free ring on `h_{r,s}`.
typedef struct SchurdetPoly SchurdetPoly;

// A skew shape `λ/μ`.
typedef struct SchurdetShape SchurdetShape;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Owned by the library and valid
// until the next call on the same thread.
const char *schurdet_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void schurdet_string_free(char *s);

// Builds `outer/inner` from weakly decreasing part arrays.
//
// # Safety
// Each array must hold at least its stated length; `out` must be writable.
int32_t schurdet_shape_new(const int64_t *outer,
                           size_t outer_len,
                           const int64_t *inner,
                           size_t inner_len,
                           struct SchurdetShape **out);

// # Safety
// `shape` must be null or a live handle from [`schurdet_shape_new`].
void schurdet_shape_free(struct SchurdetShape *shape);

// Number of cells of the shape, or -1 for a null handle.
//
// # Safety
// `shape` must be null or a live handle.
int64_t schurdet_shape_size(const struct SchurdetShape *shape);

// `s̃_{λ/μ}` as an `n × n` determinant; `n = 0` means the length of `λ`.
//
// # Safety
// `shape` must be a live handle; `out` must be writable.
int32_t schurdet_schur9(const struct SchurdetShape *shape, size_t n, struct SchurdetPoly **out);

// # Safety
// `poly` must be null or a live handle from this library.
void schurdet_poly_free(struct SchurdetPoly *poly);

// Number of monomials, or -1 for a null handle.
//
// # Safety
// `poly` must be null or a live handle.
int64_t schurdet_poly_num_terms(const struct SchurdetPoly *poly);

// 1 when equal, 0 when not, -1 if either handle is null.
//
// # Safety
// Both handles must be null or live.
int32_t schurdet_poly_equal(const struct SchurdetPoly *a, const struct SchurdetPoly *b);

// # Safety
// `poly` must be a live handle; `out` must be writable. Free the result with
// [`schurdet_string_free`].
int32_t schurdet_poly_to_string(const struct SchurdetPoly *poly, char **out);

// The classical skew Schur function at `x_i = num[i] / den[i]`, written as `"p/q"`.
//
// # Safety
// `num` and `den` must hold `d` values; `shape` must be live; `out` must be writable.
int32_t schurdet_classical_value(const struct SchurdetShape *shape,
                                 const int64_t *num,
                                 const int64_t *den,
                                 size_t d,
                                 char **out);

// Border strip decomposition by the outer or inner strip, as JSON `{"p":[..],"q":[..],"strips":[..]}`.
//
// # Safety
// `shape` must be live; `out` must be writable.
int32_t schurdet_decompose_json(const struct SchurdetShape *shape,
                                int32_t strip,
                                char **out);

// Runs identity `id` (e.g. `"thm3.3"`) on a JSON instance with default options. Writes the
// reports as JSON lines and the worst verdict (Fail over anything else).
//
// # Safety
// `id` and `instance` must be NUL-terminated; `out` and `verdict` must be writable.
int32_t schurdet_verify_json(const char *id, const char *instance, char **out, int32_t *verdict);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SCHURDET_H */
