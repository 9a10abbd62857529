#ifndef PNRD_H
#define PNRD_H

#include <stddef.h>
#include <stdint.h>

/**
 * Status codes; the nonzero values match the command-line exit codes.
 */
typedef enum PnrdStatus {
  PNRD_STATUS_OK = 0,
  /**
   * The document or a class failed validation.
   */
  PNRD_STATUS_VALIDATION = 2,
  /**
   * A computation on valid input failed.
   */
  PNRD_STATUS_COMPUTATION = 3,
  /**
   * A null pointer, non-UTF-8 text, an unknown class name or a zero rank.
   */
  PNRD_STATUS_INVALID_ARGUMENT = 64,
  /**
   * An internal error; the library state is unaffected.
   */
  PNRD_STATUS_INTERNAL = 70,
} PnrdStatus;

/**
 * A validated variety together with its named classes.
 */
typedef struct PnrdContext PnrdContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses and validates a JSON document; on success `*out_ctx` owns a new context.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out_ctx` a valid pointer.
 */
enum PnrdStatus pnrd_context_new(const char *json, struct PnrdContext **out_ctx);

/**
 * Releases a context; null is ignored.
 *
 * # Safety
 * `ctx` must come from `pnrd_context_new` and not be used afterwards.
 */
void pnrd_context_free(struct PnrdContext *ctx);

/**
 * The dimension g of the variety.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PnrdStatus pnrd_context_dimension(const struct PnrdContext *ctx, uint32_t *out_g);

/**
 * The Euler characteristic of a class as a rational string such as "-3/4".
 *
 * # Safety
 * Pointers must be valid; the string in `*out_chi` is freed with `pnrd_string_free`.
 */
enum PnrdStatus pnrd_chi(const struct PnrdContext *ctx, const char *class_name, char **out_chi);

/**
 * The index i and the kernel dimension of a class.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PnrdStatus pnrd_index(const struct PnrdContext *ctx,
                           const char *class_name,
                           size_t *out_i,
                           size_t *out_dim_k);

/**
 * The continuous regularity of a bundle with the named determinant class
 * and the given rank; rank 1 treats the class itself.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PnrdStatus pnrd_regcont(const struct PnrdContext *ctx,
                             const char *class_name,
                             uint32_t rank,
                             int64_t *out_m);

/**
 * The Hilbert data of a class as a JSON object with the coefficient lists
 * `q` and `hilbert` (constant term first) and the root counts.
 *
 * # Safety
 * Pointers must be valid; the string in `*out_json` is freed with `pnrd_string_free`.
 */
enum PnrdStatus pnrd_hilbert_json(const struct PnrdContext *ctx,
                                  const char *class_name,
                                  char **out_json);

/**
 * The message of the last failed call on this thread, or null after a
 * successful call. Valid until the next call on the same thread.
 */
const char *pnrd_last_error_message(void);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pnrd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PNRD_H */
