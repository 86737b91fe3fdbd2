#ifndef PERIPLECTIC_H
#define PERIPLECTIC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result of every fallible call.
typedef enum PeriplecticStatus {
  PERIPLECTIC_STATUS_OK = 0,
  // A required pointer argument was null.
  PERIPLECTIC_STATUS_NULL_POINTER = 1,
  // Arguments are malformed or outside the domain of the operation.
  PERIPLECTIC_STATUS_INVALID_ARGUMENT = 2,
  // Valid request the library does not handle, such as characteristic 2.
  PERIPLECTIC_STATUS_UNSUPPORTED = 3,
  // A configured size bound would be exceeded.
  PERIPLECTIC_STATUS_RESOURCE = 4,
  // A consistency check failed, or the library panicked.
  PERIPLECTIC_STATUS_INTERNAL = 5,
  // Input text (JSON or a partition) could not be parsed.
  PERIPLECTIC_STATUS_PARSE = 6,
} PeriplecticStatus;

// A block decomposition of `Λ_n`.
typedef struct PeriplecticBlocks PeriplecticBlocks;

// An `(r, s)`-Brauer diagram.
typedef struct PeriplecticDiagram PeriplecticDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failing call on this thread, or null if none. The
// pointer stays valid until the next failing call on the same thread.
const char *periplectic_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void periplectic_string_free(char *s);

// Parses a diagram from JSON `{"r":…,"s":…,"pairs":[[a,b],…]}` with
// 1-based nodes.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum PeriplecticStatus periplectic_diagram_from_json(const char *json,
                                                     struct PeriplecticDiagram **out);

// The identity diagram of `A_n`.
//
// # Safety
// `out` must be writable.
enum PeriplecticStatus periplectic_diagram_identity(size_t n, struct PeriplecticDiagram **out);

// Releases a diagram. Null is ignored.
//
// # Safety
// `d` must come from this library and not have been freed.
void periplectic_diagram_free(struct PeriplecticDiagram *d);

// Number of northern and southern nodes.
//
// # Safety
// `d` must be a live diagram; `r` and `s` must be writable.
enum PeriplecticStatus periplectic_diagram_shape(const struct PeriplecticDiagram *d,
                                                 size_t *r,
                                                 size_t *s);

// JSON form of a diagram; free with [`periplectic_string_free`].
//
// # Safety
// `d` must be a live diagram; `out` must be writable.
enum PeriplecticStatus periplectic_diagram_to_json(const struct PeriplecticDiagram *d, char **out);

// Signed product `a · b` (`a` on top). Writes the sign (`-1`, `0`, `+1`)
// and, unless the product is zero, a new diagram; a zero product writes a
// null diagram.
//
// # Safety
// `a`, `b` must be live diagrams; `sign` and `out` must be writable.
enum PeriplecticStatus periplectic_diagram_multiply(const struct PeriplecticDiagram *a,
                                                    const struct PeriplecticDiagram *b,
                                                    int8_t *sign,
                                                    struct PeriplecticDiagram **out);

// The anti-involution `φ`, as a sign and a diagram.
//
// # Safety
// `d` must be a live diagram; `sign` and `out` must be writable.
enum PeriplecticStatus periplectic_diagram_phi(const struct PeriplecticDiagram *d,
                                               int8_t *sign,
                                               struct PeriplecticDiagram **out);

// `dim A_n = (2n-1)!!`.
//
// # Safety
// `out` must be writable.
enum PeriplecticStatus periplectic_algebra_dimension(size_t n, uint64_t *out);

// Closed-form block decomposition; `p` is 0 or an odd prime.
//
// # Safety
// `out` must be writable.
enum PeriplecticStatus periplectic_blocks_classify(size_t n,
                                                   uint64_t p,
                                                   struct PeriplecticBlocks **out);

// Block decomposition from the central idempotents of `A_n` over GF(p).
//
// # Safety
// `out` must be writable.
enum PeriplecticStatus periplectic_blocks_oracle(size_t n,
                                                 uint64_t p,
                                                 struct PeriplecticBlocks **out);

// Releases a block decomposition. Null is ignored.
//
// # Safety
// `b` must come from this library and not have been freed.
void periplectic_blocks_free(struct PeriplecticBlocks *b);

// Number of blocks.
//
// # Safety
// `b` must be a live decomposition; `out` must be writable.
enum PeriplecticStatus periplectic_blocks_count(const struct PeriplecticBlocks *b, size_t *out);

// Whether two decompositions are the same set partition.
//
// # Safety
// `a`, `b` must be live decompositions; `out` must be writable.
enum PeriplecticStatus periplectic_blocks_equal(const struct PeriplecticBlocks *a,
                                                const struct PeriplecticBlocks *b,
                                                bool *out);

// JSON `{"n","p","provenance","blocks"}`; free with
// [`periplectic_string_free`].
//
// # Safety
// `b` must be a live decomposition; `out` must be writable.
enum PeriplecticStatus periplectic_blocks_to_json(const struct PeriplecticBlocks *b, char **out);

// The `p`-core of a partition written like `"(4,4,2,1)"`.
//
// # Safety
// `partition` must be a NUL-terminated string; `out` must be writable.
enum PeriplecticStatus periplectic_p_core(const char *partition, size_t p, char **out);

// The Mullineux conjugate of a `p`-restricted partition.
//
// # Safety
// `partition` must be a NUL-terminated string; `out` must be writable.
enum PeriplecticStatus periplectic_mullineux(const char *partition, uint32_t p, char **out);

// Runs the verification grid with every `n` capped at `max_n`; writes the
// number of failed checks.
//
// # Safety
// `failed` must be writable.
enum PeriplecticStatus periplectic_verify(size_t max_n, uint64_t seed, uint32_t *failed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PERIPLECTIC_H */
