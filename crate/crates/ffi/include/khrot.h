#ifndef KHROT_H
#define KHROT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KhrotStatus {
  KHROT_STATUS_OK = 0,
  KHROT_STATUS_NULL_POINTER = 1,
  KHROT_STATUS_INVALID_UTF8 = 2,
  // Malformed PD code, JSON or selector string.
  KHROT_STATUS_PARSE = 3,
  // The computation refused the input (e.g. too many crossings for the
  // naive engine, mismatched rings).
  KHROT_STATUS_COMPUTE = 4,
  KHROT_STATUS_PANIC = 5,
} KhrotStatus;

// An oriented link diagram.
typedef struct KhrotDiagram KhrotDiagram;

// A bigraded homology table.
typedef struct KhrotTable KhrotTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or NULL. The caller
// owns the returned string.
char *khrot_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void khrot_free_string(char *s);

// Parses PD text (`PD[X[1,5,2,4],...]`) or diagram JSON into a new handle.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum KhrotStatus khrot_diagram_parse(const char *text, struct KhrotDiagram **out);

// # Safety
// `d` must be NULL or a handle from [`khrot_diagram_parse`], not yet freed.
void khrot_diagram_free(struct KhrotDiagram *d);

// Number of crossings, or -1 for a NULL handle.
//
// # Safety
// `d` must be NULL or a live diagram handle.
int64_t khrot_diagram_crossings(const struct KhrotDiagram *d);

// Writhe of the diagram (0 for a NULL handle).
//
// # Safety
// `d` must be NULL or a live diagram handle.
int64_t khrot_diagram_writhe(const struct KhrotDiagram *d);

// JSON object with the Kauffman bracket, the unnormalized Jones polynomial
// and (when defined) the reduced Jones polynomial in `q` and `t`.
//
// # Safety
// `d` must be a live diagram handle and `out` a valid pointer.
enum KhrotStatus khrot_jones_json(const struct KhrotDiagram *d, char **out);

// Computes Khovanov homology. `ring` is `q`, `z` or `fP` (`f2`, `f3`, ...);
// `engine` is `naive`, `scan` or `auto` (NULL means `auto`).
//
// # Safety
// `d` must be a live diagram handle, `ring` a NUL-terminated string,
// `engine` NULL or NUL-terminated, and `out` a valid pointer.
enum KhrotStatus khrot_khovanov(const struct KhrotDiagram *d,
                                const char *ring,
                                const char *engine,
                                struct KhrotTable **out);

// # Safety
// `t` must be NULL or a handle from [`khrot_khovanov`], not yet freed.
void khrot_table_free(struct KhrotTable *t);

// Free rank at `(t, q)` (0 for a NULL handle).
//
// # Safety
// `table` must be NULL or a live table handle.
uint64_t khrot_table_rank(const struct KhrotTable *table, int64_t t, int64_t q);

// Number of cyclic torsion summands at `(t, q)`.
//
// # Safety
// `table` must be NULL or a live table handle.
uint64_t khrot_table_torsion_count(const struct KhrotTable *table, int64_t t, int64_t q);

// Renders the table as `json`, `csv` or `text`.
//
// # Safety
// `table` must be a live table handle, `format` NUL-terminated and `out` a
// valid pointer.
enum KhrotStatus khrot_table_render(const struct KhrotTable *table, const char *format, char **out);

// Number of cells where the two tables differ.
//
// # Safety
// `a` and `b` must be live table handles and `out` a valid pointer.
enum KhrotStatus khrot_table_diff_count(const struct KhrotTable *a,
                                        const struct KhrotTable *b,
                                        uint64_t *out);

// Quantum grading `Q(n)` and shift `c` of the twist family.
//
// # Safety
// `q` and `c` must be valid pointers.
enum KhrotStatus khrot_grading_params(uint64_t n, int64_t *q, int64_t *c);

// Library version (static, do not free).
const char *khrot_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KHROT_H */
