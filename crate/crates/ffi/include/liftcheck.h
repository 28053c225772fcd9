#ifndef LIFTCHECK_H
#define LIFTCHECK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_NULL_POINTER = 1,
  LC_STATUS_INVALID_UTF8 = 2,
  LC_STATUS_PARSE = 3,
  LC_STATUS_INVALID_INPUT = 4,
  LC_STATUS_TOO_LARGE = 5,
  LC_STATUS_CERTIFICATION_FAILED = 6,
  LC_STATUS_PANIC = 7,
} LcStatus;

/*
 Outcome of classifying a group.
 */
typedef struct LcClassification LcClassification;

/*
 A finite group given by its multiplication table.
 */
typedef struct LcGroup LcGroup;

/*
 Outcome of a lift check.
 */
typedef struct LcLiftResult LcLiftResult;

/*
 A representation of a finitely presented group over `F_p`.
 */
typedef struct LcRepresentation LcRepresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or NULL. Valid until the
 next call into the library on the same thread.
 */
const char *lc_last_error(void);

/*
 Library version, static storage.
 */
const char *lc_version(void);

/*
 # Safety
 `s` is NULL or a string returned by this library, not yet freed.
 */
void lc_string_free(char *s);

/*
 Parses a representation in the text format.

 # Safety
 `src` is a NUL-terminated string; `out` is writable.
 */
enum LcStatus lc_rep_parse(const char *src, struct LcRepresentation **out);

/*
 Built-in witness for `kind`: `C2xC2`, `Q8`, `C3xC3`, `C9` or `C<p>`.

 # Safety
 `kind` is a NUL-terminated string; `out` is writable.
 */
enum LcStatus lc_rep_witness(const char *kind, struct LcRepresentation **out);

/*
 # Safety
 `rep` is a valid handle; `dim` and `p` are writable.
 */
enum LcStatus lc_rep_shape(const struct LcRepresentation *rep, size_t *dim, uint32_t *p);

/*
 The representation in the text format.

 # Safety
 `rep` is a valid handle; `out` is writable.
 */
enum LcStatus lc_rep_to_string(const struct LcRepresentation *rep, char **out);

/*
 # Safety
 `rep` is NULL or a handle from this library, not yet freed.
 */
void lc_rep_free(struct LcRepresentation *rep);

/*
 Decides whether `rep` lifts to `Z/p^2`.

 # Safety
 `rep` is a valid handle; `out` is writable.
 */
enum LcStatus lc_check_lift(const struct LcRepresentation *rep, struct LcLiftResult **out);

/*
 # Safety
 `res` is a valid handle; `liftable` is writable.
 */
enum LcStatus lc_lift_result_is_liftable(const struct LcLiftResult *res, bool *liftable);

/*
 The lifted generator matrices, one `name: rows` line per generator with
 entries in `[0, p^2)`, or the nonzero entries of the refuting functional
 as `equation:coefficient` pairs.

 # Safety
 `res` is a valid handle; `out` is writable.
 */
enum LcStatus lc_lift_result_to_string(const struct LcLiftResult *res, char **out);

/*
 # Safety
 `res` is NULL or a handle from this library, not yet freed.
 */
void lc_lift_result_free(struct LcLiftResult *res);

/*
 Builds a group from a family spec such as `"C 24"` or `"Q 8"`.

 # Safety
 `spec` is a NUL-terminated string; `out` is writable.
 */
enum LcStatus lc_group_from_family(const char *spec, struct LcGroup **out);

/*
 Builds a group from a multiplication table file's contents.

 # Safety
 `table` is a NUL-terminated string; `out` is writable.
 */
enum LcStatus lc_group_from_table(const char *table, struct LcGroup **out);

/*
 # Safety
 `g` is a valid handle; `order` is writable.
 */
enum LcStatus lc_group_order(const struct LcGroup *g, size_t *order);

/*
 # Safety
 `g` is NULL or a handle from this library, not yet freed.
 */
void lc_group_free(struct LcGroup *g);

/*
 # Safety
 `g` is a valid handle; `out` is writable.
 */
enum LcStatus lc_classify(const struct LcGroup *g, struct LcClassification **out);

/*
 `liftable` is set for liftable groups. `certified` is set when the
 verdict is liftable or the witness was refuted by the checker.

 # Safety
 `c` is a valid handle; both outputs are writable.
 */
enum LcStatus lc_classification_flags(const struct LcClassification *c,
                                      bool *liftable,
                                      bool *certified);

/*
 The family tag of a liftable group or the obstruction subgroup kind.

 # Safety
 `c` is a valid handle; `out` is writable.
 */
enum LcStatus lc_classification_label(const struct LcClassification *c, char **out);

/*
 The witness representation of a non-liftable group.

 # Safety
 `c` is a valid handle; `out` is writable.
 */
enum LcStatus lc_classification_witness(const struct LcClassification *c,
                                        struct LcRepresentation **out);

/*
 # Safety
 `c` is NULL or a handle from this library, not yet freed.
 */
void lc_classification_free(struct LcClassification *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIFTCHECK_H */
