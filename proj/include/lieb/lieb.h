#ifndef LIEB_H
#define LIEB_H

/* C interface to the lieb shared library.
 *
 * Conventions:
 *   - Every fallible call returns a lieb_status and reports LIEB_OK on
 *     success.  On failure, *error_detail (when non-NULL) receives a
 *     malloc'd one-line machine-parsable message beginning with the
 *     status name; free it with lieb_string_free.
 *   - Rendered reports are returned through *out as malloc'd NUL
 *     terminated strings ending in a newline; free with lieb_string_free.
 *   - Algebra handles are opaque; free with lieb_algebra_free.
 *   - All functions are thread-compatible: distinct handles may be used
 *     concurrently, a single handle must not be mutated concurrently
 *     (handles are in fact never mutated after construction).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LIEB_VERSION "1.0.0"

typedef struct lieb_algebra lieb_algebra;

/* Values are stable and shared with the C++ core. */
typedef enum lieb_status {
  LIEB_OK = 0,
  LIEB_PARSE_ERROR = 1,
  LIEB_DUPLICATE_PRODUCT = 2,
  LIEB_UNKNOWN_LABEL = 3,
  LIEB_NOT_LIE = 4,
  LIEB_NOT_LEIBNIZ = 5,
  LIEB_NO_LIMIT = 6,
  LIEB_SINGULAR = 7,
  LIEB_SINGULAR_PATH = 8,
  LIEB_POLE_AT_ZERO = 9,
  LIEB_ZERO_FUNCTION = 10,
  LIEB_DIMENSION_TOO_LARGE = 11,
  LIEB_DIMENSION_MISMATCH = 12,
  LIEB_UNKNOWN_NAME = 13,
  LIEB_BAD_PARAMETER = 14,
  LIEB_USAGE = 15,
  LIEB_INTERNAL = 16
} lieb_status;

typedef enum lieb_format {
  LIEB_FORMAT_JSON = 0,
  LIEB_FORMAT_TEXT = 1
} lieb_format;

typedef enum lieb_theory {
  LIEB_THEORY_LIE = 0,
  LIEB_THEORY_LEIBNIZ = 1
} lieb_theory;

typedef enum lieb_coefficients {
  LIEB_COEFF_ADJOINT = 0,
  LIEB_COEFF_TRIVIAL = 1
} lieb_coefficients;

const char* lieb_version(void);
const char* lieb_status_name(lieb_status status);
void lieb_string_free(char* s);

/* Algebra construction and serialization. */
lieb_status lieb_algebra_parse(const char* bytes, size_t len,
                               lieb_algebra** out, char** error_detail);
lieb_status lieb_algebra_from_catalog(const char* name, const long* params,
                                      size_t n_params, lieb_algebra** out,
                                      char** error_detail);
void lieb_algebra_free(lieb_algebra* a);
size_t lieb_algebra_dim(const lieb_algebra* a);
/* Canonical algebra-file JSON; parse(render(a)) reproduces a. */
lieb_status lieb_algebra_render(const lieb_algebra* a, char** out,
                                char** error_detail);

/* Report renderers; one per CLI subcommand. */
lieb_status lieb_check(const lieb_algebra* a, lieb_format format, char** out,
                       char** error_detail);
lieb_status lieb_invariants(const lieb_algebra* a, lieb_format format,
                            char** out, char** error_detail);
/* Lie theory: adjoint coefficients, degree 0..2.  Leibniz theory:
 * adjoint or trivial, degree 0..3. */
lieb_status lieb_cohomology(const lieb_algebra* a, lieb_theory theory,
                            lieb_coefficients coefficients, unsigned degree,
                            lieb_format format, char** out,
                            char** error_detail);
lieb_status lieb_rigidity(const lieb_algebra* a, lieb_format format,
                          char** out, char** error_detail);
lieb_status lieb_contract_weights(const lieb_algebra* a, const long* weights,
                                  size_t n_weights, lieb_format format,
                                  char** out, char** error_detail);
/* path_bytes is a path file: {"matrix": [["t", "0"], ["1", "t^2"]]}. */
lieb_status lieb_contract_path(const lieb_algebra* a, const char* path_bytes,
                               size_t len, lieb_format format, char** out,
                               char** error_detail);
lieb_status lieb_screen(const lieb_algebra* source,
                        const lieb_algebra* target, lieb_format format,
                        char** out, char** error_detail);
lieb_status lieb_catalog_list(lieb_format format, char** out,
                              char** error_detail);
/* export_algebra nonzero: *out is the bare algebra-file JSON instead of a
 * catalog_show report. */
lieb_status lieb_catalog_show(const char* name, const long* params,
                              size_t n_params, int export_algebra,
                              lieb_format format, char** out,
                              char** error_detail);

/* Dense-matrix size guard for Leibniz cochain spaces; 0 restores the
 * default (200000).  Returns the guard in effect via lieb_size_guard. */
lieb_status lieb_set_size_guard(uint64_t bound);
uint64_t lieb_size_guard(void);

#ifdef __cplusplus
}
#endif

#endif
