/* C interface to the hdl Hurwitz-divisor library. */

#ifndef HDL_H
#define HDL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum HdlStatus {
  // Success.
  HDL_STATUS_OK = 0,
  // A required pointer was NULL.
  HDL_STATUS_NULL_POINTER = 1,
  // An argument violated a precondition.
  HDL_STATUS_INVALID_ARGUMENT = 2,
  // A textual input failed to parse.
  HDL_STATUS_PARSE_ERROR = 3,
  // An enumeration exceeded the configured resource ceiling.
  HDL_STATUS_RESOURCE_EXCEEDED = 4,
  // A canonical tuple construction received inconsistent parameters.
  HDL_STATUS_CONSTRUCTION_ERROR = 5,
} HdlStatus;

// Opaque divisor class handle.
typedef struct HdlDivisorClass HdlDivisorClass;

// Opaque orbit report handle.
typedef struct HdlOrbitReport HdlOrbitReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL if the
// last call succeeded. The pointer stays valid until the next failing
// call on the same thread; do not free it.
const char *hdl_last_error_message(void);

// Library version as a static string; do not free.
const char *hdl_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must have been returned through a `char **` out-parameter of this
// library and not freed before; NULL is ignored.
void hdl_string_free(char *s);

// Class of the two-points-in-a-fibre divisor, from the closed
// coefficient formulas (`k >= 1`).
//
// # Safety
// `out` must be valid for writes.
enum HdlStatus hdl_d2_theorem(uint64_t k, struct HdlDivisorClass **out);

// The same class assembled through the pushforward pipeline (`k >= 2`).
//
// # Safety
// `out` must be valid for writes.
enum HdlStatus hdl_d2_pipeline(uint64_t k, struct HdlDivisorClass **out);

// Class of the triple-ramification divisor (`k >= 2`).
//
// # Safety
// `out` must be valid for writes.
enum HdlStatus hdl_d3(uint64_t k, struct HdlDivisorClass **out);

// Parses the JSON produced by `hdl_class_to_json`.
//
// # Safety
// `json` must be NUL-terminated; `out` must be valid for writes.
enum HdlStatus hdl_class_parse_json(const char *json, struct HdlDivisorClass **out);

// Releases a divisor class handle; NULL is ignored.
//
// # Safety
// `cls` must come from this library and not be freed twice.
void hdl_class_free(struct HdlDivisorClass *cls);

// Genus `2k` of the moduli space the class lives on; 0 for NULL.
//
// # Safety
// `cls` must be a live handle or NULL.
uint64_t hdl_class_genus(const struct HdlDivisorClass *cls);

// Coefficient of the Hodge class as a rational string.
//
// # Safety
// `cls` must be a live handle; `out` must be valid for writes.
enum HdlStatus hdl_class_lambda(const struct HdlDivisorClass *cls, char **out);

// Coefficient of the boundary class `delta_j` as a rational string.
//
// # Safety
// `cls` must be a live handle; `out` must be valid for writes.
enum HdlStatus hdl_class_delta(const struct HdlDivisorClass *cls, uint64_t j, char **out);

// Stable JSON rendering of the class.
//
// # Safety
// `cls` must be a live handle; `out` must be valid for writes.
enum HdlStatus hdl_class_to_json(const struct HdlDivisorClass *cls, char **out);

// The Catalan number `C(2k, k+1)/k` as a decimal string (`k >= 1`).
//
// # Safety
// `out` must be valid for writes.
enum HdlStatus hdl_catalan(uint64_t k, char **out);

// Number of degree-`d` covers with `b` simple branch points and one
// extra point of ramification `extra` (comma list such as `"3"` or
// `"2,2"`, padded with 1s; NULL means unramified). Honors
// `HDL_NODE_CEILING`.
//
// # Safety
// `extra` must be NUL-terminated or NULL; `out` must be valid for writes.
enum HdlStatus hdl_hurwitz_count(uint32_t d, uint32_t b, const char *extra, uint64_t *out);

// Runs an orbit partition for the tuple set of `(d, b, phi)` and hands
// back a report. `phi` uses cycle notation, e.g. `"(1 2 3)"`;
// `pure_braid` selects the generator family; `quotient` additionally
// identifies centralizer-conjugate tuples; reports do not depend on
// `threads`. Honors `HDL_NODE_CEILING`.
//
// # Safety
// `phi` must be NUL-terminated; `out` must be valid for writes.
enum HdlStatus hdl_orbit_run(uint32_t d,
                             uint32_t b,
                             const char *phi,
                             bool pure_braid,
                             bool quotient,
                             uint32_t threads,
                             struct HdlOrbitReport **out);

// Number of orbits in a report; 0 for NULL.
//
// # Safety
// `report` must be a live handle or NULL.
uint64_t hdl_orbit_report_orbit_count(const struct HdlOrbitReport *report);

// Whether the report certifies a single orbit over a nonempty set;
// false for NULL.
//
// # Safety
// `report` must be a live handle or NULL.
bool hdl_orbit_report_transitive(const struct HdlOrbitReport *report);

// Stable JSON rendering of the report.
//
// # Safety
// `report` must be a live handle; `out` must be valid for writes.
enum HdlStatus hdl_orbit_report_to_json(const struct HdlOrbitReport *report, char **out);

// Releases an orbit report handle; NULL is ignored.
//
// # Safety
// `report` must come from this library and not be freed twice.
void hdl_orbit_report_free(struct HdlOrbitReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HDL_H */
