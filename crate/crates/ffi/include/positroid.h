#ifndef POSITROID_H
#define POSITROID_H

/* This file is generated from the Rust sources; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call in this ABI.
typedef enum PositroidStatus {
  // The call succeeded.
  PositroidStatus_Ok = 0,
  // A required pointer argument was null.
  PositroidStatus_NullPointer = 1,
  // An argument was malformed (bad type parameters, labels, or text).
  PositroidStatus_InvalidArgument = 2,
  // The input text could not be parsed.
  PositroidStatus_ParseFailed = 3,
  // The object exists but fails validation (Le condition or necklace
  // axioms), or the conversion input does not describe a valid object.
  PositroidStatus_ValidationFailed = 4,
  // An invariant inside the library broke; please report a bug.
  PositroidStatus_InternalError = 5,
} PositroidStatus;

// An opaque Le diagram handle.
typedef struct PositroidDiagram PositroidDiagram;

// An opaque Grassmann necklace handle.
typedef struct PositroidNecklace PositroidNecklace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the message for the most recent failure on this thread, or null
// if the most recent call succeeded.
//
// The pointer stays valid until the next ABI call on the same thread; do
// not free it.
//
// # Safety
// Always safe to call; the returned pointer must not outlive the next
// call into this library on the same thread.
const char *positroid_last_error_message(void);

// Frees a string returned by any function in this ABI. Null is ignored.
//
// # Safety
// `s` must be a pointer previously returned through an out-parameter of
// this library (or null), and must not be used afterwards.
void positroid_string_free(char *s);

// Parses a Le diagram from its plain-text form (`k n rows=...` header
// followed by one `+`/`0` line per nonempty row) into a new handle.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be a valid pointer.
// On `Ok` the caller owns the handle and must release it with
// [`positroid_diagram_free`].
enum PositroidStatus positroid_diagram_parse(const char *src, struct PositroidDiagram **out);

// Parses a Le diagram from its JSON form into a new handle.
//
// # Safety
// Same contract as [`positroid_diagram_parse`].
enum PositroidStatus positroid_diagram_parse_json(const char *src, struct PositroidDiagram **out);

// Renders a diagram in its canonical plain-text form.
//
// # Safety
// `d` must be a live diagram handle; `out` receives a string the caller
// must release with [`positroid_string_free`].
enum PositroidStatus positroid_diagram_render(const struct PositroidDiagram *d, char **out);

// Renders a diagram as a bordered picture with the boundary walk labels.
//
// # Safety
// Same contract as [`positroid_diagram_render`].
enum PositroidStatus positroid_diagram_render_ascii(const struct PositroidDiagram *d, char **out);

// Renders a diagram in its canonical JSON form.
//
// # Safety
// Same contract as [`positroid_diagram_render`].
enum PositroidStatus positroid_diagram_to_json(const struct PositroidDiagram *d, char **out);

// Checks the Le condition. Returns `Ok` when the filling is valid and
// `ValidationFailed` when it is not; in both cases, when `report_out` is
// non-null it receives the rendered report text (release it with
// [`positroid_string_free`]).
//
// # Safety
// `d` must be a live diagram handle; `report_out` may be null.
enum PositroidStatus positroid_diagram_validate(const struct PositroidDiagram *d,
                                                char **report_out);

// Number of rows (the rank `k`); 0 for a null handle.
//
// # Safety
// `d` must be a live diagram handle or null.
uint32_t positroid_diagram_rank(const struct PositroidDiagram *d);

// Size of the ground set (`n`); 0 for a null handle.
//
// # Safety
// `d` must be a live diagram handle or null.
uint32_t positroid_diagram_ground_set(const struct PositroidDiagram *d);

// Dimension of the positroid cell (the number of plus squares); 0 for a
// null handle.
//
// # Safety
// `d` must be a live diagram handle or null.
uint64_t positroid_diagram_dimension(const struct PositroidDiagram *d);

// Releases a diagram handle. Null is ignored.
//
// # Safety
// `d` must be a handle from this library (or null) and must not be used
// afterwards.
void positroid_diagram_free(struct PositroidDiagram *d);

// Parses a Grassmann necklace from its plain-text form (comma-separated
// terms, each a digit string or braced list) into a new handle.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be a valid pointer.
// On `Ok` the caller owns the handle and must release it with
// [`positroid_necklace_free`].
enum PositroidStatus positroid_necklace_parse(const char *src, struct PositroidNecklace **out);

// Parses a Grassmann necklace from its JSON form into a new handle.
//
// # Safety
// Same contract as [`positroid_necklace_parse`].
enum PositroidStatus positroid_necklace_parse_json(const char *src, struct PositroidNecklace **out);

// Renders a necklace in its plain-text form. With `braces` false the
// compact digit-string form is used where unambiguous (ground set at most
// 9); braced terms are used otherwise.
//
// # Safety
// `nk` must be a live necklace handle; `out` receives a string the caller
// must release with [`positroid_string_free`].
enum PositroidStatus positroid_necklace_render(const struct PositroidNecklace *nk,
                                               bool braces,
                                               char **out);

// Renders a necklace in its canonical JSON form.
//
// # Safety
// Same contract as [`positroid_necklace_render`].
enum PositroidStatus positroid_necklace_to_json(const struct PositroidNecklace *nk, char **out);

// Checks the necklace exchange axioms. Returns `Ok` when every cyclic
// transition is lawful and `ValidationFailed` otherwise; when `report_out`
// is non-null it receives the rendered report text (release it with
// [`positroid_string_free`]). With `strict` true, an index present in its
// own term must be exchanged for a different label.
//
// # Safety
// `nk` must be a live necklace handle; `report_out` may be null.
enum PositroidStatus positroid_necklace_validate(const struct PositroidNecklace *nk,
                                                 bool strict,
                                                 char **report_out);

// Number of labels in each term (the rank `k`); 0 for a null handle.
//
// # Safety
// `nk` must be a live necklace handle or null.
uint32_t positroid_necklace_rank(const struct PositroidNecklace *nk);

// Size of the ground set (`n`, also the number of terms); 0 for a null
// handle.
//
// # Safety
// `nk` must be a live necklace handle or null.
uint32_t positroid_necklace_ground_set(const struct PositroidNecklace *nk);

// Releases a necklace handle. Null is ignored.
//
// # Safety
// `nk` must be a handle from this library (or null) and must not be used
// afterwards.
void positroid_necklace_free(struct PositroidNecklace *nk);

// Converts a Le diagram to its Grassmann necklace. The diagram must pass
// validation first; an invalid filling yields `ValidationFailed`.
//
// # Safety
// `d` must be a live diagram handle; `out` must be a valid pointer. On
// `Ok` the caller owns the new necklace handle.
enum PositroidStatus positroid_diagram_to_necklace(const struct PositroidDiagram *d,
                                                   struct PositroidNecklace **out);

// Converts a Grassmann necklace to its Le diagram. The necklace must
// satisfy the exchange axioms and describe a Le-valid filling; anything
// else yields `ValidationFailed`.
//
// # Safety
// `nk` must be a live necklace handle; `out` must be a valid pointer. On
// `Ok` the caller owns the new diagram handle.
enum PositroidStatus positroid_necklace_to_diagram(const struct PositroidNecklace *nk,
                                                   struct PositroidDiagram **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSITROID_H */
