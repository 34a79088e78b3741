/* Copyright 2026 The parasol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* parasol — exact tensor calculus for Lorentzian para-Sasakian structures,
 * the two-parameter general connection family, and generalized eta-Ricci
 * solitons.
 *
 * Every entry point is pure with respect to the opaque manifold handle: the
 * handle is immutable after load and safe to share across threads. Reports
 * are returned as deterministic JSON documents (byte-identical for identical
 * inputs); free them with parasol_string_free. All scalars cross this API as
 * exact rational strings "p/q" — no floating point anywhere.
 */

#ifndef PARASOL_PARASOL_H
#define PARASOL_PARASOL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(PARASOL_BUILDING_SHARED)
#define PARASOL_API __declspec(dllexport)
#else
#define PARASOL_API __declspec(dllimport)
#endif
#else
#if defined(__GNUC__) && __GNUC__ >= 4
#define PARASOL_API __attribute__((visibility("default")))
#else
#define PARASOL_API
#endif
#endif

/* Status codes double as CLI exit codes. */
typedef enum parasol_status {
  PARASOL_OK = 0,           /* report generated, every check passed            */
  PARASOL_CHECK_FAILED = 1, /* report generated, some mathematical check failed */
  PARASOL_BAD_ARGUMENT = 2, /* malformed rational, unknown preset, bad combo    */
  PARASOL_IO_ERROR = 3      /* missing file, JSON parse or load-time validation */
} parasol_status;

/* Opaque: a validated frame manifold with its paracontact structure and the
 * cached Levi-Civita connection. */
typedef struct parasol_manifold parasol_manifold;

PARASOL_API const char* parasol_version(void);

/* Frees any char* returned through an out parameter of this API. */
PARASOL_API void parasol_string_free(char* s);

/* Loading. On success *out receives a handle (release with
 * parasol_manifold_close). On failure *out is NULL and, when diagnostics is
 * non-NULL, *diagnostics receives a JSON document locating the problem. */
PARASOL_API parasol_status parasol_manifold_open(const char* path, parasol_manifold** out,
                                                 char** diagnostics);
PARASOL_API parasol_status parasol_manifold_from_json(const char* text, parasol_manifold** out,
                                                      char** diagnostics);
PARASOL_API parasol_status parasol_manifold_builtin(parasol_manifold** out);
PARASOL_API void parasol_manifold_close(parasol_manifold* m);
PARASOL_API int parasol_manifold_dim(const parasol_manifold* m);

/* The bundled example manifold as canonical file bytes. */
PARASOL_API parasol_status parasol_example_json(char** out_json);

/* Connection selection for the commands below: pass a and b as rational
 * strings ("1", "-2/3", ...) or a preset name ("quarter-symmetric",
 * "schouten-van-kampen", "tanaka-webster", "zamkovoy"). Pass NULL for the
 * arguments not used; with all three NULL the Levi-Civita connection is
 * used (except parasol_theorems, which defaults to zamkovoy). Supplying both
 * explicit parameters and a preset is an error. */

/* Axiom battery: frame invariants, almost-paracontact axioms, LP-Sasakian
 * differential axioms, curvature/Ricci identity suite. */
PARASOL_API parasol_status parasol_verify(const parasol_manifold* m, char** out_json);

PARASOL_API parasol_status parasol_connection(const parasol_manifold* m, const char* a,
                                              const char* b, const char* preset, char** out_json);
PARASOL_API parasol_status parasol_curvature(const parasol_manifold* m, const char* a,
                                             const char* b, const char* preset, char** out_json);
PARASOL_API parasol_status parasol_ricci(const parasol_manifold* m, const char* a, const char* b,
                                         const char* preset, char** out_json);
PARASOL_API parasol_status parasol_scalar(const parasol_manifold* m, const char* a, const char* b,
                                          const char* preset, char** out_json);

/* Generalized eta-Ricci soliton solver. x is "xi" or comma-separated
 * rationals of the frame dimension. */
PARASOL_API parasol_status parasol_soliton(const parasol_manifold* m, const char* x, const char* a,
                                           const char* b, const char* preset, char** out_json);

/* Closed-form audit over a grid_n x grid_n parameter grid (grid_n >= 1;
 * a 5x5 or larger grid certifies the polynomial identities and contains the
 * four presets). threads <= 1 runs serially; output bytes do not depend on
 * the thread count. */
PARASOL_API parasol_status parasol_crosscheck(const parasol_manifold* m, int grid_n,
                                              int include_presets, int threads, char** out_json);

/* Soliton theorem battery at one parameter point. */
PARASOL_API parasol_status parasol_theorems(const parasol_manifold* m, const char* a,
                                            const char* b, const char* preset, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PARASOL_PARASOL_H */
