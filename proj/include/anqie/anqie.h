/* Copyright 2026 The anqie Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libanqie.
 *
 * Handles are opaque and immutable; free them with the matching *_free.
 * Every function returns an anqie_status; on failure the message is
 * available from anqie_last_error() on the same thread until the next call.
 * Strings returned through char** are heap allocated and must be released
 * with anqie_string_free. Structured results are JSON documents.
 */

#ifndef ANQIE_ANQIE_H_
#define ANQIE_ANQIE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ANQIE_API __declspec(dllexport)
#else
#define ANQIE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum anqie_status {
  ANQIE_OK = 0,
  ANQIE_INVALID_ARG = 1, /* precondition violated */
  ANQIE_PARSE = 2,       /* malformed input data */
  ANQIE_IO = 3,          /* file could not be read or written */
  ANQIE_DATA = 4,        /* well-formed data the operation cannot use */
  ANQIE_INTERNAL = 5
} anqie_status;

typedef struct anqie_symseq anqie_symseq; /* finite-range sequence */
typedef struct anqie_numseq anqie_numseq; /* bounded complex sequence */

ANQIE_API const char* anqie_version(void);
ANQIE_API const char* anqie_last_error(void);
ANQIE_API void anqie_string_free(char* s);

ANQIE_API void anqie_symseq_free(anqie_symseq* seq);
ANQIE_API void anqie_numseq_free(anqie_numseq* seq);

/* Construction and access. */
ANQIE_API anqie_status anqie_symseq_from_ints(const int64_t* values, size_t n,
                                              anqie_symseq** out);
ANQIE_API anqie_status anqie_numseq_from_complex(const double* re, const double* im,
                                                 size_t n, anqie_numseq** out);
ANQIE_API size_t anqie_symseq_size(const anqie_symseq* seq);
ANQIE_API size_t anqie_symseq_alphabet_size(const anqie_symseq* seq);
ANQIE_API size_t anqie_numseq_size(const anqie_numseq* seq);
/* Copies min(cap, size) symbol indices. */
ANQIE_API anqie_status anqie_symseq_symbols(const anqie_symseq* seq, uint32_t* out,
                                            size_t cap);
/* [{"index":i,"label":...}] */
ANQIE_API anqie_status anqie_symseq_alphabet_json(const anqie_symseq* seq, char** json);
/* Integer labels become reals; string labels are a DATA error. */
ANQIE_API anqie_status anqie_symseq_to_numseq(const anqie_symseq* seq, anqie_numseq** out);
/* {"n","bound","real"} */
ANQIE_API anqie_status anqie_numseq_summary_json(const anqie_numseq* seq, char** json);

/* Files. format is "tokens", "csv-complex" or "raw-bytes"; NULL picks by
 * extension (.csv, .bin/.bytes, otherwise tokens). Exactly one of the
 * outputs is set. meta_json (may be NULL) is stored in the sidecar. */
ANQIE_API anqie_status anqie_load(const char* path, const char* format,
                                  anqie_symseq** sym_out, anqie_numseq** num_out);
ANQIE_API anqie_status anqie_save_symseq(const anqie_symseq* seq, const char* path,
                                         const char* format, const char* meta_json);
ANQIE_API anqie_status anqie_save_numseq(const anqie_numseq* seq, const char* path,
                                         const char* meta_json);

/* Generator spec as JSON, e.g. {"kind":"sturmian","n":1000}. Exactly one of
 * the outputs is set. resolved_json (may be NULL) receives the full spec. */
ANQIE_API anqie_status anqie_generate(const char* spec_json, anqie_symseq** sym_out,
                                      anqie_numseq** num_out, char** resolved_json);

ANQIE_API anqie_status anqie_shift(const anqie_symseq* seq, size_t k, anqie_symseq** out);
/* Product-alphabet sequence with "(a,b,...)" labels. */
ANQIE_API anqie_status anqie_joint(const anqie_symseq* const* seqs, size_t count,
                                   anqie_symseq** out);

/* Block counting and entropy. m_max == 0 selects the default. */
ANQIE_API anqie_status anqie_count_sliding(const anqie_symseq* seq, size_t m, uint64_t* out);
ANQIE_API anqie_status anqie_count_regular(const anqie_symseq* seq, size_t m, uint64_t* out);
ANQIE_API anqie_status anqie_profile_json(const anqie_symseq* seq, size_t m_max, char** json);
ANQIE_API anqie_status anqie_profile_csv(const anqie_symseq* seq, size_t m_max, char** csv);
/* units: "nats" or "bits". */
ANQIE_API anqie_status anqie_entropy_json(const anqie_symseq* seq, size_t m_max,
                                          double min_coverage, const char* units,
                                          char** json);
ANQIE_API anqie_status anqie_zigzag_lower_bound(unsigned m, double* out);
ANQIE_API anqie_status anqie_zigzag_map(double x, double* out);

/* Quantization. Codebooks travel as {"epsilon","centers":[{"re","im"}]}. */
ANQIE_API anqie_status anqie_build_codebook(const anqie_numseq* values, double epsilon,
                                            char** codebook_json);
ANQIE_API anqie_status anqie_quantize(const anqie_numseq* values, const char* codebook_json,
                                      anqie_symseq** out);
/* max_n |values[n] - label(approx[n])|; approx labels must be numeric. */
ANQIE_API anqie_status anqie_sup_distance(const anqie_numseq* values, const anqie_symseq* approx,
                                          double* out);
/* info: {"codebook","patterns","candidates","sup_distance"} */
ANQIE_API anqie_status anqie_implify(const anqie_numseq* values, double epsilon, size_t t,
                                     anqie_symseq** out, char** info_json);
/* stages == 0 runs the whole schedule. info: {"codebook","stages":[...]} */
ANQIE_API anqie_status anqie_implify_staged(const anqie_numseq* values, double epsilon,
                                            const size_t* schedule, size_t schedule_len,
                                            size_t stages, anqie_symseq** out,
                                            char** info_json);
/* info: {"patterns","mask_blocks"} */
ANQIE_API anqie_status anqie_separate(const anqie_numseq* values, double a, double b,
                                      size_t t, anqie_symseq** out, char** info_json);

/* Laws. law is one of "joint", "pointwise", "shift", "levelset", "recode",
 * "concatenation", "independence"; g is used by the pairwise laws.
 * params_json (may be NULL): {"op":..., "k":..., "label":...}. */
ANQIE_API anqie_status anqie_law_json(const char* law, const anqie_symseq* f,
                                      const anqie_symseq* g, size_t m_max,
                                      const char* params_json, char** verdict_json);
/* config_json NULL runs the built-in battery. Output:
 * {"config":{...},"verdicts":[...]}; *all_hold is 1 iff no exact law failed. */
ANQIE_API anqie_status anqie_law_suite(const char* config_json, char** result_json,
                                       int* all_hold);

/* Weyl sums for generated points. lattice holds lattice_count vectors of the
 * point dimension, row-major; NULL selects all nonzero vectors with sup norm
 * <= lattice_bound. Output: {"max","argmax","vectors":[{"l","modulus"}]} */
ANQIE_API anqie_status anqie_weyl(const char* kind, double theta, size_t count,
                                  const int64_t* lattice, size_t lattice_count,
                                  int64_t lattice_bound, char** json);

#ifdef __cplusplus
}
#endif

#endif /* ANQIE_ANQIE_H_ */
