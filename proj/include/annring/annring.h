#ifndef ANNRING_ANNRING_H
#define ANNRING_ANNRING_H

/* C interface to the annring library. Handles are opaque and owned by the
 * caller; free them with the matching *_free function. Every fallible
 * function returns an annring_status and, on failure, leaves a message for
 * annring_last_error() in the calling thread. Strings returned through a
 * report stay valid until the report is freed; strings returned through a
 * char** are released with annring_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ANNRING_API __declspec(dllexport)
#else
#define ANNRING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum annring_status {
  ANNRING_OK = 0,
  ANNRING_ERR_PARSE = 1,    /* malformed file, message cites line:column */
  ANNRING_ERR_AXIOM = 2,    /* well-formed data violating an axiom */
  ANNRING_ERR_GUARD = 3,    /* a size guard was exceeded */
  ANNRING_ERR_ARGUMENT = 4, /* bad argument, missing file, mismatched inputs */
  ANNRING_ERR_INTERNAL = 5
} annring_status;

typedef enum annring_format { ANNRING_FORMAT_TEXT = 0, ANNRING_FORMAT_TSV = 1 } annring_format;

typedef struct annring_ring annring_ring;
typedef struct annring_module annring_module;
typedef struct annring_esystem annring_esystem;
typedef struct annring_section annring_section;
typedef struct annring_extension annring_extension;
typedef struct annring_report annring_report;

ANNRING_API const char* annring_version(void);
ANNRING_API const char* annring_last_error(void);
ANNRING_API const char* annring_status_name(annring_status s);
ANNRING_API void annring_string_free(char* s);

/* Rings. Presets: "z<n>", "zero<n>", "klein" (zero multiplication on
 * Z/2 x Z/2), "z2xz2", "dual" (Z/2[x]/(x^2)), "trivial". */
ANNRING_API annring_status annring_ring_load(const char* path, annring_ring** out);
ANNRING_API annring_status annring_ring_parse(const char* text, annring_ring** out);
ANNRING_API annring_status annring_ring_preset(const char* name, annring_ring** out);
ANNRING_API void annring_ring_free(annring_ring* r);
ANNRING_API int annring_ring_order(const annring_ring* r);
ANNRING_API int annring_ring_unit(const annring_ring* r); /* -1 when not unital */
ANNRING_API annring_status annring_ring_add(const annring_ring* r, int a, int b, int* out);
ANNRING_API annring_status annring_ring_mul(const annring_ring* r, int a, int b, int* out);
ANNRING_API annring_status annring_ring_write(const annring_ring* r, char** out);

/* Bimodules over a ring. */
ANNRING_API annring_status annring_module_load(const annring_ring* r, const char* path, annring_module** out);
ANNRING_API annring_status annring_module_regular(const annring_ring* r, annring_module** out);
ANNRING_API void annring_module_free(annring_module* m);
ANNRING_API int annring_module_order(const annring_module* m);

/* E-systems, from files, from the built-in corpus, or from crossed
 * bimodule files (converted). */
ANNRING_API annring_status annring_esystem_load(const char* path, annring_esystem** out);
ANNRING_API annring_status annring_esystem_parse(const char* text, annring_esystem** out);
ANNRING_API annring_status annring_esystem_corpus(const char* name, annring_esystem** out);
ANNRING_API size_t annring_corpus_size(void);
ANNRING_API const char* annring_corpus_name(size_t index); /* NULL when out of range */
ANNRING_API void annring_esystem_free(annring_esystem* es);
ANNRING_API int annring_esystem_is_regular(const annring_esystem* es);
ANNRING_API annring_status annring_esystem_write(const annring_esystem* es, char** out);
/* Crossed bimodule file text; ANNRING_ERR_AXIOM for a non-regular E-system. */
ANNRING_API annring_status annring_esystem_write_crossed(const annring_esystem* es, char** out);

/* Sections of an E-system. greatest = 0 picks least representatives and
 * preimages, anything else the greatest ones. */
ANNRING_API annring_status annring_section_load(const annring_esystem* es, const char* path, annring_section** out);
ANNRING_API annring_status annring_section_choose(const annring_esystem* es, int greatest, annring_section** out);
ANNRING_API void annring_section_free(annring_section* s);

/* Extensions. */
ANNRING_API annring_status annring_extension_load(const char* path, annring_extension** out);
ANNRING_API void annring_extension_free(annring_extension* e);
ANNRING_API int annring_extension_order(const annring_extension* e);
ANNRING_API annring_status annring_extension_write(const annring_extension* e, const char* name, char** out);

/* Reports. positive is 0 when a check failed or the answer is "no". */
ANNRING_API void annring_report_free(annring_report* r);
ANNRING_API const char* annring_report_render(annring_report* r, annring_format f);
ANNRING_API int annring_report_positive(const annring_report* r);
/* Extensions carried by a report (classes of ext enumerate, a raw search
 * hit). The returned handle is a copy owned by the caller. */
ANNRING_API size_t annring_report_extension_count(const annring_report* r);
ANNRING_API annring_status annring_report_extension(const annring_report* r, size_t index, annring_extension** out);

/* Validation of a file of the given kind: "ring", "module" (aux = ring
 * file), "esystem", "crossed", "section" (aux = E-system file) or
 * "extension". Axiom violations give ANNRING_OK with a negative report;
 * parse errors give ANNRING_ERR_PARSE. */
ANNRING_API annring_status annring_validate_file(const char* kind, const char* path, const char* aux,
                                                 annring_report** out);
/* E-system file to crossed bimodule file and back; the report renders as
 * the converted file. Non-regular input gives a negative report. */
ANNRING_API annring_status annring_convert_file(const char* path, annring_report** out);

/* guard <= 0 selects the library default. psi is "id" or "u:x,..." pairs
 * over the elements of q; q == NULL means q = Coker d. */
ANNRING_API annring_status annring_describe_esystem(const annring_esystem* es, annring_report** out);
ANNRING_API annring_status annring_bimult_enumerate(const annring_ring* r, annring_report** out);
ANNRING_API annring_status annring_anncat_check(const annring_esystem* es, annring_report** out);
ANNRING_API annring_status annring_anncat_reduce(const annring_esystem* es, const annring_section* s,
                                                 annring_report** out);
ANNRING_API annring_status annring_cohom_h2(const annring_module* m, long long guard, annring_report** out);
ANNRING_API annring_status annring_cohom_complex(const annring_module* m, uint64_t seed, int trials, long long guard,
                                                 annring_report** out);
ANNRING_API annring_status annring_cohom_obstruct(const annring_esystem* es, const annring_ring* q, const char* psi,
                                                  long long guard, annring_report** out);
ANNRING_API annring_status annring_ext_enumerate(const annring_esystem* es, const annring_ring* q, const char* psi,
                                                 long long guard, annring_report** out);
ANNRING_API annring_status annring_ext_search(const annring_esystem* es, const annring_ring* q, const char* psi,
                                              annring_report** out);
ANNRING_API annring_status annring_ext_equivalent(const annring_extension* a, const annring_extension* b,
                                                  long long guard, annring_report** out);
ANNRING_API annring_status annring_corpus_report(annring_report** out);
/* Writes <dir>/<name>.esys for every corpus entry. */
ANNRING_API annring_status annring_corpus_export(const char* dir);

#ifdef __cplusplus
}
#endif

#endif
