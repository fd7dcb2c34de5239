/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SUBLAT_SUBLAT_H
#define SUBLAT_SUBLAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SUBLAT_BUILDING)
#define SUBLAT_API __declspec(dllexport)
#else
#define SUBLAT_API __declspec(dllimport)
#endif
#else
#define SUBLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sublat_status {
    SUBLAT_OK = 0,
    SUBLAT_INVALID_ARGUMENT = 1,
    SUBLAT_SYNTAX = 2,
    SUBLAT_SIZE_MISMATCH = 3,
    SUBLAT_UNKNOWN_LABEL = 4,
    SUBLAT_MALFORMED_CONSTRAINT = 5,
    SUBLAT_UNTERMINATED_JOB = 6,
    SUBLAT_UNKNOWN_COMMAND = 7,
    SUBLAT_EMPTY_SUBSET = 8,
    SUBLAT_UNIVERSE_TOO_LARGE = 9,
    SUBLAT_TOO_LARGE = 10,
    SUBLAT_NOT_A_LATTICE = 11,
    SUBLAT_CYCLIC_COVERS = 12,
    SUBLAT_NOT_TRANSCRIBED = 13,
    SUBLAT_CATALOG_INCOMPLETE = 14,
    SUBLAT_IO = 15,
    SUBLAT_INTERNAL = 16
} sublat_status;

typedef struct sublat_script sublat_script;
typedef struct sublat_report sublat_report;
typedef struct sublat_verification sublat_verification;
typedef struct sublat_lattice sublat_lattice;
typedef struct sublat_algebra sublat_algebra;

/* Errors. The message and location describe the last failing call on the
   calling thread. */
SUBLAT_API const char* sublat_status_name(sublat_status status);
SUBLAT_API const char* sublat_last_error(void);
/* 1-based; both 0 when the error has no source position. */
SUBLAT_API void sublat_last_error_location(size_t* line, size_t* column);

/* Strings returned through char** are owned by the caller. */
SUBLAT_API void sublat_string_free(char* s);

SUBLAT_API const char* sublat_version(void);

/* Batch scripts. */
SUBLAT_API sublat_status sublat_script_parse(const char* text, size_t length, sublat_script** out);
SUBLAT_API sublat_status sublat_script_parse_file(const char* path, sublat_script** out);
SUBLAT_API size_t sublat_script_job_count(const sublat_script* script);
SUBLAT_API sublat_status sublat_script_job_name(const sublat_script* script, size_t index, char** out);
/* A batch file that parses back to the same jobs. */
SUBLAT_API sublat_status sublat_script_render(const sublat_script* script, char** out);
SUBLAT_API void sublat_script_free(sublat_script* script);

/* job_threads: jobs evaluated at once; count_threads: threads per count
   (0 = hardware concurrency). Results are always in input order. */
SUBLAT_API sublat_status sublat_script_run(const sublat_script* script, unsigned job_threads,
                                           unsigned count_threads, sublat_report** out);
SUBLAT_API size_t sublat_report_job_count(const sublat_report* report);
/* Two lines per job, as in the batch program's output files. */
SUBLAT_API sublat_status sublat_report_text(const sublat_report* report, char** out);
/* One JSON object per line. */
SUBLAT_API sublat_status sublat_report_json(const sublat_report* report, char** out);
/* Decimal strings for job `index`. */
SUBLAT_API sublat_status sublat_report_sub_count(const sublat_report* report, size_t index, char** out);
SUBLAT_API sublat_status sublat_report_sigma(const sublat_report* report, size_t index, char** out);
SUBLAT_API void sublat_report_free(sublat_report* report);

/* threshold: "83", "82.5", "331/4" or "166*2^-1"; NULL means 83. */
SUBLAT_API sublat_status sublat_report_verify(const sublat_report* report, const char* threshold,
                                              sublat_verification** out);
SUBLAT_API size_t sublat_verification_job_count(const sublat_verification* v);
SUBLAT_API int sublat_verification_all_excluded(const sublat_verification* v);
SUBLAT_API size_t sublat_verification_offender_count(const sublat_verification* v);
SUBLAT_API sublat_status sublat_verification_offender(const sublat_verification* v, size_t index, char** out);
SUBLAT_API sublat_status sublat_verification_max_sigma(const sublat_verification* v, char** out);
/* One line, e.g. "13 jobs, all <= 83 (max sigma 83)". */
SUBLAT_API sublat_status sublat_verification_summary(const sublat_verification* v, char** out);
SUBLAT_API void sublat_verification_free(sublat_verification* v);

/* Partial algebras. `constraints` holds tokens like "a+b=c" separated by
   spaces or commas; `op_symbols` NULL means "+*". */
SUBLAT_API sublat_status sublat_algebra_create(const char* labels, const char* constraints, const char* op_symbols,
                                               sublat_algebra** out);
SUBLAT_API size_t sublat_algebra_size(const sublat_algebra* alg);
SUBLAT_API sublat_status sublat_algebra_count(const sublat_algebra* alg, unsigned threads, char** out);
SUBLAT_API sublat_status sublat_algebra_sigma(const sublat_algebra* alg, int64_t subtrahend, char** out);
/* mask has bit i set for element i. */
SUBLAT_API sublat_status sublat_algebra_is_closed(const sublat_algebra* alg, uint64_t mask, int* closed);
SUBLAT_API void sublat_algebra_free(sublat_algebra* alg);

/* Lattices, in the text format
     elements: oabi
     covers: oa ob ai bi
   where "xy" means y covers x. */
SUBLAT_API sublat_status sublat_lattice_parse(const char* text, sublat_lattice** out);
SUBLAT_API sublat_status sublat_lattice_from_covers(const char* labels, const char* covers, sublat_lattice** out);
SUBLAT_API size_t sublat_lattice_size(const sublat_lattice* lattice);
SUBLAT_API sublat_status sublat_lattice_text(const sublat_lattice* lattice, char** out);
SUBLAT_API sublat_status sublat_lattice_full_algebra(const sublat_lattice* lattice, sublat_algebra** out);
/* |Sub(L)| - 1, as a decimal string. */
SUBLAT_API sublat_status sublat_lattice_count_sublattices(const sublat_lattice* lattice, char** out);
SUBLAT_API sublat_status sublat_lattice_sigma(const sublat_lattice* lattice, char** out);
SUBLAT_API sublat_status sublat_lattice_sigma_exceeds(const sublat_lattice* lattice, const char* threshold,
                                                      int* exceeds);
/* planar is set to 1 or 0. When 0 and certificate is non-NULL, it receives
   a description such as "F_0: o->o i->i a->a ...". */
SUBLAT_API sublat_status sublat_lattice_is_planar(const sublat_lattice* lattice, int* planar, char** certificate);
SUBLAT_API sublat_status sublat_lattice_dual(const sublat_lattice* lattice, sublat_lattice** out);
SUBLAT_API void sublat_lattice_free(sublat_lattice* lattice);

/* Catalog names: "A 0", "A_0", "B", "dual E 1", "F0", "K5", "fence8", ... */
SUBLAT_API sublat_status sublat_kr_text(const char* name, char** out);
SUBLAT_API sublat_status sublat_kr_lattice(const char* name, sublat_lattice** out);

/* F_0 with a chain of n - 9 elements on top. */
SUBLAT_API sublat_status sublat_sharpness_witness(size_t n, sublat_lattice** out);
SUBLAT_API sublat_status sublat_random_lattice(size_t n_hint, uint64_t seed, sublat_lattice** out);

#ifdef __cplusplus
}
#endif

#endif
