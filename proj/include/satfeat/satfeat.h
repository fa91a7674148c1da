/* satfeat C API. All functions are thread-safe on distinct handles; the
   last-error string is per thread. Returned strings from *_write / *_json
   must be released with satfeat_string_free. */
#ifndef SATFEAT_SATFEAT_H
#define SATFEAT_SATFEAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SATFEAT_API __declspec(dllexport)
#else
#define SATFEAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum satfeat_status {
    SATFEAT_OK = 0,
    SATFEAT_ERR_PARSE = 1,
    SATFEAT_ERR_IO = 2,
    SATFEAT_ERR_INVALID_ARGUMENT = 3,
    SATFEAT_ERR_UNKNOWN_SET = 4,
    SATFEAT_ERR_INTERNAL = 5
} satfeat_status;

typedef enum satfeat_vector_status {
    SATFEAT_VECTOR_OK = 0,
    SATFEAT_VECTOR_SOLVED_BY_PREPROCESSING = 1,
    SATFEAT_VECTOR_TIMEOUT = 2,
    SATFEAT_VECTOR_ERROR = 3
} satfeat_vector_status;

typedef enum satfeat_preprocess { SATFEAT_PREPROCESS_NONE = 0, SATFEAT_PREPROCESS_BASIC = 1 } satfeat_preprocess;
typedef enum satfeat_ls_algorithm { SATFEAT_LS_SAPS = 0, SATFEAT_LS_GSAT = 1 } satfeat_ls_algorithm;

typedef struct satfeat_cnf satfeat_cnf;
typedef struct satfeat_vector satfeat_vector;

typedef struct satfeat_config {
    uint64_t seed;
    int32_t ls_runs;
    int32_t ls_cutoff;
    int32_t dpll_probes;
    int32_t probe_budget_ms; /* 0 = unlimited */
    int32_t preprocess;      /* satfeat_preprocess */
    int32_t preprocess_all;  /* nonzero: ANT/ALF also see the preprocessed formula */
    int32_t ls_algorithm;    /* satfeat_ls_algorithm */
} satfeat_config;

SATFEAT_API const char* satfeat_version(void);
/* Message for the last failing call on this thread ("" if none). */
SATFEAT_API const char* satfeat_last_error(void);
SATFEAT_API void satfeat_string_free(char* s);

SATFEAT_API void satfeat_config_init(satfeat_config* config);

SATFEAT_API satfeat_status satfeat_cnf_parse(const char* text, size_t len, satfeat_cnf** out);
SATFEAT_API satfeat_status satfeat_cnf_read_file(const char* path, satfeat_cnf** out);
SATFEAT_API void satfeat_cnf_free(satfeat_cnf* cnf);
SATFEAT_API uint32_t satfeat_cnf_num_vars(const satfeat_cnf* cnf);
SATFEAT_API size_t satfeat_cnf_num_clauses(const satfeat_cnf* cnf);
SATFEAT_API satfeat_status satfeat_cnf_write(const satfeat_cnf* cnf, char** text, size_t* len);

/* Generated formula as labelled DIMACS text; family is random-ksat,
   pigeonhole or graph-coloring. For pigeonhole `n` is the hole count; for
   graph-coloring `k` is the color count and `param` the edge probability; for
   random-ksat `param` is the clause/variable ratio. */
SATFEAT_API satfeat_status satfeat_generate(const char* family, uint32_t n, uint32_t k, double param, uint64_t seed,
                                            char** text, size_t* len);

SATFEAT_API satfeat_status satfeat_set_arity(const char* set, size_t* arity);
/* Name of the index-th feature of `set`; the pointer stays valid for the process lifetime. */
SATFEAT_API satfeat_status satfeat_feature_name(const char* set, size_t index, const char** name);
SATFEAT_API satfeat_status satfeat_manifest_json(char** text, size_t* len);

SATFEAT_API satfeat_status satfeat_extract(const satfeat_cnf* cnf, const char* set, const satfeat_config* config,
                                           satfeat_vector** out);
SATFEAT_API void satfeat_vector_free(satfeat_vector* v);
SATFEAT_API satfeat_vector_status satfeat_vector_status_of(const satfeat_vector* v);
SATFEAT_API size_t satfeat_vector_size(const satfeat_vector* v);
/* Returns 1 and stores the value when slot `index` holds one, else 0. */
SATFEAT_API int satfeat_vector_value(const satfeat_vector* v, size_t index, double* value);
SATFEAT_API const char* satfeat_vector_diagnostic(const satfeat_vector* v);
SATFEAT_API size_t satfeat_vector_timing_count(const satfeat_vector* v);
SATFEAT_API satfeat_status satfeat_vector_timing(const satfeat_vector* v, size_t index, const char** stage,
                                                 double* seconds);

/* Edge list ("u v w" lines) of a named formula graph: vcg vg vig cvig cv_pos
   cv_neg variables clauses resolution big and band exo. */
SATFEAT_API satfeat_status satfeat_dump_graph(const satfeat_cnf* cnf, const char* graph, char** text, size_t* len);

#ifdef __cplusplus
}
#endif

#endif
