/* C interface to the gdifs library. Every function is safe to call from any
 * thread; handles are immutable once created. Strings returned through char**
 * are owned by the caller and released with gdifs_string_free. */
#ifndef GDIFS_H
#define GDIFS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(GDIFS_BUILDING_LIBRARY)
#define GDIFS_API __attribute__((visibility("default")))
#else
#define GDIFS_API
#endif

typedef struct gdifs_ifs gdifs_ifs;

typedef enum gdifs_status {
  GDIFS_OK = 0,
  GDIFS_INVALID_INPUT,
  GDIFS_INVALID_ARGUMENT,
  GDIFS_NOT_STRONGLY_CONNECTED,
  GDIFS_OUT_DEGREE_TOO_SMALL,
  GDIFS_RATIO_OUT_OF_RANGE,
  GDIFS_REFLECTION_NOT_SUPPORTED,
  GDIFS_DUPLICATE_EDGE_ID,
  GDIFS_SUM_NOT_ONE,
  GDIFS_NON_POSITIVE_PARAMETER,
  GDIFS_CSSC_VIOLATED,
  GDIFS_NOT_CANONICAL_FAMILY,
  GDIFS_NOT_AT_EIGENVALUE_ONE,
  GDIFS_BRACKET_FAILURE,
  GDIFS_NOT_CERTIFIED,
  GDIFS_DIMENSION_AT_ONE,
  GDIFS_INTERVAL_OUTSIDE_HULL,
  GDIFS_ZERO_LENGTH_INTERVAL,
  GDIFS_NOT_ONE_VERTEX,
  GDIFS_BD_MISMATCH,
  GDIFS_NON_POSITIVE,
  GDIFS_CONTAINS_ONE,
  GDIFS_GENERATOR_NOT_CONTRACTING,
  GDIFS_FACTOR_TOO_LARGE,
  GDIFS_NOT_APPLICABLE,
  GDIFS_LEVEL_TOO_DEEP,
  GDIFS_INTERNAL
} gdifs_status;

typedef enum gdifs_verdict {
  GDIFS_NOT_ONE_VERTEX_ATTRACTOR = 0,
  GDIFS_NOT_ONE_VERTEX_ATTRACTOR_UNDER_CSSC = 1,
  GDIFS_INCONCLUSIVE = 2,
  GDIFS_VERDICT_NOT_APPLICABLE = 3
} gdifs_verdict;

typedef enum gdifs_check { GDIFS_CHECK_HOLDS = 0, GDIFS_CHECK_FAILS = 1, GDIFS_CHECK_BOUNDARY = 2 } gdifs_check;

typedef enum gdifs_cert_status {
  GDIFS_CERTIFIED = 0,
  GDIFS_FAILED_CONDITION = 1,
  GDIFS_CERT_INCONCLUSIVE = 2
} gdifs_cert_status;

typedef struct gdifs_certification {
  gdifs_cert_status status;
  int failed_condition; /* 1..3, or 0 */
  double s;
  int cond1_holds;
  double cond2_value;
  gdifs_check cond2;
  double cond3_value;
  gdifs_check cond3;
  int has_measures;
  double measure_u;
  double measure_v;
} gdifs_certification;

typedef enum gdifs_format { GDIFS_FORMAT_TEXT = 0, GDIFS_FORMAT_MACHINE = 1 } gdifs_format;

typedef struct gdifs_run_options {
  gdifs_format format;
  int depth;                  /* < 0: command default */
  const char* cutoff;         /* "p/q" or NULL */
  double tol;
  int levels;
  const char* out_path;       /* NULL: SVG goes to the output string */
  size_t vertex;
  const char* interval_lo;    /* both or neither */
  const char* interval_hi;
} gdifs_run_options;

/* Message of the last failure on the calling thread; never NULL. */
GDIFS_API const char* gdifs_last_error(void);
GDIFS_API const char* gdifs_status_name(gdifs_status status);
GDIFS_API void gdifs_string_free(char* s);

GDIFS_API gdifs_status gdifs_parse(const char* text, gdifs_ifs** out);
GDIFS_API gdifs_status gdifs_load(const char* path, gdifs_ifs** out);
GDIFS_API gdifs_status gdifs_canonical(const char* a, const char* g_u, const char* b, const char* c,
                                       const char* g_v, const char* d, gdifs_ifs** out);
GDIFS_API void gdifs_free(gdifs_ifs* ifs);

GDIFS_API size_t gdifs_vertex_count(const gdifs_ifs* ifs);
GDIFS_API gdifs_status gdifs_emit(const gdifs_ifs* ifs, char** document);

/* Writes s and, when h is not NULL, min(h_len, vertex count) eigenvector entries. */
GDIFS_API gdifs_status gdifs_dimension(const gdifs_ifs* ifs, double tol, double* s, double* h, size_t h_len);
GDIFS_API gdifs_status gdifs_cssc(const gdifs_ifs* ifs, int* holds);
GDIFS_API gdifs_status gdifs_certify(const gdifs_ifs* ifs, gdifs_certification* out);
/* document may be NULL; otherwise receives the machine-format certificate. */
GDIFS_API gdifs_status gdifs_classify(const gdifs_ifs* ifs, size_t vertex, gdifs_verdict* verdict,
                                      char** document);

GDIFS_API void gdifs_run_options_init(gdifs_run_options* options);
/* Runs a CLI command and returns its exit code (0, 1, 2 or 3). output and error
 * may be NULL; otherwise they receive the report and the diagnostic. */
GDIFS_API int gdifs_run(const char* command, const gdifs_ifs* ifs, const gdifs_run_options* options,
                        char** output, char** error);

#ifdef __cplusplus
}
#endif

#endif /* GDIFS_H */
