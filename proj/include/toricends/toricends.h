/* C interface to the toric ends library. Strings returned through char**
   out-parameters are owned by the caller and released with tt_string_free. */
#ifndef TORICENDS_H
#define TORICENDS_H

#include <stddef.h>

#if defined(TORICENDS_BUILDING_LIBRARY)
#define TT_API __attribute__((visibility("default")))
#else
#define TT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..16 match the library's error codes. */
typedef enum tt_status {
  TT_OK = 0,
  TT_INVALID_ARGUMENT = 1,
  TT_PARSE = 2,
  TT_DEGENERATE_TARGET = 3,
  TT_MALFORMED_PATH = 4,
  TT_COVERAGE_MISMATCH = 5,
  TT_ILLEGAL_TAIL = 6,
  TT_INCOMPARABLE_TARGETS = 7,
  TT_INSUFFICIENT_BLOCKS = 8,
  TT_VALIDATION = 9,
  TT_DIVERGENT_NET = 10,
  TT_NO_REALIZED_POINT = 11,
  TT_ATTAINED_ZERO_SLOPE = 12,
  TT_MIXED_ROTATIVITY = 13,
  TT_INFINITE_BLOCK = 14,
  TT_HORIZON_EXCEEDED = 15,
  TT_NO_DIVISION_ONE_TORUS = 16,
  TT_INTERNAL = 100
} tt_status;

typedef enum tt_format { TT_FORMAT_STRUCTURED = 0, TT_FORMAT_HUMAN = 1 } tt_format;

typedef enum tt_equivalence { TT_DISTINCT = 0, TT_EQUIVALENT = 1, TT_UNDECIDED = 2 } tt_equivalence;

typedef struct tt_path tt_path;
typedef struct tt_end tt_end;
typedef struct tt_invariant tt_invariant;

typedef struct tt_job_options {
  size_t horizon;
  tt_format format;
  size_t family_cap;
  size_t period_search;
} tt_job_options;

TT_API const char* tt_version(void);
TT_API const char* tt_status_name(tt_status status);
/* Message of the last failure on this thread, or "". */
TT_API const char* tt_last_error(void);
TT_API void tt_string_free(char* s);

/* Slopes are "p/q", "p" or "inf"; targets are JSON target documents. */
TT_API tt_status tt_path_create(const char* start, const char* target_json, tt_path** out);
TT_API tt_status tt_path_extend(tt_path* path, size_t n);
TT_API size_t tt_path_size(const tt_path* path);
TT_API tt_status tt_path_vertex(const tt_path* path, size_t i, char** out);
/* {"blocks": [...]} for the current prefix. */
TT_API tt_status tt_path_blocks_json(const tt_path* path, char** out);
TT_API void tt_path_free(tt_path* path);

TT_API tt_status tt_end_parse(const char* json, tt_end** out);
/* TT_OK when valid; otherwise TT_VALIDATION and a JSON array of violations. */
TT_API tt_status tt_end_validate(const tt_end* end, char** violations_json);
TT_API tt_status tt_end_classify(const tt_end* end, size_t horizon, tt_invariant** out);
TT_API void tt_end_free(tt_end* end);

TT_API tt_status tt_invariant_parse(const char* json, tt_invariant** out);
TT_API tt_status tt_invariant_to_json(const tt_invariant* inv, char** out);
TT_API tt_status tt_invariant_equivalent(const tt_invariant* a, const tt_invariant* b, size_t horizon,
                                         tt_equivalence* out);
/* {"verdict": ..., "reason": ..., "horizon": n} */
TT_API tt_status tt_invariant_extension(const tt_invariant* inv, size_t horizon, char** out);
TT_API void tt_invariant_free(tt_invariant* inv);

TT_API tt_job_options tt_job_options_default(void);
/* Runs a CLI command on a JSON document. Returns TT_OK whenever the job ran;
   exit_code is 0, 1 (validation or domain error) or 2 (malformed input).
   error_text may be NULL. */
TT_API tt_status tt_run(const char* command, const char* input, const tt_job_options* options, char** output,
                        char** error_text, int* exit_code);
TT_API tt_status tt_run_batch(const char* input, const tt_job_options* options, char** output, char** error_text,
                              int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
