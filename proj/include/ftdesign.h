#ifndef FTDESIGN_H
#define FTDESIGN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FTD_API __declspec(dllexport)
#elif defined(FTD_BUILDING_LIBRARY)
#  define FTD_API __attribute__((visibility("default")))
#else
#  define FTD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns one of these. Output parameters are written only on FTD_OK. */
typedef enum ftd_status
{
  FTD_OK = 0,
  FTD_INVALID_ARGUMENT = 1,
  FTD_PARSE_ERROR = 2,
  FTD_NOT_A_DESIGN = 3,
  FTD_NOT_AN_AUTOMORPHISM = 4,
  FTD_BUDGET_EXHAUSTED = 5,
  FTD_IO_ERROR = 6,
  FTD_INTERNAL = 7
} ftd_status;

typedef enum ftd_format
{
  FTD_FORMAT_TABLE = 0,
  FTD_FORMAT_CSV = 1,
  FTD_FORMAT_JSON = 2
} ftd_format;

typedef struct ftd_design ftd_design;
typedef struct ftd_group ftd_group;

typedef struct ftd_params
{
  size_t v, b, k, r, lambda;
  int symmetric;
} ftd_params;

/* Message of the last failure on the calling thread; never NULL. */
FTD_API const char *ftd_last_error(void);

FTD_API const char *ftd_version(void);

/* Strings handed out by the library are released with this. */
FTD_API void ftd_string_free(char *s);

/* FNV-1a, 64 bit. */
FTD_API uint64_t ftd_checksum(const char *bytes, size_t length);

/* Checksum of the embedded generator and base block strings. */
FTD_API uint64_t ftd_embedded_data_checksum(void);

/* Caps internal parallelism; 0 means the default. */
FTD_API ftd_status ftd_set_threads(unsigned threads);

/* Reads a whole file, or standard input for "-". */
FTD_API ftd_status ftd_read_file(const char *path, char **text);

/* --- designs --- */

/* {"v": n, "blocks": [[1-based points], ...]} */
FTD_API ftd_status ftd_design_from_json(const char *json, ftd_design **out);
FTD_API ftd_status ftd_design_to_json(const ftd_design *d, char **json);
FTD_API void ftd_design_free(ftd_design *d);
FTD_API size_t ftd_design_points(const ftd_design *d);
FTD_API size_t ftd_design_blocks(const ftd_design *d);

/* *is_design tells whether d is a 2-design; *message is the description or the violation. */
FTD_API ftd_status ftd_design_verify(const ftd_design *d, int *is_design, ftd_params *params,
                                     char **message);
FTD_API ftd_status ftd_design_complement(const ftd_design *d, ftd_design **out);

/* --- groups --- */

/* "degree n" then one generator per line in cycle notation; '#' comments. */
FTD_API ftd_status ftd_group_from_text(const char *text, ftd_group **out);
FTD_API ftd_status ftd_group_to_text(const ftd_group *g, char **text);
FTD_API void ftd_group_free(ftd_group *g);
/* Decimal order. */
FTD_API ftd_status ftd_group_order(const ftd_group *g, char **order);
FTD_API ftd_status ftd_group_is_flag_transitive(const ftd_group *g, const ftd_design *d, int *result);

/* --- isomorphism --- */

/* node_limit 0 means unlimited. */
FTD_API ftd_status ftd_automorphism_group(const ftd_design *d, size_t node_limit, ftd_group **out);
/* *witness is the point map in cycle notation when isomorphic, otherwise NULL. */
FTD_API ftd_status ftd_are_isomorphic(const ftd_design *a, const ftd_design *b, size_t node_limit,
                                      int *isomorphic, char **witness);

/* --- decomposition --- */

FTD_API ftd_status ftd_block_system_count(const ftd_group *g, size_t *count);
/* Decomposition along the system-th (0-based) minimal block system of g. */
FTD_API ftd_status ftd_decompose(const ftd_design *d, const ftd_group *g, size_t system,
                                 ftd_format format, char **report);

/* --- enumeration --- */

FTD_API ftd_status ftd_enumerate(int symmetric_only, long vmax, ftd_format format, char **out);

/* --- catalog --- */

/* One name per line. */
FTD_API ftd_status ftd_catalog_names(char **names);
FTD_API ftd_status ftd_construct(const char *name, ftd_design **design, ftd_group **group);
FTD_API ftd_status ftd_run_claims(const char *name, size_t node_limit, int *passed, char **report);
/* claim is "45-12-3" or "96-20-4". */
FTD_API ftd_status ftd_check_external(const ftd_design *d, const char *claim, int *passed,
                                      char **report);

/* --- difference sets; g must act regularly for check and develop --- */

FTD_API ftd_status ftd_diffset_check(const ftd_group *g, const char *subset, size_t lambda,
                                     int *is_difference_set, char **report);
FTD_API ftd_status ftd_diffset_develop(const ftd_group *g, const char *subset, ftd_design **out);
/* *report lists each subgroup found as a generator file; *exhausted is set when the budget ran out. */
FTD_API ftd_status ftd_regular_subgroups(const ftd_group *g, size_t limit, size_t budget,
                                         size_t *found, int *exhausted, char **report);

#ifdef __cplusplus
}
#endif

#endif
