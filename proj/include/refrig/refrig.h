#ifndef REFRIG_REFRIG_H
#define REFRIG_REFRIG_H

/* C interface to the reflection-rigidity library. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * refrig_string_free. Every call reports failure through its status; the
 * message of the latest failure on the calling thread is refrig_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(REFRIG_BUILDING_LIBRARY)
#define REFRIG_API __attribute__((visibility("default")))
#else
#define REFRIG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct refrig_graph refrig_graph;

typedef enum refrig_status {
  REFRIG_OK = 0,
  REFRIG_ERR_PARSE = 1,
  REFRIG_ERR_INVALID_ARGUMENT = 2,
  REFRIG_ERR_PRECONDITION = 3,
  REFRIG_ERR_RETRIES_EXHAUSTED = 4,
  REFRIG_ERR_GENERATION_FAILED = 5,
  REFRIG_ERR_IO = 6,
  REFRIG_ERR_INTERNAL = 7
} refrig_status;

typedef enum refrig_family {
  REFRIG_REFLECTION_LAMAN = 0,
  REFRIG_ROSS = 1,
  REFRIG_REFLECTION_22 = 2,
  REFRIG_REFLECTION_11 = 3,
  REFRIG_PLAIN_21 = 4,
  REFRIG_PLAIN_22 = 5,
  REFRIG_LAMAN_23 = 6
} refrig_family;

typedef enum refrig_direction_mode {
  REFRIG_DIRECTIONS_RANDOM = 0,
  REFRIG_DIRECTIONS_COLLAPSE = 1,
  REFRIG_DIRECTIONS_SPECIAL = 2
} refrig_direction_mode;

REFRIG_API const char* refrig_last_error(void);
REFRIG_API void refrig_string_free(char* s);

REFRIG_API refrig_status refrig_family_from_name(const char* name, refrig_family* out);

REFRIG_API refrig_status refrig_graph_parse(const char* text, refrig_graph** out);
REFRIG_API refrig_status refrig_graph_load(const char* path, refrig_graph** out);
REFRIG_API void refrig_graph_free(refrig_graph* g);
REFRIG_API size_t refrig_graph_vertex_count(const refrig_graph* g);
REFRIG_API size_t refrig_graph_edge_count(const refrig_graph* g);
REFRIG_API refrig_status refrig_graph_to_text(const refrig_graph* g, char** out);

/* *pass is 1 for a member of the family. *witness (optional, may be NULL) receives the
 * violating edge indices separated by spaces, or an empty string. */
REFRIG_API refrig_status refrig_check(const refrig_graph* g, refrig_family family, int* pass, char** witness);

REFRIG_API refrig_status refrig_decompose(const refrig_graph* g, char** out);
REFRIG_API refrig_status refrig_reduce(const refrig_graph* g, char** out);

REFRIG_API refrig_status refrig_directions(const refrig_graph* g, refrig_direction_mode mode, uint64_t seed,
                                           char** out);

/* Rank, nullity and classification of the direction network; svg may be NULL. */
REFRIG_API refrig_status refrig_solve(const refrig_graph* g, const char* directions, char** report, char** svg);

REFRIG_API refrig_status refrig_generic_rank(const refrig_graph* g, unsigned trials, uint64_t seed, size_t* rank);

/* JSON certification report; svg may be NULL. */
REFRIG_API refrig_status refrig_certify(const refrig_graph* g, uint64_t seed, char** json, char** svg,
                                        int* agreement);

REFRIG_API refrig_status refrig_generate(size_t n, uint64_t seed, refrig_family family, refrig_graph** out);

/* Expected values for every graph file in a directory. */
REFRIG_API refrig_status refrig_oracle(const char* directory, uint64_t seed, char** json);

#ifdef __cplusplus
}
#endif

#endif
