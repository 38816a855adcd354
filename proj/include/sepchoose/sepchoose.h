/* C interface to the sepchoose library. Every function returns an sc_status; on
 * failure sc_last_error() describes the problem. Strings returned through char**
 * out-parameters are owned by the caller and released with sc_string_free(). */
#ifndef SEPCHOOSE_H
#define SEPCHOOSE_H

#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_INVALID_ARGUMENT = 1,
  SC_REGIME = 2,
  SC_PARSE = 3,
  SC_BUDGET = 4,
  SC_NO_COLORING = 5,
  SC_IO = 6,
  SC_INTERNAL = 7
} sc_status;

typedef struct sc_graph sc_graph;
typedef struct sc_lists sc_lists;
typedef struct sc_certificate sc_certificate;

/* Message of the last failed call on this thread ("" if none). Valid until the next call. */
SC_API const char* sc_last_error(void);
SC_API const char* sc_status_name(sc_status status);
SC_API void sc_string_free(char* s);
SC_API uint64_t sc_default_budget(void);

/* Graphs */
SC_API sc_status sc_graph_cycle(int n, sc_graph** out);
SC_API sc_status sc_graph_path(int n, sc_graph** out);
SC_API sc_status sc_graph_flower(int p, int k, sc_graph** out);
SC_API sc_status sc_graph_identify(const sc_graph* g1, int v1, const sc_graph* g2, int v2, sc_graph** out);
SC_API sc_status sc_graph_from_json(const char* json, sc_graph** out);
SC_API sc_status sc_graph_to_json(const sc_graph* g, char** out);
SC_API sc_status sc_graph_order(const sc_graph* g, int* out);
/* Girth, or -1 for forests. */
SC_API sc_status sc_graph_girth(const sc_graph* g, int* out);
SC_API void sc_graph_free(sc_graph* g);

/* List assignments. a < 0 takes the list bound from the first non-precolored list. */
SC_API sc_status sc_lists_from_json(const sc_graph* g, const char* json, int a, sc_lists** out);
SC_API sc_status sc_lists_to_json(const sc_lists* lists, char** out);
SC_API sc_status sc_lists_separation(const sc_lists* lists, int* out);
/* Random c-separating lists of size a; precolored < 0 means none, else that vertex gets b colors. */
SC_API sc_status sc_lists_random(const sc_graph* g, int a, int c, uint64_t seed, int precolored, int b, sc_lists** out);
SC_API void sc_lists_free(sc_lists* lists);

/* Closed forms. regime may be NULL. */
SC_API sc_status sc_sep_cycle(int n, int a, int b, int* value, char** regime);
SC_API sc_status sc_fsep_cycle(int n, int a, int b, int* value, char** regime);
SC_API sc_status sc_fsep_min_with_triangle(int n, int a, int b, int* value, char** regime);
SC_API sc_status sc_fsep_cactus(const sc_graph* g, int a, int b, int* value, char** regime);
SC_API sc_status sc_fsep_outerplanar_bounds(int girth, int a, int b, int* lower, int* upper);
SC_API sc_status sc_c_threshold(int n, int a, int b, long long* num, long long* den, long long* floor_value, char** regime);

/* Exact solver. budget 0 selects the default. A budget overrun returns SC_BUDGET. */
/* (L,b)-colorability; free != 0 forces precolored vertices to their lists. result_json may be NULL. */
SC_API sc_status sc_solve_lists(const sc_lists* lists, int b, int free, uint64_t budget, int* colorable, char** result_json);
/* (a,b,c)-(free-)choosability; counterexample_json is set to a lists object when not choosable. */
SC_API sc_status sc_decide(const sc_graph* g, int a, int b, int c, int free, uint64_t budget, int* choosable,
                           char** counterexample_json);
SC_API sc_status sc_compute_sep(const sc_graph* g, int a, int b, int free, uint64_t budget, int* out);

/* Adversarial certificates. Families: small-ratio (n,b,k), odd-cycle (p,b,alpha),
 * path (n,a,b,variant,endpoints; glue != 0 closes it into a cycle), c3 (a,b,variant),
 * flower (p,a,b), fig1. A NULL or empty variant picks the one whose regime contains the parameters. */
typedef struct sc_adversary_params {
  int n, a, b, k, alpha, p;
  const char* variant;
  const char* endpoints;
  int glue;
} sc_adversary_params;

SC_API sc_status sc_adversary(const char* family, const sc_adversary_params* params, sc_certificate** out);
SC_API sc_status sc_certificate_from_json(const char* json, sc_certificate** out);
SC_API sc_status sc_certificate_to_json(const sc_certificate* cert, char** out);
/* status: 0 pass, 1 refuted, 2 unknown (budget). */
SC_API sc_status sc_certificate_verify(const sc_certificate* cert, uint64_t budget, int* status, char** message);
SC_API void sc_certificate_free(sc_certificate* cert);

/* Constructive colorers: greedy, lift (uses k), path, cycle, cactus, outerplanar, exact.
 * result_json holds {"strategy", "coloring", "trace"}. */
SC_API sc_status sc_color(const sc_lists* lists, const char* strategy, int b, int k, char** result_json);

/* Formula/oracle grid over cycles; csv may be NULL. */
SC_API sc_status sc_sweep(int n_max, int a_max, int b_max, uint64_t budget, unsigned workers, char** csv, int* rows,
                          int* verified, int* mismatches);

#ifdef __cplusplus
}
#endif

#endif
