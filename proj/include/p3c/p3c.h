#ifndef P3C_P3C_H
#define P3C_P3C_H

/* C interface to libp3c: P3-convex hulls, convex independence and
 * Caratheodory numbers.
 *
 * Vertex ids are 0-based. Every fallible call returns a p3c_status; on
 * failure p3c_last_error() describes the problem (per thread). Objects
 * returned through out-parameters are owned by the caller and released with
 * the matching *_free function. Pointers obtained from accessors stay valid
 * until the owning object is freed. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(P3C_BUILDING_LIBRARY)
#    define P3C_API __declspec(dllexport)
#  else
#    define P3C_API __declspec(dllimport)
#  endif
#else
#  define P3C_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum p3c_status {
  P3C_OK = 0,
  P3C_ERR_ARGUMENT = 1,
  P3C_ERR_PARSE = 2,
  P3C_ERR_INVALID_SET = 3,
  P3C_ERR_NOT_COGRAPH = 4,
  P3C_ERR_DISPATCH = 5,
  P3C_ERR_SIZE_REFUSAL = 6,
  P3C_ERR_VERIFICATION = 7,
  P3C_ERR_MEMORY = 8,
  P3C_ERR_INTERNAL = 9
} p3c_status;

typedef enum p3c_format { P3C_FORMAT_EDGE_LIST = 0, P3C_FORMAT_PERMUTATION = 1 } p3c_format;

typedef enum p3c_class {
  P3C_CLASS_PATH = 0,
  P3C_CLASS_CYCLE,
  P3C_CLASS_TREE,
  P3C_CLASS_COGRAPH,
  P3C_CLASS_PERMUTATION_INPUT,
  P3C_CLASS_GENERIC
} p3c_class;

typedef enum p3c_solver {
  P3C_SOLVER_AUTO = 0,
  P3C_SOLVER_ORACLE,
  P3C_SOLVER_PATH,
  P3C_SOLVER_CYCLE,
  P3C_SOLVER_TREE,
  P3C_SOLVER_COGRAPH,
  P3C_SOLVER_PERMUTATION
} p3c_solver;

/* How the permutation solver decides transitions. */
typedef enum p3c_mode { P3C_MODE_STATE = 0, P3C_MODE_WITNESS, P3C_MODE_ORACLE_CHECK } p3c_mode;

typedef struct p3c_graph p3c_graph; /* graph, optionally with its permutation diagram */
typedef struct p3c_list p3c_list;   /* list of 32-bit integers */
typedef struct p3c_hull p3c_hull;
typedef struct p3c_verdict p3c_verdict;
typedef struct p3c_solution p3c_solution;
typedef struct p3c_validation p3c_validation;

P3C_API const char* p3c_version(void);
P3C_API const char* p3c_last_error(void);
P3C_API const char* p3c_status_name(p3c_status status);

/* lists */
P3C_API size_t p3c_list_size(const p3c_list* list);
P3C_API const int32_t* p3c_list_data(const p3c_list* list);
P3C_API void p3c_list_free(p3c_list* list);

P3C_API void p3c_string_free(char* text);

/* graphs */
P3C_API p3c_status p3c_graph_parse(const char* text, p3c_format format, p3c_graph** out);
/* edges holds 2*m ids: u0 v0 u1 v1 ... */
P3C_API p3c_status p3c_graph_create(int32_t n, const int32_t* edges, size_t m, p3c_graph** out);
/* bottoms[v] is the 0-based bottom-line position of vertex v */
P3C_API p3c_status p3c_graph_from_permutation(const int32_t* bottoms, int32_t n, p3c_graph** out);
P3C_API void p3c_graph_free(p3c_graph* g);

P3C_API int32_t p3c_graph_order(const p3c_graph* g);
P3C_API size_t p3c_graph_size(const p3c_graph* g);
P3C_API int p3c_graph_has_diagram(const p3c_graph* g);
P3C_API p3c_status p3c_graph_edges(const p3c_graph* g, p3c_list** out);
P3C_API p3c_status p3c_graph_diagram(const p3c_graph* g, p3c_list** out);
P3C_API p3c_status p3c_graph_format(const p3c_graph* g, p3c_format format, char** out);
P3C_API p3c_status p3c_graph_classify(const p3c_graph* g, p3c_class* out);
P3C_API const char* p3c_class_name(p3c_class c);
P3C_API p3c_status p3c_graph_components(const p3c_graph* g, p3c_list** labels);

/* Generators. kind is one of path, cycle, star, ladder, spider, random-perm,
 * random-cograph, random-tree; params are the sizes the kind needs (spider
 * takes legs and leg length, the others one size). Unknown kinds give
 * P3C_ERR_DISPATCH. */
P3C_API p3c_status p3c_generate(const char* kind, const int64_t* params, size_t count, uint64_t seed,
                                p3c_graph** out);
/* Marked irredundant set of the k-rung ladder produced by p3c_generate("ladder"). */
P3C_API p3c_status p3c_ladder_marked_set(int32_t k, p3c_list** out);

/* convexity */
P3C_API p3c_status p3c_hull_compute(const p3c_graph* g, const int32_t* set, size_t k, p3c_hull** out);
P3C_API const int32_t* p3c_hull_members(const p3c_hull* h, size_t* count);
P3C_API const int32_t* p3c_hull_order(const p3c_hull* h, size_t* count);
/* Returns 1 and fills the pair when v was added by the closure, 0 otherwise. */
P3C_API int p3c_hull_parents(const p3c_hull* h, int32_t v, int32_t* first, int32_t* second);
P3C_API void p3c_hull_free(p3c_hull* h);

P3C_API p3c_status p3c_is_convex(const p3c_graph* g, const int32_t* set, size_t k, int* out);
P3C_API p3c_status p3c_is_two_packing(const p3c_graph* g, const int32_t* set, size_t k, int* out);
/* found = 0 leaves *path empty. */
P3C_API p3c_status p3c_two_path(const p3c_graph* g, const int32_t* set, size_t k, int32_t x, int* found,
                                p3c_list** path);

P3C_API p3c_status p3c_check(const p3c_graph* g, const int32_t* set, size_t k, p3c_verdict** out);
P3C_API int p3c_verdict_independent(const p3c_verdict* v);
P3C_API int32_t p3c_verdict_violator(const p3c_verdict* v); /* -1 when independent */
/* 2-path from set minus the violator to the violator. */
P3C_API const int32_t* p3c_verdict_certificate(const p3c_verdict* v, size_t* count);
P3C_API void p3c_verdict_free(p3c_verdict* v);

P3C_API p3c_status p3c_boundary(const p3c_graph* g, const int32_t* set, size_t k, p3c_list** out);
P3C_API p3c_status p3c_is_irredundant(const p3c_graph* g, const int32_t* set, size_t k, int* out);

/* solvers */
typedef struct p3c_solve_options {
  p3c_solver solver;
  p3c_mode mode;
  int32_t oracle_bound; /* 0 = library default */
} p3c_solve_options;

P3C_API p3c_solve_options p3c_solve_options_default(void);
P3C_API const char* p3c_solver_name(p3c_solver s);
/* Returns P3C_ERR_ARGUMENT for unknown names. */
P3C_API p3c_status p3c_solver_from_name(const char* name, p3c_solver* out);

P3C_API p3c_status p3c_beta_c(const p3c_graph* g, const p3c_solve_options* options, p3c_solution** out);
P3C_API p3c_status p3c_caratheodory(const p3c_graph* g, int32_t oracle_bound, p3c_solution** out);
P3C_API int64_t p3c_solution_value(const p3c_solution* s);
P3C_API const int32_t* p3c_solution_witness(const p3c_solution* s, size_t* count);
P3C_API p3c_solver p3c_solution_solver(const p3c_solution* s);
P3C_API uint64_t p3c_solution_explored(const p3c_solution* s);
P3C_API void p3c_solution_free(p3c_solution* s);

/* validation suites */
typedef struct p3c_validate_options {
  const char* suite;
  int32_t max_n;     /* 0 = suite default */
  uint64_t seed;
  int32_t samples;   /* 0 = suite default */
  int32_t threads;   /* 0 = hardware concurrency */
  const char* fixture_dir; /* NULL = current directory */
} p3c_validate_options;

P3C_API size_t p3c_validation_suite_count(void);
P3C_API const char* p3c_validation_suite_name(size_t i);
P3C_API p3c_status p3c_validate(const p3c_validate_options* options, p3c_validation** out);
P3C_API uint64_t p3c_validation_total(const p3c_validation* v);
P3C_API uint64_t p3c_validation_passed(const p3c_validation* v);
P3C_API const char* p3c_validation_summary(const p3c_validation* v);
P3C_API size_t p3c_validation_failure_count(const p3c_validation* v);
P3C_API const char* p3c_validation_failure(const p3c_validation* v, size_t i);
P3C_API size_t p3c_validation_fixture_count(const p3c_validation* v);
P3C_API const char* p3c_validation_fixture(const p3c_validation* v, size_t i);
P3C_API void p3c_validation_free(p3c_validation* v);

#ifdef __cplusplus
}
#endif

#endif
