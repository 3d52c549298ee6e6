/* C interface of the linehyp library. All handles are opaque; every function
 * returns an lh_status and, on failure, records a message retrievable with
 * lh_last_error() on the calling thread. Strings returned through char**
 * out-parameters are owned by the caller and released with lh_string_free(). */
#ifndef LINEHYP_LINEHYP_H
#define LINEHYP_LINEHYP_H

#include <stddef.h>

#if defined(LINEHYP_BUILDING_LIBRARY)
#define LH_API __attribute__((visibility("default")))
#else
#define LH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lh_status {
  LH_OK = 0,
  LH_ERR_INVALID_ARGUMENT = 1,
  LH_ERR_PARSE = 2,
  LH_ERR_NEAR_PARALLEL = 10,
  LH_ERR_DEGENERATE_TRIANGLE = 11,
  LH_ERR_DEGENERATE_CONTACT = 12,
  LH_ERR_GENERAL_POSITION = 20,
  LH_ERR_QUERY_DEGENERATE = 21,
  LH_ERR_QUERY_OUTSIDE_BOX = 22,
  LH_ERR_VALIDATION_FAILED = 30,
  LH_ERR_UNKNOWN_VERTEX = 31,
  LH_ERR_CAP_EXCEEDED = 32,
  LH_ERR_WITNESS_LOCALIZATION = 33,
  LH_ERR_RETRIES_EXHAUSTED = 40,
  LH_ERR_PARAMETER_MISMATCH = 41,
  LH_ERR_TOO_FEW_LINES = 50,
  LH_ERR_ORDER_INCONSISTENCY = 51,
  LH_ERR_INTERVAL_VIOLATION = 52,
  LH_ERR_UNATTRIBUTED_EDGE = 53,
  LH_ERR_SHRINK_MISMATCH = 54,
  LH_ERR_IO = 90,
  LH_ERR_INTERNAL = 99,
  /* The call completed and wrote its report, but the checked property failed. */
  LH_VERIFICATION_FAILED = 100
} lh_status;

typedef struct lh_scene lh_scene;
typedef struct lh_arrangement lh_arrangement;
typedef struct lh_hypergraph lh_hypergraph;

LH_API const char* lh_last_error(void);
LH_API const char* lh_status_name(lh_status status);
LH_API void lh_string_free(char* s);

/* scenes */
LH_API lh_status lh_scene_from_json(const char* json, lh_scene** out);
LH_API lh_status lh_scene_load(const char* path, lh_scene** out);
LH_API lh_status lh_scene_to_json(const lh_scene* scene, char** out_json);
LH_API size_t lh_scene_line_count(const lh_scene* scene);
LH_API size_t lh_scene_shape_count(const lh_scene* scene);
LH_API void lh_scene_free(lh_scene* scene);

/* Runs a generator spec given as JSON. */
LH_API lh_status lh_generate(const char* spec_json, lh_scene** out);
/* General-position and pseudo-disc checks; LH_VERIFICATION_FAILED if any fails. */
LH_API lh_status lh_validate(const lh_scene* scene, char** out_json);
/* Incircle of every line triple of the scene. */
LH_API lh_status lh_incircles(const lh_scene* scene, lh_scene** out);

/* arrangements */
LH_API lh_status lh_arrangement_build(const lh_scene* scene, lh_arrangement** out);
LH_API lh_status lh_arrangement_stats(const lh_arrangement* arr, char** out_json);
LH_API void lh_arrangement_free(lh_arrangement* arr);
/* <=t-zone of the line a*x + b*y = c over the scene lines. */
LH_API lh_status lh_zone(const lh_scene* scene, double a, double b, double c, int t, char** out_json);

/* hypergraphs */
LH_API lh_status lh_hypergraph_build(const lh_scene* scene, int validate, lh_hypergraph** out);
LH_API lh_status lh_hypergraph_to_json(const lh_hypergraph* h, char** out_json);
LH_API size_t lh_hypergraph_edge_count(const lh_hypergraph* h);
LH_API void lh_hypergraph_free(lh_hypergraph* h);
LH_API lh_status lh_count_by_size(const lh_hypergraph* h, char** out_json);
LH_API lh_status lh_degree(const lh_hypergraph* h, int line, int t, long long* out_degree);
/* Delaunay graph with its planarity verdict; LH_VERIFICATION_FAILED if not planar. */
LH_API lh_status lh_delaunay(const lh_hypergraph* h, char** out_json);
/* Writes the report even when returning LH_ERR_CAP_EXCEEDED. */
LH_API lh_status lh_vc(const lh_hypergraph* h, int cap, unsigned long long seed, char** out_json);
LH_API lh_status lh_cell_graph(const lh_scene* scene, int pivot, char** out_json);

/* tangent sweep */
LH_API lh_status lh_shrink(const lh_scene* scene, lh_scene** out, char** out_report_json);
/* LH_VERIFICATION_FAILED if the audit does not pass. */
LH_API lh_status lh_audit(const lh_scene* shrunk, char** out_json);

/* verification over n in [n_min, n_max] and seeds seed .. seed + seeds - 1 */
LH_API lh_status lh_verify_aronov(int n_min, int n_max, int seeds, unsigned long long seed, char** out_json);
LH_API lh_status lh_verify_zone(int n_min, int n_max, int seeds, unsigned long long seed, int queries,
                                char** out_json);
LH_API lh_status lh_verify_sweep(int n_min, int n_max, int seeds, unsigned long long seed, char** out_json);

/* Growth experiment; out_csv may be NULL. */
LH_API lh_status lh_growth(const char* metric, const char* spec_json, const int* sizes, size_t size_count,
                           int seeds, char** out_json, char** out_csv);

/* options_json may be NULL. */
LH_API lh_status lh_render_svg(const lh_scene* scene, const char* options_json, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif
