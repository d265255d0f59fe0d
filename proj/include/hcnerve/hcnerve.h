#ifndef HCNERVE_H
#define HCNERVE_H

#include <stdint.h>

#if defined(HCN_BUILDING_LIBRARY)
#define HCN_API __attribute__((visibility("default")))
#else
#define HCN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcn_status {
  HCN_OK = 0,
  HCN_ERR_INVALID_ARGUMENT = 1,
  HCN_ERR_TRUNCATION = 2,
  HCN_ERR_BUILD = 3,
  HCN_ERR_BUDGET = 4,
  HCN_ERR_SCHEMA = 5,
  HCN_ERR_IO = 6,
  HCN_ERR_INTERNAL = 7
} hcn_status;

typedef enum hcn_wbar_engine { HCN_ENGINE_TUPLE = 0, HCN_ENGINE_REPRESENTABLE = 1 } hcn_wbar_engine;

typedef struct hcn_groupoid hcn_groupoid;
typedef struct hcn_sset hcn_sset;
typedef struct hcn_map hcn_map;

/* Message for the last failing call on this thread; never NULL. */
HCN_API const char* hcn_last_error(void);
HCN_API const char* hcn_version(void);
/* Releases strings returned through char** out-parameters. */
HCN_API void hcn_string_free(char* s);

/* Groupoids. Spec grammar: cyclic:M, sym:M, product:A*B, xmod:M,P,trivial|id,
   two-object:<group>, optionally prefixed by constant:. */
HCN_API hcn_status hcn_groupoid_from_spec(const char* spec, int dim_cap, hcn_groupoid** out);
HCN_API hcn_status hcn_groupoid_from_json(const char* json, hcn_groupoid** out);
HCN_API hcn_status hcn_groupoid_to_json(const hcn_groupoid* g, char** out_json);
HCN_API int hcn_groupoid_objects(const hcn_groupoid* g);
HCN_API int hcn_groupoid_dim_cap(const hcn_groupoid* g);
HCN_API void hcn_groupoid_free(hcn_groupoid* g);

/* Constructions. dim_cap must not exceed the groupoid's cap. */
HCN_API hcn_status hcn_build_wbar(const hcn_groupoid* g, int dim_cap, hcn_wbar_engine engine, hcn_sset** out);
HCN_API hcn_status hcn_build_nerve(const hcn_groupoid* g, int dim_cap, uint64_t budget, hcn_sset** out);
/* Total space, projection and action of W for a one-object groupoid. */
HCN_API hcn_status hcn_build_w_json(const hcn_groupoid* g, int dim_cap, char** out_json);
/* Comparison map W-bar -> N; report_json (may be NULL) receives the checks. */
HCN_API hcn_status hcn_compare(const hcn_groupoid* g, int dim_cap, uint64_t budget, hcn_map** out,
                               char** report_json);

/* Simplicial sets. */
HCN_API hcn_status hcn_sset_from_json(const char* json, hcn_sset** out);
HCN_API hcn_status hcn_sset_to_json(const hcn_sset* s, char** out_json);
HCN_API int hcn_sset_dim_cap(const hcn_sset* s);
HCN_API int64_t hcn_sset_count(const hcn_sset* s, int level);
/* *valid is 1 when every identity holds; otherwise problems_json lists them. */
HCN_API hcn_status hcn_sset_validate(const hcn_sset* s, int* valid, char** problems_json);
HCN_API hcn_status hcn_homology(const hcn_sset* s, int through, char** out_json);
HCN_API void hcn_sset_free(hcn_sset* s);

/* Simplicial maps. from_json also accepts the document written by compare. */
HCN_API hcn_status hcn_map_from_json(const char* json, hcn_map** out);
HCN_API hcn_status hcn_map_to_json(const hcn_map* m, char** out_json);
HCN_API hcn_status hcn_map_source(const hcn_map* m, hcn_sset** out);
HCN_API hcn_status hcn_map_target(const hcn_map* m, hcn_sset** out);
HCN_API void hcn_map_free(hcn_map* m);

/* *ok is 1 when pi0, pi1 and H_k for k <= through all match. */
HCN_API hcn_status hcn_certify(const hcn_map* m, int through, int threads, int* ok, char** report_json);

/* Runs the full pipeline described by config_json. *exit_code follows the
   command-line contract (0 pass, 1 check failed, 2 build error, 3 budget,
   64 usage). summary may be NULL. */
HCN_API hcn_status hcn_verify_theorem(const char* config_json, int* exit_code, char** report_json,
                                      char** summary);

#ifdef __cplusplus
}
#endif

#endif
