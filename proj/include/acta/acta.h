#ifndef ACTA_ACTA_H_
#define ACTA_ACTA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ACTA_BUILDING_LIBRARY)
#    define ACTA_API __declspec(dllexport)
#  else
#    define ACTA_API __declspec(dllimport)
#  endif
#else
#  define ACTA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acta_status {
  ACTA_OK                   = 0,
  ACTA_COUNTEREXAMPLE       = 1,
  ACTA_INVALID_INPUT        = 2,
  ACTA_NOT_ASSOCIATIVE      = 3,
  ACTA_NO_IDENTITY_AT_ZERO  = 4,
  ACTA_INDEX_OUT_OF_RANGE   = 5,
  ACTA_NOT_COMPATIBLE       = 6,
  ACTA_NOT_UNITAL           = 7,
  ACTA_UNKNOWN_FAMILY       = 8,
  ACTA_PARAM_OUT_OF_RANGE   = 9,
  ACTA_SIZE_CAP_EXCEEDED    = 10,
  ACTA_ORDER_TOO_LARGE      = 11,
  ACTA_MIXED_MONOIDS        = 12,
  ACTA_EMPTY_SEEDS          = 13,
  ACTA_NOT_A_RIGHT_IDEAL    = 14,
  ACTA_NOT_INJECTIVE        = 15,
  ACTA_IDEALS_INTERSECT     = 16,
  ACTA_LEFT_REVERSIBLE      = 17,
  ACTA_UNKNOWN_THEOREM      = 18,
  ACTA_BOUNDS_TOO_LARGE     = 19,
  ACTA_NOT_PARALLEL         = 20,
  ACTA_NOT_A_SUBACT         = 21,
  ACTA_NOT_A_MORPHISM       = 22,
  ACTA_NOT_CONNECTED        = 23,
  ACTA_NULL_ARGUMENT        = 98,
  ACTA_INTERNAL             = 99
} acta_status;

typedef struct acta_monoid acta_monoid;
typedef struct acta_act    acta_act;

typedef struct acta_verify_bounds {
  uint32_t max_order;
  uint32_t max_act_size;
  uint32_t samples;
  uint64_t seed;
  int      allow_order_5;
} acta_verify_bounds;

/* Strings returned through char** out-parameters are owned by the caller
   and released with acta_string_free. */

ACTA_API char const* acta_status_name(acta_status status);
/* Message of the last failed call on this thread, "" if none. */
ACTA_API char const* acta_last_error_message(void);
ACTA_API void        acta_string_free(char* s);

/* Monoids. Text may be JSON or the plain-text table format. */
ACTA_API acta_status acta_monoid_parse(char const* text, acta_monoid** out);
ACTA_API acta_status acta_monoid_standard(char const* family, uint32_t param,
                                          acta_monoid** out);
ACTA_API void        acta_monoid_free(acta_monoid* m);
ACTA_API size_t      acta_monoid_order(acta_monoid const* m);
ACTA_API acta_status acta_monoid_to_json(acta_monoid const* m, char** out);
ACTA_API acta_status acta_monoid_to_text(acta_monoid const* m, char** out);
ACTA_API acta_status acta_monoid_analyze_json(acta_monoid const* m, char** out);
/* One JSON monoid per line. */
ACTA_API acta_status acta_monoid_enumerate_json(uint32_t order, int up_to_iso,
                                                int allow_order_5, char** out,
                                                size_t* count);

/* Acts. m may be NULL when the act JSON carries its monoid; base_dir
   resolves relative monoid paths and may be NULL. */
ACTA_API acta_status acta_act_parse(char const* json_text, acta_monoid const* m,
                                    char const* base_dir, acta_act** out);
ACTA_API void        acta_act_free(acta_act* a);
ACTA_API size_t      acta_act_size(acta_act const* a);
ACTA_API acta_status acta_act_to_json(acta_act const* a, char** out);
ACTA_API acta_status acta_act_components_json(acta_act const* a, char** out);
/* ACTA_NOT_CONNECTED when from and to lie in different components. */
ACTA_API acta_status acta_act_shortest_scheme_json(acta_act const* a, uint32_t from,
                                                   uint32_t to, char** out);
/* ACTA_OK for a valid scheme, ACTA_COUNTEREXAMPLE with the reason in
   *reason otherwise. */
ACTA_API acta_status acta_scheme_validate(acta_act const* a, char const* scheme_json,
                                          char** reason);
/* pairs_json: [[x, y], ...]; result {"blocks": [...]} */
ACTA_API acta_status acta_act_congruence_closure_json(acta_act const* a,
                                                      char const* pairs_json,
                                                      char** out);

/* Constructions. */
ACTA_API acta_status acta_act_regular(acta_monoid const* m, acta_act** out);
ACTA_API acta_status acta_construct_cofree(acta_monoid const* m, uint32_t letters,
                                           acta_act** out);
/* a, b < 0 selects the first pair with disjoint principal right ideals. */
ACTA_API acta_status acta_construct_an(acta_monoid const* m, uint32_t n, int64_t a,
                                       int64_t b, acta_act** out);

/* Verification harness. */
ACTA_API acta_verify_bounds acta_verify_bounds_default(void);
/* ACTA_OK when the suite passes, ACTA_COUNTEREXAMPLE when it fails; the
   JSON report is written to *report in both cases. */
ACTA_API acta_status acta_verify_json(char const* suite, acta_verify_bounds const* bounds,
                                      int with_timing, char** report);

#ifdef __cplusplus
}
#endif

#endif /* ACTA_ACTA_H_ */
