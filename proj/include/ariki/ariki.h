/* C interface to the ariki library. Every function returns an ariki_status;
 * on failure a message is available from ariki_last_error() on the same
 * thread. Strings handed out through char** must be released with
 * ariki_string_free. */
#ifndef ARIKI_ARIKI_H
#define ARIKI_ARIKI_H

#include <stdint.h>

#if defined(ARIKI_BUILDING_LIBRARY)
#define ARIKI_API __attribute__((visibility("default")))
#else
#define ARIKI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ariki_status {
  ARIKI_OK = 0,
  ARIKI_ERR_INVALID_ARGUMENT = 1,
  ARIKI_ERR_DOMAIN = 2,
  ARIKI_ERR_INTERNAL = 3,
  ARIKI_ERR_OVERFLOW = 4,
  ARIKI_ERR_NO_MEMORY = 5
} ariki_status;

typedef enum ariki_format { ARIKI_FORMAT_TEXT = 0, ARIKI_FORMAT_JSON = 1, ARIKI_FORMAT_DOT = 2 } ariki_format;

typedef enum ariki_order { ARIKI_ORDER_AM = 0, ARIKI_ORDER_FLOTW = 1 } ariki_order;

typedef enum ariki_typeb_query {
  ARIKI_TYPEB_BASIC_SET = 0,
  ARIKI_TYPEB_A_VALUES = 1,
  ARIKI_TYPEB_DECOMP = 2
} ariki_typeb_query;

typedef struct ariki_params ariki_params;
typedef struct ariki_mp ariki_mp;

ARIKI_API const char* ariki_version(void);
ARIKI_API const char* ariki_last_error(void);
ARIKI_API const char* ariki_status_name(ariki_status s);
ARIKI_API void ariki_string_free(char* s);
/* 0 restores the default (ARIKI_THREADS or hardware concurrency). */
ARIKI_API void ariki_set_threads(int n);

/* Charges v has d entries. When has_shift is 0 the minimal valid s is used. */
ARIKI_API ariki_status ariki_params_new(int d, int e, const int* v, int has_shift, int s, ariki_params** out);
ARIKI_API ariki_status ariki_params_from_json(const char* json, ariki_params** out);
ARIKI_API ariki_status ariki_params_to_json(const ariki_params* p, char** out);
ARIKI_API void ariki_params_free(ariki_params* p);
ARIKI_API int ariki_params_d(const ariki_params* p);
ARIKI_API int ariki_params_e(const ariki_params* p);
ARIKI_API int ariki_params_s(const ariki_params* p);
/* d * m^(j). */
ARIKI_API ariki_status ariki_params_scaled_m(const ariki_params* p, int j, int* out);
ARIKI_API ariki_status ariki_is_semisimple(const ariki_params* p, int n, int* out);

/* Text form "2.2,2.2.1" ("-" for an empty component). d = 0 accepts any d. */
ARIKI_API ariki_status ariki_mp_parse(const char* text, int d, ariki_mp** out);
ARIKI_API ariki_status ariki_mp_from_json(const char* json, ariki_mp** out);
ARIKI_API ariki_status ariki_mp_to_text(const ariki_mp* m, char** out);
ARIKI_API ariki_status ariki_mp_to_json(const ariki_mp* m, char** out);
ARIKI_API void ariki_mp_free(ariki_mp* m);
ARIKI_API int ariki_mp_rank(const ariki_mp* m);
ARIKI_API int ariki_mp_d(const ariki_mp* m);

/* All d-partitions of rank n in canonical order. */
ARIKI_API ariki_status ariki_enumerate(int d, int n, ariki_format fmt, char** out);

ARIKI_API ariki_status ariki_a_value(const ariki_mp* m, const ariki_params* p, int k, int64_t* numerator,
                                     int* denominator);
ARIKI_API ariki_status ariki_schur_valuation(const ariki_mp* m, const ariki_params* p, int64_t* out);
/* Ordinary and shifted symbols of a d-composition given as text. Weights
 * come from p, or from `weights` ("1,1/2,2") when it is not NULL. */
ARIKI_API ariki_status ariki_symbol(const char* composition, const ariki_params* p, const char* weights, int k,
                                    ariki_format fmt, char** out);

ARIKI_API ariki_status ariki_is_flotw(const ariki_mp* m, const ariki_params* p, int* out);
ARIKI_API ariki_status ariki_is_kleshchev(const ariki_mp* m, const ariki_params* p, int* out);
ARIKI_API ariki_status ariki_a_sequence(const ariki_mp* m, const ariki_params* p, char** out);
ARIKI_API ariki_status ariki_a_graph(const ariki_mp* m, const ariki_params* p, ariki_format fmt, char** out);
ARIKI_API ariki_status ariki_crystal(const ariki_params* p, int n, ariki_order order, ariki_format fmt, char** out);
/* inverse = 0: Kleshchev -> FLOTW; otherwise FLOTW -> Kleshchev. */
ARIKI_API ariki_status ariki_bijection(const ariki_mp* m, const ariki_params* p, int inverse, ariki_mp** out);
ARIKI_API ariki_status ariki_canonical_basis(const ariki_params* p, int n, ariki_format fmt, char** out);
ARIKI_API ariki_status ariki_decomposition_matrix(const ariki_params* p, int n, ariki_format fmt, char** out);
ARIKI_API ariki_status ariki_typeb(int n, int e, ariki_typeb_query what, ariki_format fmt, char** out);

/* Runs the invariant suite. caps holds 8 rank limits in the order counting,
 * regular, a_oracle, invariance, divided, minimality, canonical, typeB; NULL
 * uses the defaults. */
ARIKI_API ariki_status ariki_verify(const int* caps, ariki_format fmt, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
