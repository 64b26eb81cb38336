/*
 * eaqmds: construction and verification of entanglement-assisted quantum
 * MDS codes from classical cyclic, constacyclic and Reed-Solomon codes.
 *
 * C interface. All objects are opaque handles created by a *_create or
 * producer call and released by the matching *_destroy. Functions report
 * failure through eaqmds_status; the message of the most recent failure on
 * the calling thread is available from eaqmds_last_error(). Strings returned
 * through char** out-parameters are heap allocated and must be released with
 * eaqmds_string_free().
 */
#ifndef EAQMDS_EAQMDS_H
#define EAQMDS_EAQMDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EAQMDS_BUILDING_LIBRARY)
#    define EAQMDS_API __declspec(dllexport)
#  else
#    define EAQMDS_API __declspec(dllimport)
#  endif
#else
#  define EAQMDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eaqmds_status {
  EAQMDS_OK = 0,
  EAQMDS_ERR_INVALID_ARGUMENT = 1,
  EAQMDS_ERR_BUDGET_EXCEEDED = 2,
  EAQMDS_ERR_VERIFICATION = 3,
  EAQMDS_ERR_INTERNAL = 4
} eaqmds_status;

typedef enum eaqmds_format {
  EAQMDS_FORMAT_JSON = 0,
  EAQMDS_FORMAT_CSV = 1,
  EAQMDS_FORMAT_MARKDOWN = 2
} eaqmds_format;

EAQMDS_API const char* eaqmds_version(void);
/* Message of the last failed call on this thread ("" if none). */
EAQMDS_API const char* eaqmds_last_error(void);
EAQMDS_API void eaqmds_string_free(char* s);

/* Nonzero iff q = p^e for a prime p and e >= 1. */
EAQMDS_API int eaqmds_is_prime_power(uint64_t q);

/* ---- finite fields ---------------------------------------------------- */

typedef struct eaqmds_field eaqmds_field;

typedef enum eaqmds_field_op {
  EAQMDS_FIELD_ADD = 0,
  EAQMDS_FIELD_SUB = 1,
  EAQMDS_FIELD_MUL = 2,
  EAQMDS_FIELD_DIV = 3
} eaqmds_field_op;

/* GF(p^m) with the smallest irreducible modulus. Elements are encoded as
 * base-p integers of their polynomial coefficients. */
EAQMDS_API eaqmds_status eaqmds_field_create(uint32_t p, uint32_t m, eaqmds_field** out);
/* modulus: ascending coefficients, monic, length m + 1. */
EAQMDS_API eaqmds_status eaqmds_field_create_with_modulus(uint32_t p, const uint32_t* modulus,
                                                          size_t len, eaqmds_field** out);
EAQMDS_API void eaqmds_field_destroy(eaqmds_field* f);
EAQMDS_API uint32_t eaqmds_field_order(const eaqmds_field* f);
EAQMDS_API uint32_t eaqmds_field_primitive(const eaqmds_field* f);
EAQMDS_API eaqmds_status eaqmds_field_apply(const eaqmds_field* f, eaqmds_field_op op,
                                            uint32_t a, uint32_t b, uint32_t* out);
/* a^q */
EAQMDS_API eaqmds_status eaqmds_field_conjugate(const eaqmds_field* f, uint32_t a, uint64_t q,
                                                uint32_t* out);
EAQMDS_API eaqmds_status eaqmds_field_element_order(const eaqmds_field* f, uint32_t a,
                                                    uint64_t* out);
/* {"p":..,"m":..,"modulus":[..],"primitive":[..]} */
EAQMDS_API eaqmds_status eaqmds_field_descriptor_json(const eaqmds_field* f, char** out);

/* ---- code families ---------------------------------------------------- */

/* family: "i", "ii", "iii", "iv" or "v". t is read by family v only; n = 0
 * selects the default length (families i and iii accept any admissible
 * divisor). jobs = 0 uses every hardware thread. */
typedef struct eaqmds_family_request {
  const char* family;
  uint32_t q;
  uint32_t t;
  uint64_t n;
  unsigned jobs;
} eaqmds_family_request;

typedef struct eaqmds_record {
  char family[4];
  uint32_t q;
  uint32_t t;
  uint64_t n;
  int64_t k;
  uint64_t d;
  uint64_t c;
  uint64_t classical_n;
  uint64_t classical_k;
  uint64_t classical_d;
  int saturated;
} eaqmds_record;

typedef struct eaqmds_records eaqmds_records;

/* One record per admissible d, each built from its classical code and its
 * rank(HH^dagger). Fails with EAQMDS_ERR_VERIFICATION if any construction
 * disagrees with the family's parameter formula. */
EAQMDS_API eaqmds_status eaqmds_enumerate(const eaqmds_family_request* req,
                                          eaqmds_records** out);
EAQMDS_API size_t eaqmds_records_count(const eaqmds_records* r);
EAQMDS_API eaqmds_status eaqmds_records_get(const eaqmds_records* r, size_t index,
                                            eaqmds_record* out);
EAQMDS_API eaqmds_status eaqmds_records_serialize(const eaqmds_records* r, eaqmds_format fmt,
                                                  char** out);
/* Appends copies of src's records to dst. */
EAQMDS_API eaqmds_status eaqmds_records_append(eaqmds_records* dst, const eaqmds_records* src);
EAQMDS_API void eaqmds_records_destroy(eaqmds_records* r);

/* ---- lemma sweeps ----------------------------------------------------- */

typedef struct eaqmds_report eaqmds_report;

/* lemma: "rank1", "rank1-minus", "rank-ers", "nega" or "consta". q values
 * not admissible for the lemma are skipped; ts is read by "consta" only. */
EAQMDS_API eaqmds_status eaqmds_verify_lemma(const char* lemma, const uint32_t* qs, size_t nq,
                                             const uint32_t* ts, size_t nt, unsigned jobs,
                                             eaqmds_report** out);
EAQMDS_API int eaqmds_report_passed(const eaqmds_report* r);
EAQMDS_API size_t eaqmds_report_instance_count(const eaqmds_report* r);
EAQMDS_API size_t eaqmds_report_failure_count(const eaqmds_report* r);
EAQMDS_API double eaqmds_report_elapsed_ms(const eaqmds_report* r);
EAQMDS_API eaqmds_status eaqmds_report_json(const eaqmds_report* r, int include_timing,
                                            char** out);
/* Plain-text table, one line per instance. */
EAQMDS_API eaqmds_status eaqmds_report_text(const eaqmds_report* r, char** out);
EAQMDS_API void eaqmds_report_destroy(eaqmds_report* r);

/* ---- comparison table ------------------------------------------------- */

/* EAQMDS vs QMDS rows for q (t = 0 omits the (q^2-1)/t row). JSON or
 * Markdown. */
EAQMDS_API eaqmds_status eaqmds_table(uint32_t q, uint32_t t, unsigned jobs, eaqmds_format fmt,
                                      char** out);

/* ---- distance certification ------------------------------------------- */

typedef struct eaqmds_budget {
  uint64_t max_codewords;
  uint64_t max_minors;
  uint64_t time_limit_ms; /* 0 = none */
} eaqmds_budget;

/* 10^7 codewords and 10^6 minors unless EAQMDS_MAX_CODEWORDS or
 * EAQMDS_MAX_MINORS are set in the environment. */
EAQMDS_API eaqmds_budget eaqmds_default_budget(void);

/* Builds the family member of distance d and certifies its classical code:
 * message enumeration, then the MDS minor test, else "design-distance only".
 * Writes a JSON object to *out. */
EAQMDS_API eaqmds_status eaqmds_distance(const eaqmds_family_request* req, uint64_t d,
                                         const eaqmds_budget* budget, char** out);

#ifdef __cplusplus
}
#endif

#endif /* EAQMDS_EAQMDS_H */
