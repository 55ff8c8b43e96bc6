/* invq -- decomposing the inverse power map on F_{2^n} into low-degree
 * power maps: certified factorizations of 2^n - 1, good-integer
 * classification, and verified certificates writing -1 as a product of
 * Gold (2^a + 1) and cubic (2^a + 2^b + 1) exponents mod 2^n - 1.
 *
 * C interface over the C++ core.  All functions return invq_status;
 * outputs are written through pointers.  Strings returned through
 * char** are heap-allocated and must be released with
 * invq_string_free().  Handles are opaque and must be released with
 * their matching *_free().  On any nonzero status, invq_last_error()
 * returns a thread-local diagnostic message.
 */
#ifndef INVQ_H
#define INVQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum invq_status {
  INVQ_OK = 0,
  INVQ_ERR_BAD_ARGUMENT = 1,
  INVQ_ERR_NONCOPRIME = 2,
  INVQ_ERR_PARSE = 3,
  INVQ_ERR_VALIDATION = 4,
  INVQ_ERR_INCOMPLETE_FACTORIZATION = 5,
  INVQ_ERR_INSUFFICIENT_RANK = 6,
  INVQ_ERR_SINGULAR_SYSTEM = 7,
  INVQ_ERR_SPAN_FAILURE = 8,
  INVQ_ERR_NOT_FOUND = 9,
  INVQ_ERR_IO = 10,
  INVQ_ERR_INTERNAL = 11,
} invq_status;

typedef struct invq_table invq_table;
typedef struct invq_factorization invq_factorization;
typedef struct invq_certificate invq_certificate;

const char* invq_version(void);

/* Message for the most recent failing call on this thread. */
const char* invq_last_error(void);

void invq_string_free(char* s);
void invq_u64_free(uint64_t* p);

/* ---- factor tables ---------------------------------------------- */

/* Loads and fully validates a factor-table file (see README for the
 * format); every listed factor is primality-checked and every line's
 * product compared against 2^n - 1. */
invq_status invq_table_load(const char* path, invq_table** out);
void invq_table_free(invq_table* t);

/* ---- factoring 2^n - 1 ------------------------------------------ */

typedef struct invq_factor_options {
  uint64_t seed;       /* rho and generator randomness; default 0 */
  uint64_t rho_budget; /* iterations per composite; 0 = default 2^26 */
} invq_factor_options;

void invq_factor_options_init(invq_factor_options* opts);

/* table may be NULL; a table entry for n bypasses factoring work. */
invq_status invq_factor_mersenne(unsigned n, const invq_table* table,
                                 const invq_factor_options* opts,
                                 invq_factorization** out);
void invq_factorization_free(invq_factorization* f);

int invq_factorization_complete(const invq_factorization* f);
size_t invq_factorization_prime_count(const invq_factorization* f);
invq_status invq_factorization_prime(const invq_factorization* f, size_t i,
                                     char** q_dec, unsigned* multiplicity);
size_t invq_factorization_composite_count(const invq_factorization* f);
invq_status invq_factorization_composite(const invq_factorization* f, size_t i,
                                         char** c_dec, unsigned* multiplicity);
invq_status invq_factorization_radical(const invq_factorization* f,
                                       char** dec);
invq_status invq_factorization_lift_q(const invq_factorization* f, char** dec);

/* Divisor congruence checks (q == 1 mod n for prime n; q == +-1 mod 8
 * for odd n) rendered as a text report, one line per prime. */
invq_status invq_congruence_report(const invq_factorization* f, char** text,
                                   int* all_ok);

/* omega = distinct primes; bound = 1.36 * ln n; squarefree from the
 * multiplicities.  Diagnostic only. */
invq_status invq_omega_report(const invq_factorization* f, unsigned* omega,
                              double* bound, int* within, int* squarefree);

/* ---- decomposition ---------------------------------------------- */

enum {
  INVQ_POLICY_UNIT_VECTOR_FIRST = 0,
  INVQ_POLICY_ANY_BASIS = 1,
};

typedef struct invq_decompose_options {
  uint64_t seed;
  int policy;                /* INVQ_POLICY_* */
  int include_cubics;        /* extend candidate pool on rank failure */
  int strict_unit;           /* fail instead of basis fallback */
  int reduce_multiplicities; /* reduce mod lambda(2^n - 1); default on */
} invq_decompose_options;

void invq_decompose_options_init(invq_decompose_options* opts);

/* Runs the full pipeline on a complete factorization and returns a
 * certificate that has already been re-verified (verified = true).
 * fallback_used / cubics_used may be NULL. */
invq_status invq_decompose(unsigned n, const invq_factorization* f,
                           const invq_decompose_options* opts,
                           invq_certificate** out, int* fallback_used,
                           int* cubics_used);

/* ---- good integers ---------------------------------------------- */

/* s_max = UINT64_MAX selects the default bound 4n.  *found = 0 means
 * "not found within bound" (never "proven superbad"). */
invq_status invq_good_witness(unsigned n, uint64_t s_max, uint64_t* k,
                              uint64_t* s, uint64_t* nu, int* found);

/* Certificate from the explicit factor list attached to a witness. */
invq_status invq_theorem1_certificate(unsigned n, uint64_t s_max,
                                      invq_certificate** out, int* found);

/* All good n <= x_max (ascending); caller frees with invq_u64_free. */
invq_status invq_scan_good(uint64_t x_max, uint64_t s_max, uint64_t** values,
                           size_t* count);

/* ---- quadratic symbols ------------------------------------------ */

/* Even-quotient descent for (2^a+1 / 2^n-1); chain_text (optional)
 * receives the step list, e.g. "7 = 2*5 - 3; 5 = 2*3 - 1". */
invq_status invq_rotkiewicz_symbol(uint64_t a, uint64_t n, int* value,
                                   uint64_t* ell, char** chain_text);

/* Independent cross-check: jacobi(2^a + 1, 2^n - 1) on full integers. */
invq_status invq_jacobi_gold(uint64_t a, uint64_t n, int* value);

/* ---- certificates ----------------------------------------------- */

invq_status invq_certificate_parse(const char* text, invq_certificate** out);
invq_status invq_certificate_serialize(const invq_certificate* c, char** text);
void invq_certificate_free(invq_certificate* c);

unsigned invq_certificate_n(const invq_certificate* c);
/* "theorem1" or "algorithm1"; static storage. */
const char* invq_certificate_method(const invq_certificate* c);
int invq_certificate_verified(const invq_certificate* c);
size_t invq_certificate_factor_count(const invq_certificate* c);
/* kind receives a static "frobenius"/"quadratic"/"cubic"; b is 0 for
 * non-cubic kinds; value_dec/mult_dec may be NULL if not wanted. */
invq_status invq_certificate_factor(const invq_certificate* c, size_t i,
                                    const char** kind, unsigned* a, unsigned* b,
                                    char** value_dec, char** mult_dec);

/* Recomputes the defining congruence; ok is 1/0, residue_dec (optional)
 * the computed product mod 2^n - 1, detail (optional) the failure
 * explanation or empty. */
invq_status invq_certificate_verify(const invq_certificate* c, int* ok,
                                    char** residue_dec, char** detail);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INVQ_H */
