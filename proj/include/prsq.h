/* C interface to the restricted-sum-of-squares library.
 *
 * Conventions:
 *   - every function returns a prsq_status; PRSQ_OK means success
 *   - on any failure, prsq_last_error() (thread-local) holds a message
 *   - objects returned through out-parameters are owned by the caller and
 *     released with the matching prsq_*_free function
 *   - strings returned through char** are NUL-terminated UTF-8, released
 *     with prsq_string_free
 */
#ifndef PRSQ_H
#define PRSQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PRSQ_API
#define PRSQ_API __attribute__((visibility("default")))
#endif

typedef enum prsq_status {
    PRSQ_OK = 0,
    PRSQ_E_USAGE = 1,          /* malformed arguments */
    PRSQ_E_DOMAIN = 2,         /* precondition violated for these inputs */
    PRSQ_E_NOT_FOUND = 3,      /* no witness exists or none was reachable */
    PRSQ_E_RESOURCE_LIMIT = 4, /* request exceeds a built-in work cap */
    PRSQ_E_INTERNAL = 5,       /* invariant violation: always a bug */
    PRSQ_E_CONFIG = 6,         /* inconsistent campaign/parameter set */
    PRSQ_E_IO = 7,             /* file trouble (witness logs) */
} prsq_status;

/* library version, e.g. "1.0.0" */
PRSQ_API const char* prsq_version(void);

/* message for the most recent failure on this thread ("" if none) */
PRSQ_API const char* prsq_last_error(void);

PRSQ_API void prsq_string_free(char* s);

/* ============================================================ parameters */

/* parameter block shared by all targets; fields irrelevant to a target are
 * ignored.  Initialize with prsq_params_init for forward compatibility. */
typedef struct prsq_params {
    uint64_t d;          /* thm1.1 (default 1) */
    unsigned k;          /* thm1.1, thm1.4 (default 1) */
    int64_t lambda;      /* thm1.2i/ii/iii, thm1.3 (default 1) */
    int delta;           /* thm1.3: 0 or 1 (default 0) */
    const char* variant; /* thm1.4: "i", "ii", "iii" (default "i") */
    int relaxed;         /* thm1.4: nonzero tries any n (default 1) */
} prsq_params;

PRSQ_API void prsq_params_init(prsq_params* p);

/* ============================================================= witnesses */

typedef struct prsq_witness prsq_witness; /* opaque */

/* Target names: "thm1.1", "cor1.2", "cor1.3i", "cor1.3ii", "thm1.2i",
 * "thm1.2ii", "thm1.2iii", "thm1.3", "thm1.4", "conj135".
 * On PRSQ_OK, *out holds a validated witness. */
PRSQ_API prsq_status prsq_represent(const char* target, uint64_t n, const prsq_params* params,
                                    prsq_witness** out);

PRSQ_API void prsq_witness_free(prsq_witness* w);

PRSQ_API uint64_t prsq_witness_value(const prsq_witness* w);
PRSQ_API const char* prsq_witness_form(const prsq_witness* w); /* "1112", ... */
PRSQ_API void prsq_witness_tuple(const prsq_witness* w, int64_t out[4]);
PRSQ_API int64_t prsq_witness_linear(const prsq_witness* w);
PRSQ_API int prsq_witness_signed(const prsq_witness* w);
/* certificate: kind is "prime_power", "even_power", "fixed", "square", "none" */
PRSQ_API const char* prsq_witness_certificate_kind(const prsq_witness* w);
PRSQ_API int64_t prsq_witness_certificate_base(const prsq_witness* w);
PRSQ_API unsigned prsq_witness_certificate_exponent(const prsq_witness* w);
/* one-line JSON record (schema 1) */
PRSQ_API prsq_status prsq_witness_json(const prsq_witness* w, char** out);

/* ============================================================= campaigns */

typedef struct prsq_campaign_counts {
    uint64_t checked;
    uint64_t passed;
    uint64_t not_applicable; /* includes not_found */
    uint64_t not_found;
    uint64_t failed;
    uint64_t duration_ms;
    uint64_t digest; /* order-stable hash of the witness stream */
} prsq_campaign_counts;

/* spec_json: {"target":..., "n_lo":..., "n_hi":..., "step":1,
 *             "mode":"construct"|"oracle"|"cross", "workers":1,
 *             "witness_log":"", "params":{...}} — omitted fields default.
 * counts and result_json are each optional (pass NULL to skip). */
PRSQ_API prsq_status prsq_verify(const char* spec_json, prsq_campaign_counts* counts,
                                 char** result_json);

/* quaternary-squares sweep with x+3y+5z restricted to perfect squares,
 * n = 0..n_max; workers = 0 picks the default */
PRSQ_API prsq_status prsq_check135(uint64_t n_max, unsigned workers, const char* witness_log,
                                   prsq_campaign_counts* counts, char** result_json);

/* achievable-value report for coeffs·(x,y,z,w) over signed tuples of the
 * form ("1111", "1112", "1122", "1113", "3sq"), n = 0..n_max */
PRSQ_API prsq_status prsq_conjecture_explore(const int64_t coeffs[4], const char* form,
                                             uint64_t n_max, char** report_json);

/* explicit size thresholds for the prime-power sum construction */
PRSQ_API prsq_status prsq_bounds(unsigned k, uint64_t j, uint64_t l, char** bounds_json);

/* re-parse and re-validate every record of a witness log */
PRSQ_API prsq_status prsq_log_verify(const char* path, uint64_t* witnesses);

/* default worker count (PRSQ_WORKERS env var, else hardware threads) */
PRSQ_API unsigned prsq_default_workers(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRSQ_H */
