#ifndef SUPEROPT_H
#define SUPEROPT_H

/* C interface to the superopt library: matrix Laurent symbols on the unit
 * circle, Hankel norms, trace-pairing bound searches, and the certification
 * registry.  All functions return a status code; on anything but SUPEROPT_OK
 * the thread-local message from superopt_last_error() describes the problem.
 * Strings returned through char** are heap-allocated; release them with
 * superopt_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SUPEROPT_OK = 0,
    SUPEROPT_ERR_INVALID_ARGUMENT = 1,
    SUPEROPT_ERR_PARSE = 2,
    SUPEROPT_ERR_UNSUPPORTED = 3,
    SUPEROPT_ERR_NUMERIC = 4,
    SUPEROPT_ERR_INTERNAL = 5
} superopt_status;

typedef struct superopt_symbol superopt_symbol;
typedef struct superopt_report superopt_report;

const char* superopt_version(void);
const char* superopt_last_error(void);
void superopt_string_free(char* s);

/* Symbols: {"rows": m, "cols": n, "coeffs": [{"deg", "re", "im"}]} */
superopt_status superopt_symbol_from_json(const char* text,
                                          superopt_symbol** out);
superopt_status superopt_symbol_to_json(const superopt_symbol* sym, int indent,
                                        char** out);
superopt_status superopt_symbol_shape(const superopt_symbol* sym, int* rows,
                                      int* cols, int* min_deg, int* max_deg);
void superopt_symbol_free(superopt_symbol* sym);

superopt_status superopt_hankel_norm(const superopt_symbol* sym, double* out);
superopt_status superopt_hankel_depth(const superopt_symbol* sym, int* out);
superopt_status superopt_pairing(const superopt_symbol* phi,
                                 const superopt_symbol* psi, double* re,
                                 double* im);
/* Winding of det(sym) on the circle; requires a square symbol whose
 * determinant has nonvanishing modulus on the grid. */
superopt_status superopt_det_winding(const superopt_symbol* sym, int* winding);

typedef struct {
    int degree_cap;          /* witness degree cap for the search */
    int restarts;            /* random restarts */
    unsigned long long seed; /* deterministic seed */
    int iterations;          /* ascent steps per restart */
    int grid_n;              /* minimum grid size, 0 for automatic */
    int run_search;          /* nonzero: run the ascent search */
    double tol;              /* report tolerance */
} superopt_sigma_options;

void superopt_sigma_options_init(superopt_sigma_options* opts);

/* Bound pair for the rank-k trace pairing value.  When witness_out is not
 * NULL and the search produced a witness, *witness_out receives the product
 * symbol (caller frees). */
superopt_status superopt_sigma_bounds(const superopt_symbol* phi, int k,
                                      const superopt_sigma_options* opts,
                                      double* lower, double* upper,
                                      superopt_symbol** witness_out);

superopt_status superopt_dist_l2_s1(const superopt_symbol* g, int degree_cap,
                                    double tol, int max_iter, double* value,
                                    int* iterations, int* converged);

/* Registry of named example symbols. */
superopt_status superopt_zoo_list(char** json_out);
superopt_status superopt_zoo_emit(const char* name, superopt_symbol** out);
/* Pass NULL (or "all") to verify the whole registry. */
superopt_status superopt_zoo_verify(const char* name, double tol,
                                    superopt_report** out);

superopt_status superopt_report_to_json(const superopt_report* rep, int indent,
                                        char** out);
superopt_status superopt_report_table(const superopt_report* rep, char** out);
/* 0 pass, 1 fail, 2 inconclusive, -1 on NULL input. */
int superopt_report_overall(const superopt_report* rep);
void superopt_report_free(superopt_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* SUPEROPT_H */
