#ifndef PDEFORGE_H
#define PDEFORGE_H

/* C API for the pdeforge library.
 *
 * Conventions:
 *   - Every function returns a pdf_status; PDF_OK means success.
 *   - Structured inputs and outputs are JSON strings (see README for the
 *     schemas). Returned strings are heap-allocated; free them with
 *     pdf_string_free.
 *   - Polynomials and circuits travel through opaque handles; free them
 *     with the matching *_free call.
 *   - On failure, pdf_last_error() returns a thread-local message.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdf_status {
  PDF_OK = 0,
  PDF_E_VERIFY = 1,        /* verification ran and found mismatches */
  PDF_E_USAGE = 2,         /* bad arguments / unknown selector */
  PDF_E_RING = 3,          /* incompatible ring or modulus */
  PDF_E_GUARD = 4,         /* brute-force size guard tripped */
  PDF_E_PRECONDITION = 5,  /* operation precondition violated */
  PDF_E_INVALID_PDE = 6,   /* coefficient power is neither 0 nor 1 */
  PDF_E_PARSE = 7,         /* malformed JSON */
  PDF_E_NOCONV = 8,        /* numeric search failed to converge */
  PDF_E_INTERNAL = 9
} pdf_status;

typedef struct pdf_poly pdf_poly;
typedef struct pdf_circuit pdf_circuit;

/* Thread-local message describing the most recent failure. */
const char* pdf_last_error(void);
void pdf_string_free(char* s);

/* ---- polynomials -------------------------------------------------- */
pdf_status pdf_poly_from_json(const char* json, pdf_poly** out);
pdf_status pdf_poly_to_json(const pdf_poly* p, char** out_json);
void pdf_poly_free(pdf_poly* p);

/* PDE evaluation: bit = (coefficient of the monomial on vars)^m. */
pdf_status pdf_pde_evaluate(const pdf_poly* p, const unsigned* vars, size_t nvars,
                            unsigned long m, int* out_bit);

/* table_json: {"n":N,"bits":"1101..."}; method: "sumproduct" | "binary";
 * ring: "q" | "gf2". */
pdf_status pdf_interpolate(const char* table_json, const char* method, const char* ring,
                           pdf_poly** out);

pdf_status pdf_boole_encode(const char* formula_json, unsigned nvars, pdf_poly** out);

/* Exhaustive PDE check against a truth table. Returns PDF_OK with a report
 * even when mismatches exist; the report carries them. */
pdf_status pdf_pde_verify(const pdf_poly* p, const char* table_json, unsigned long m,
                          char** out_report_json);

/* ---- circuits ------------------------------------------------------ */
pdf_status pdf_circuit_from_json(const char* json, pdf_circuit** out);
pdf_status pdf_circuit_to_json(const pdf_circuit* c, char** out_json);
void pdf_circuit_free(pdf_circuit* c);

pdf_status pdf_circuit_subset_product(const unsigned* s, size_t slen, unsigned nvars,
                                      pdf_circuit** out);
pdf_status pdf_circuit_superset_product(const unsigned* s, size_t slen, unsigned nvars,
                                        pdf_circuit** out);
pdf_status pdf_circuit_trivial(const pdf_poly* p, pdf_circuit** out);
pdf_status pdf_circuit_expand(const pdf_circuit* c, int reduce, pdf_poly** out);
pdf_status pdf_circuit_size_report(const pdf_circuit* c, char** out_json);

/* request: {"target": <poly>, "rho": r, "d": d, "seeds": k, "tol": t,
 *           "seed": s, "fixed": [{"u":..,"v":..,"w":..,"value":..}]} */
pdf_status pdf_pdp_search(const char* request_json, char** out_result_json);

/* ---- symmetric functions ------------------------------------------- */
/* kind: "le" | "ge" | "eq". Output carries the binomial and monomial basis
 * vectors, plus numeric roots when want_roots is nonzero. */
pdf_status pdf_cardinality(const char* kind, unsigned s, unsigned n, int want_roots,
                           char** out_json);

/* ---- graphs and orbits ---------------------------------------------- */
/* what: "orbit" | "automorphisms" | "classes" | "polya" | "polynomial" */
pdf_status pdf_orbit_query(const char* graph_json, const char* what, char** out_json);

/* kind: "iso" | "sub" | "super". */
pdf_status pdf_iso_pde(const char* kind, const char* s_json, const char* t_json,
                       unsigned long m, int* out_bit);

pdf_status pdf_np_certificate(const char* s_json, const char* t_json, char** out_json);

/* request: {"graph": <graph>, "kind": "iso"|"sub"|"super", "rho": r, "d": d}
 * (kind/rho/d optional). Reports the Legendre bound and, when rho and d are
 * present, the constraint-count comparison. */
pdf_status pdf_bounds(const char* request_json, char** out_json);

pdf_status pdf_prop3_verify(unsigned nvars, const unsigned* subset, size_t slen,
                            char** out_json);

pdf_status pdf_resolvent_check(const char* graph_json, unsigned t_max, char** out_json);

/* ---- matrix algebra -------------------------------------------------- */
/* method: "grassmann" | "grassmann-literal" | "vandermonde" | "cofactor". */
pdf_status pdf_det(const char* matrix_json, const char* method, char** out_value);
pdf_status pdf_perm(const char* matrix_json, char** out_value);
pdf_status pdf_ftree(const char* matrix_json, int* out_bit);
pdf_status pdf_fcycles(const char* matrix_json, int* out_bit);
/* bits: row-major 0/1 string of length n^2. */
pdf_status pdf_fdet2(const char* bits, int* out_bit);
pdf_status pdf_roots_transcendental(unsigned d, double tol, double grid_step,
                                    char** out_json);

/* ---- bundled verification -------------------------------------------- */
/* suite: "quick" | "full". Returns PDF_OK when every criterion passes,
 * PDF_E_VERIFY otherwise; the report is produced either way. */
pdf_status pdf_selftest(const char* suite, unsigned long seed, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* PDEFORGE_H */
