#ifndef THRCNF_THRCNF_H
#define THRCNF_THRCNF_H

/* C interface to the thrcnf library.
 *
 * Every fallible call returns a thrcnf_status. On failure the message is
 * available from thrcnf_last_error() until the next call on the same thread.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with thrcnf_string_free(). Composite results are JSON documents
 * carrying "schema": 1. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define THRCNF_API __declspec(dllexport)
#else
#define THRCNF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum thrcnf_status {
  THRCNF_OK = 0,
  THRCNF_E_INPUT = 1,    /* arguments violate a precondition */
  THRCNF_E_PARSE = 2,    /* malformed DIMACS or JSON */
  THRCNF_E_REFUSED = 3,  /* search exceeds a configured limit */
  THRCNF_E_VERIFY = 4,   /* a claimed property failed re-checking */
  THRCNF_E_INTERNAL = 5
} thrcnf_status;

typedef struct thrcnf_formula thrcnf_formula;

THRCNF_API const char* thrcnf_last_error(void);
/* 1-based line of the last parse error, 0 when unknown. */
THRCNF_API size_t thrcnf_last_error_line(void);
THRCNF_API void thrcnf_string_free(char* s);
THRCNF_API const char* thrcnf_version(void);
THRCNF_API const char* thrcnf_status_name(thrcnf_status s);
/* THRCNF_THREADS when set to a positive integer, else hardware concurrency. */
THRCNF_API unsigned thrcnf_default_threads(void);

/* ---- formulas ---- */

/* Clauses as DIMACS literals, each clause terminated by 0. */
THRCNF_API thrcnf_status thrcnf_formula_new(unsigned n, unsigned width, const int32_t* lits, size_t num_lits,
                                            thrcnf_formula** out);
THRCNF_API thrcnf_status thrcnf_formula_parse(const char* dimacs, thrcnf_formula** out);
THRCNF_API thrcnf_status thrcnf_formula_read(const char* path, thrcnf_formula** out);
THRCNF_API thrcnf_status thrcnf_formula_write(const thrcnf_formula* f, const char* path);
THRCNF_API thrcnf_status thrcnf_formula_to_dimacs(const thrcnf_formula* f, char** out);
THRCNF_API thrcnf_status thrcnf_formula_clone(const thrcnf_formula* f, thrcnf_formula** out);
THRCNF_API void thrcnf_formula_free(thrcnf_formula* f);

THRCNF_API unsigned thrcnf_formula_num_vars(const thrcnf_formula* f);
THRCNF_API unsigned thrcnf_formula_width(const thrcnf_formula* f);
THRCNF_API size_t thrcnf_formula_num_clauses(const thrcnf_formula* f);
THRCNF_API int thrcnf_formula_is_monotone(const thrcnf_formula* f);
/* Copies clause `index` as 0-terminated DIMACS literals into buf (capacity
 * cap); *len receives the number of literals excluding the terminator. */
THRCNF_API thrcnf_status thrcnf_formula_clause(const thrcnf_formula* f, size_t index, int32_t* buf, size_t cap,
                                               size_t* len);

/* Metadata from "c thrcnf key=value" lines. A missing key yields *value = NULL. */
THRCNF_API thrcnf_status thrcnf_formula_meta_get(const thrcnf_formula* f, const char* key, char** value);
THRCNF_API thrcnf_status thrcnf_formula_meta_set(thrcnf_formula* f, const char* key, const char* value);

THRCNF_API thrcnf_status thrcnf_formula_hash(const thrcnf_formula* f, char** out);
/* bits: '0'/'1' string, first character is x1. */
THRCNF_API thrcnf_status thrcnf_formula_evaluate(const thrcnf_formula* f, const char* bits, int* result);
THRCNF_API thrcnf_status thrcnf_formula_count(const thrcnf_formula* f, unsigned t, unsigned threads, uint64_t* count);
/* {"schema","n","t","width","clauses","monotone","width_profile","hash",
 *  "admissible","witness","count", "claimed_count","count_matches"}; the
 * last two only when the formula carries a claimed_count. */
THRCNF_API thrcnf_status thrcnf_formula_check(const thrcnf_formula* f, unsigned t, unsigned threads, char** report);

/* ---- constructions ---- */

/* method: small-threshold (n,t,k), full-window (b = n, k), adaptive (n, alpha,
 * k), product (block product for n,t,k), two-cnf-optimal (n,t), from-cover
 * (design, n, k), from-steiner (design, n). Unused arguments are ignored;
 * alpha and design_path may be NULL. The result carries method, n, t, k and
 * claimed_count metadata. */
THRCNF_API thrcnf_status thrcnf_construct(const char* method, unsigned n, unsigned t, unsigned k, const char* alpha,
                                          const char* design_path, thrcnf_formula** out);

/* ---- transforms ---- */

/* ops: comma separated list from acyclify, monotonize2, monotonize-high,
 * remove-redundant, widen, normalize; applied left to right. log_json may be
 * NULL and receives {"schema":1,"steps":[{op,detail,clauses,nonmonotone}]}. */
THRCNF_API thrcnf_status thrcnf_transform(const thrcnf_formula* in, const char* ops, unsigned t, unsigned k,
                                          int check_invariants, thrcnf_formula** out, char** log_json);

/* Edge lists: "x1 -> ~x2" per implication edge; "a b" per conflict edge. */
THRCNF_API thrcnf_status thrcnf_implication_graph(const thrcnf_formula* f, char** edges);
THRCNF_API thrcnf_status thrcnf_conflict_graph(const thrcnf_formula* f, char** edges);
THRCNF_API thrcnf_status thrcnf_count_mis(const thrcnf_formula* f, unsigned s, uint64_t* count);

/* ---- searches ---- */

/* quantity: splus {n,t,k}, turan {n,q,k}, cover {n,q,k}, oracle {n,t},
 * mis {n,s}, uniqueness {n,t,k}, identity {n,k}. params_json and limits_json
 * are JSON objects; limits_json may be NULL and accepts splus_max_n_k2,
 * splus_max_n_k3, splus_max_n_other, set_cover_max_n, oracle_max_slice,
 * mis_max_n, max_nodes and force. When witness_path is set the witness is
 * written there (DIMACS, set-system JSON or edge list) and referenced from
 * the certificate instead of being inlined. */
THRCNF_API thrcnf_status thrcnf_search(const char* quantity, const char* params_json, const char* limits_json,
                                       const char* witness_path, char** result_json);

/* ---- covers ---- */

/* base may be NULL, in which case the best block-product construction for
 * (n,t,k) is used. method: "random" or "greedy". count = 0 selects the upper
 * bound ceil(C(n,t) n / s) for random covers; pool = 0 selects 4 * that for
 * greedy covers. out_dir may be NULL (nothing written). */
THRCNF_API thrcnf_status thrcnf_cover_build(const thrcnf_formula* base, unsigned n, unsigned t, unsigned k,
                                            const char* method, uint64_t seed, size_t count, size_t pool,
                                            unsigned threads, const char* out_dir, char** manifest_json);

/* ---- bounds and tables ---- */

/* Construction and upper bounds for S, F bounds, and, when alpha is given,
 * the entropy sandwich and the conditional ratio for (n, alpha, k). */
THRCNF_API thrcnf_status thrcnf_bounds(unsigned n, unsigned t, unsigned k, const char* alpha, char** json);

THRCNF_API thrcnf_status thrcnf_table(const char* ks, const char* ns, const char* t_rule, int constructions_only,
                                      const char* limits_json, unsigned threads, const char* cert_dir, char** csv,
                                      char** json);

/* ---- acceptance harness ---- */

typedef void (*thrcnf_criterion_cb)(int id, const char* title, int passed, const char* detail, double seconds,
                                    void* user);

/* Runs the listed criteria (all when num_only is 0). mutate = 0 disables the
 * mutation test. *all_passed is 1 when every criterion passed. */
THRCNF_API thrcnf_status thrcnf_verify_theorems(int quick, unsigned threads, const int* only, size_t num_only,
                                                int mutate, uint64_t seed, thrcnf_criterion_cb cb, void* user,
                                                int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
