/* C interface to the graded Poisson structure checker.
 *
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads concurrently; a single handle must not be mutated while
 * shared (none of these functions mutate an existing handle).
 *
 * Every char* the library hands out is heap-allocated and must be released
 * with psa_str_free, except psa_version (static storage).
 */
#ifndef PSA_H
#define PSA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct psa_handle psa_handle;

/* Parse a structure file (schema "psa/1") from a JSON string.
 * Returns 0 and sets *out on success; returns 2 and sets *err_out on
 * failure. Either output pointer may be NULL if the caller does not want
 * that result. */
int psa_parse(const char* json_text, psa_handle** out, char** err_out);

/* Like psa_parse, reading the bytes from a file path. */
int psa_parse_file(const char* path, psa_handle** out, char** err_out);

/* Release a handle (NULL is allowed). */
void psa_free(psa_handle* h);

/* Canonical serialization of a handle (sorted keys and indices, reduced
 * fractions, trailing newline). Returns NULL only on allocation failure or
 * a NULL handle. */
char* psa_serialize(const psa_handle* h);

/* Run a verification suite: lie, assoc, poisson, lie-bialgebra,
 * inf-bialgebra, poisson-bialgebra, matched-pair, manin, coboundary, pybe,
 * o-operator, post-poisson.
 * Returns 0 (every law holds), 1 (violations found), or 2 (usage or
 * precondition error). *report_out receives the rendered report (the error
 * message when returning 2). options_json may be NULL or an object with
 * "pairing": "koszul"|"plain" and "format": "json"|"text" (default text). */
int psa_verify(const psa_handle* h, const char* suite, const char* options_json,
               char** report_out);

/* Run a construction: double, semidirect, bowtie, dualize, post, post-quasi.
 * Returns 0 and sets *out to a new handle; returns 2 and sets *err_out on
 * failure. options_json may additionally carry "T": "id"|"zero" and
 * "weight": "p/q" for the post construction. */
int psa_construct(const char* what, const psa_handle* h, const char* options_json,
                  psa_handle** out, char** err_out);

/* Evaluate Yang-Baxter equations of the handle's r tensor; which is one of
 * cybe, aybe, pybe. Returns 0/1/2 and renders the nonzero entries like
 * psa_verify. */
int psa_ybe(const psa_handle* h, const char* which, const char* options_json,
            char** result_out);

/* Run a parameter grid search (schema "psa/grid1" JSON). Returns 0 and sets
 * *result_out to the result JSON; returns 2 and sets *err_out on failure.
 * options_json may carry "bound" to override the grid's tuple bound. */
int psa_grid_search(const char* grid_json, const char* options_json,
                    char** result_out, char** err_out);

/* Free any string returned by this library. */
void psa_str_free(char* s);

/* Library version string; static storage, do not free. */
const char* psa_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PSA_H */
