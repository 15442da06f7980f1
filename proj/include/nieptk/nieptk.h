/* nieptk - circulant / block-circulant NIEP toolkit, C interface.
 *
 * All data crosses the boundary as JSON documents of the form
 *   {"kind": "...", "payload": {...}, "meta": {...}}
 * wrapped in opaque niep_doc handles. Functions return 0 on success or one
 * of the NIEP_ERR_* codes; niep_last_error() describes the latest failure
 * on the calling thread.
 */
#ifndef NIEPTK_H
#define NIEPTK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define NIEP_OK 0
#define NIEP_ERR_INVALID 2        /* malformed input or violated precondition */
#define NIEP_ERR_NUMERIC 3        /* iteration failure or residue above tolerance */
#define NIEP_ERR_NOT_REALIZABLE 4 /* a realizability verdict came back negative */

typedef struct niep_doc niep_doc;

typedef struct niep_options {
    double tol;                 /* default 1e-10 */
    int exact;                  /* rational backend where inputs are rational */
    int require_nonnegative;    /* realize-circulant: fail when the row is not */
    unsigned long seed;         /* randomized property commands */
    unsigned long max_candidates; /* rearrangement search budget */
} niep_options;

void niep_options_init(niep_options* opts);

/* Documents */
int niep_doc_parse(const char* json_text, niep_doc** out);
int niep_doc_render(const niep_doc* doc, char** json_text);
const char* niep_doc_kind(const niep_doc* doc);
void niep_doc_free(niep_doc* doc);
void niep_string_free(char* text);

const char* niep_last_error(void);
const char* niep_version(void);

/* Operations. Output documents are owned by the caller. */
int niep_circulant_eigs(const niep_doc* circulant, const niep_options* opts, niep_doc** out);
int niep_realize_circulant(const niep_doc* spectrum, const niep_options* opts, niep_doc** out);
int niep_guo_circulant(const niep_doc* tail, const niep_options* opts, niep_doc** out);
int niep_guo_block(const niep_doc* spectrum, const niep_options* opts, niep_doc** out);
/* op: "assemble" | "spectrum" | "classify" | "check-nonneg" */
int niep_block_op(const niep_doc* family, const char* op, const niep_options* opts, niep_doc** out);
/* op: "validate" | "phi" | "realize" | "min-perron" */
int niep_ematrix_op(const niep_doc* ematrix, const char* op, const niep_options* opts,
                    niep_doc** out);
int niep_verify(const niep_doc* block_matrix, const niep_doc* spectrum, const niep_options* opts,
                niep_doc** out);

#ifdef __cplusplus
}
#endif

#endif /* NIEPTK_H */
