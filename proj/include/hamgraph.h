/* hamgraph: exact invariants of Hamiltonian circle actions on symplectic
 * four-manifolds, computed from their labelled moment graphs.
 *
 * C interface: opaque handles, integer status codes, caller-freed strings.
 * Every operation is exposed through hg_run(); graphs are parsed once into
 * handles and passed by pointer.
 */
#ifndef HAMGRAPH_H
#define HAMGRAPH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hg_graph hg_graph;

typedef enum hg_status {
  HG_OK = 0,          /* success */
  HG_FAIL = 1,        /* negative verdict or validation failure */
  HG_USAGE = 2,       /* malformed request */
  HG_ERROR = 3        /* domain error; see the error string */
} hg_status;

/* Library version string, statically allocated. */
const char* hg_version(void);

/* Parse a graph file (JSON, chains or decorated variant).  On success
 * returns a handle; on failure returns NULL and, when err is non-NULL,
 * stores a malloc'd message the caller frees with hg_string_free. */
hg_graph* hg_graph_parse(const char* json_text, char** err);

hg_graph* hg_graph_clone(const hg_graph* g);
void hg_graph_free(hg_graph* g);

/* Canonical JSON serialization; free with hg_string_free. */
char* hg_graph_json(const hg_graph* g);

/* Canonical-form equality. */
int hg_graph_equal(const hg_graph* a, const hg_graph* b);

/* Run a named operation.
 *   op         operation name, e.g. "validate", "weak-iso", "blowup"
 *   a, b       input graphs (b may be NULL; both NULL for input-free ops)
 *   extra      raw text of a non-graph input file (algebraic data), or NULL
 *   args_json  JSON object with the operation's options, or NULL
 *   text       human-readable report (malloc'd, may be NULL if unwanted)
 *   machine    machine-readable JSON (malloc'd, may be NULL if unwanted)
 *   err        error message on HG_USAGE / HG_ERROR
 * Returns HG_OK, or HG_FAIL for negative verdicts, or an error status. */
hg_status hg_run(const char* op, const hg_graph* a, const hg_graph* b, const char* extra,
                 const char* args_json, char** text, char** machine, char** err);

void hg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HAMGRAPH_H */
