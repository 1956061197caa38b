/*
 * treehom - homomorphisms, cores and density/universality witnesses for
 * finite digraphs and oriented trees.
 *
 * C interface over the C++ core: opaque handles, status codes, and text
 * in/out. Strings returned through char** are malloc'd; release them with
 * th_string_free. Pointers returned from accessor functions (th_..._tree,
 * th_pathlist_get, ...) are borrowed views into the parent handle and stay
 * valid until that handle is freed.
 *
 * Graphs travel as edge-list text: one "u v" line per arc u->v, a bare
 * "u" line declares an isolated vertex, '#' starts a comment line.
 */

#ifndef TREEHOM_H
#define TREEHOM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum th_status {
    TH_OK = 0,
    TH_ERR_PARSE = 1,
    TH_ERR_PRECONDITION = 2,
    TH_ERR_CAP_EXCEEDED = 3,
    TH_ERR_SEARCH_FAILED = 4,
    TH_ERR_INTERNAL = 5
} th_status;

typedef enum th_order {
    TH_ORDER_EQUIVALENT = 0,
    TH_ORDER_STRICTLY_BELOW = 1,
    TH_ORDER_STRICTLY_ABOVE = 2,
    TH_ORDER_INCOMPARABLE = 3
} th_order;

typedef struct th_digraph th_digraph;
typedef struct th_gadget th_gadget;
typedef struct th_anchored th_anchored;
typedef struct th_certificate th_certificate;
typedef struct th_pathlist th_pathlist;

const char* th_version(void);
const char* th_order_name(th_order rel);

void th_string_free(char* s);
void th_digraph_free(th_digraph* g);
void th_gadget_free(th_gadget* g);
void th_anchored_free(th_anchored* a);
void th_certificate_free(th_certificate* c);
void th_pathlist_free(th_pathlist* l);

/* --- digraphs ------------------------------------------------------- */

th_status th_digraph_parse(const char* text, th_digraph** out, char** errmsg);
th_status th_digraph_to_edge_list(const th_digraph* g, char** out);
th_status th_digraph_to_dot(const th_digraph* g, char** out);
int th_digraph_vertex_count(const th_digraph* g);
int th_digraph_arc_count(const th_digraph* g);

th_status th_classify(const th_digraph* g, int* connected, int* is_tree,
                      int* is_oriented_path, int* has_cycle);
/* Height of a tree (max level); fails on non-trees. */
th_status th_tree_height(const th_digraph* g, int* height, char** errmsg);
th_status th_reverse(const th_digraph* g, th_digraph** out);
th_status th_disjoint_union(const th_digraph* a, const th_digraph* b, th_digraph** out);

/* --- homomorphism order --------------------------------------------- */

/* witness (optional) receives "u -> v" lines when a homomorphism exists */
th_status th_hom_exists(const th_digraph* g, const th_digraph* h, int* exists, char** witness);
/* cap = 0 uses the built-in default; refuses with TH_ERR_CAP_EXCEEDED
 * instead of sampling when |V(h)|^|V(g)| is larger */
th_status th_brute_force_hom(const th_digraph* g, const th_digraph* h, uint64_t cap,
                             int* exists, char** errmsg);
th_status th_compare(const th_digraph* g, const th_digraph* h, th_order* rel);
th_status th_core(const th_digraph* g, th_digraph** out);
th_status th_is_core(const th_digraph* g, int* result);
th_status th_is_rigid(const th_digraph* g, int* result);
th_status th_is_proper_tree(const th_digraph* g, int* result, char** errmsg);

/* --- gadgets and density witnesses ----------------------------------- */

/* D_n over the core of the proper tree t2, with its 6n labelled vertices */
th_status th_build_dn(const th_digraph* t2, int n, th_gadget** out, char** errmsg);
const th_digraph* th_gadget_tree(const th_gadget* g);
int th_gadget_block_count(const th_gadget* g);
/* one "role vertex" line per labelled vertex, block order */
th_status th_gadget_labels_text(const th_gadget* g, char** out);

/* Density witness t1 < T < t2. max_zigzag = 0 picks the default budget.
 * On TH_ERR_SEARCH_FAILED the out certificate still carries the valid
 * forest witness t1 + D_n. */
th_status th_density_witness(const th_digraph* t1, const th_digraph* t2, int max_zigzag,
                             th_certificate** out, char** errmsg);
const th_digraph* th_certificate_witness(const th_certificate* c);
int th_certificate_witness_is_tree(const th_certificate* c);
th_status th_certificate_text(const th_certificate* c, char** out);
/* Re-verifies the four facts with the solver; oracle_cap > 0 additionally
 * cross-checks with the brute-force oracle where it fits. */
th_status th_certificate_verify(const th_certificate* c, uint64_t oracle_cap, int* ok);

/* --- interval embedding ---------------------------------------------- */

/* The arc-substitution gadget for the interval [t1, t2] */
th_status th_build_phi_gadget(const th_digraph* t1, const th_digraph* t2, int max_zigzag,
                              th_anchored** out, char** errmsg);
const th_digraph* th_anchored_tree(const th_anchored* a);
th_status th_phi_apply(const th_anchored* a, const th_digraph* path, th_digraph** out,
                       char** errmsg);
/* Pairwise order agreement plus interval membership over the given paths;
 * report receives the full text table. */
th_status th_verify_embedding(const th_anchored* a, const th_digraph* t1, const th_digraph* t2,
                              const th_digraph* const* paths, int npaths, char** report,
                              int* all_ok);

/* --- path generation -------------------------------------------------- */

th_status th_enumerate_path_cores(int max_arcs, th_pathlist** out);
th_status th_random_paths(int count, int max_len, uint64_t seed, th_pathlist** out);
int th_pathlist_size(const th_pathlist* l);
const th_digraph* th_pathlist_get(const th_pathlist* l, int i);

#ifdef __cplusplus
}
#endif

#endif /* TREEHOM_H */
