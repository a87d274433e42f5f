/*
 * chordmat C API.
 *
 * Binary matroids, circuit-list matroids and edge-labelled graphs behind
 * opaque handles. Every fallible call returns a cm_status; on failure
 * cm_last_error() describes the problem (per thread, valid until the next
 * failing call on that thread).
 *
 * Element labels crossing this interface are 1-based, as in the file
 * formats. Vertex indices are 0-based positions in the graph's vertex list.
 *
 * Handles are immutable after creation and may be shared between threads.
 * Strings returned through char** must be released with cm_string_free.
 */
#ifndef CHORDMAT_CHORDMAT_H
#define CHORDMAT_CHORDMAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CHORDMAT_BUILDING_LIBRARY)
#    define CM_API __declspec(dllexport)
#  else
#    define CM_API __declspec(dllimport)
#  endif
#else
#  define CM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_ERR_INVALID_ARGUMENT = 1, /* null handle, bad parameter, bad element label */
  CM_ERR_PARSE = 2,            /* unreadable or malformed input file */
  CM_ERR_CAP_EXCEEDED = 3,     /* an enumeration cap would be exceeded */
  CM_ERR_NOT_SIMPLE = 4,       /* operation requires a simple matroid/graph */
  CM_ERR_NOT_BINARY = 5,       /* operation requires a binary matroid */
  CM_ERR_INVALID_INPUT = 6,    /* violates a precondition: not a circuit, not a flat, bad S-labeling, ... */
  CM_ERR_INTERNAL = 7          /* a checked invariant failed or an unexpected exception */
} cm_status;

typedef struct cm_matroid cm_matroid;   /* binary matroid or circuit-list matroid */
typedef struct cm_graph cm_graph;       /* edge-labelled multigraph */
typedef struct cm_setlist cm_setlist;   /* ordered list of element sets */
typedef struct cm_chainlist cm_chainlist;
typedef struct cm_sgraph cm_sgraph;
typedef struct cm_report cm_report;

CM_API const char* cm_version(void);
CM_API const char* cm_last_error(void);
CM_API const char* cm_status_name(cm_status status);
CM_API void cm_string_free(char* s);

/* ---- matroids ---------------------------------------------------------- */

/* Parses a .gf2 matrix (rows of 0/1) into a binary matroid. */
CM_API cm_status cm_matroid_from_gf2_text(const char* text, cm_matroid** out);
/* Parses a .circ circuit list; the circuit axioms are verified. */
CM_API cm_status cm_matroid_from_circ_text(const char* text, cm_matroid** out);
/* Loads a .gf2 or .circ file, chosen by extension. */
CM_API cm_status cm_matroid_load_file(const char* path, cm_matroid** out);
/* Cycle matroid (cocycle = 0) or cocycle matroid (cocycle != 0) of a graph. */
CM_API cm_status cm_matroid_from_graph(const cm_graph* g, int cocycle, cm_matroid** out);
/* Builtins: fano, u24, g0, k<k>, k<a>,<b>, c<k>, p<k> (graphs as cycle or cocycle matroids). */
CM_API cm_status cm_matroid_builtin(const char* name, int cocycle, cm_matroid** out);
CM_API cm_status cm_matroid_dual(const cm_matroid* m, cm_matroid** out);
CM_API void cm_matroid_free(cm_matroid* m);

CM_API int cm_matroid_size(const cm_matroid* m);
CM_API int cm_matroid_rank(const cm_matroid* m);
/* 1 when the matroid is binary (always for matrix input; tested for circuit lists). */
CM_API int cm_matroid_is_binary(const cm_matroid* m);
CM_API int cm_matroid_is_simple(const cm_matroid* m);
CM_API cm_status cm_matroid_canonical_key(const cm_matroid* m, char** out);

CM_API cm_status cm_matroid_rank_of(const cm_matroid* m, const int* elements, size_t count, int* out);
/* Result is a one-set list holding cl(X). */
CM_API cm_status cm_matroid_closure(const cm_matroid* m, const int* elements, size_t count, cm_setlist** out);
CM_API cm_status cm_matroid_circuits(const cm_matroid* m, cm_setlist** out);
/* Rank-2 flats with three or more elements (binary matroids only). */
CM_API cm_status cm_matroid_nontrivial_lines(const cm_matroid* m, cm_setlist** out);

/* ---- chords and chordality --------------------------------------------- */

/* *found = 1 and chord/parts filled when the circuit has a chord; parts
 * holds the two split circuits. parts may be NULL. */
CM_API cm_status cm_find_chord(const cm_matroid* m, const int* circuit, size_t count, int* found, int* chord,
                               cm_setlist** parts);
/* *holds = 1 when every circuit of size >= ell has a chord; otherwise
 * *chordless receives the first chordless one (may be NULL). */
CM_API cm_status cm_ell_chordal(const cm_matroid* m, int ell, int* holds, cm_setlist** chordless);
CM_API cm_status cm_ell_closed(const cm_matroid* m, int ell, int* holds);
/* cl_delta of the circuits with at most ell+1 elements; *equals_all = 1
 * when it is the whole circuit family. */
CM_API cm_status cm_delta_closure(const cm_matroid* m, int ell, cm_setlist** closure, int* equals_all);
/* out[0] = ell-closed, out[1] = (ell+2)-chordal, out[2] = delta-generated. */
CM_API cm_status cm_equivalence(const cm_matroid* m, int ell, int out[3]);

/* ---- M-chains ------------------------------------------------------------ */

/* *found = 0 when the matroid is not supersolvable; otherwise *chain is F0..Fr. */
CM_API cm_status cm_mchain_first(const cm_matroid* m, int* found, cm_setlist** chain);
CM_API cm_status cm_mchains_all(const cm_matroid* m, cm_chainlist** out);
CM_API size_t cm_chainlist_count(const cm_chainlist* list);
CM_API cm_status cm_chainlist_get(const cm_chainlist* list, size_t index, cm_setlist** chain);
CM_API void cm_chainlist_free(cm_chainlist* list);
/* Blocks F_i - F_(i-1) of a chain. */
CM_API cm_status cm_mpartition(const cm_setlist* chain, cm_setlist** partition);
/* *ok = 1 when the chain is a valid M-chain of m. */
CM_API cm_status cm_mchain_validate(const cm_matroid* m, const cm_setlist* chain, int* ok);
/* Sequence of elementary deformations from one M-chain to another. */
CM_API cm_status cm_deformation_path(const cm_matroid* m, const cm_setlist* from, const cm_setlist* to,
                                     cm_chainlist** path);

/* ---- S-graphs -------------------------------------------------------------- */

CM_API cm_status cm_sgraph_of(const cm_matroid* m, const cm_setlist* partition, cm_sgraph** out);
CM_API int cm_sgraph_order(const cm_sgraph* sg);
CM_API size_t cm_sgraph_edge_count(const cm_sgraph* sg);
/* 1-based block indices a < b of the index-th edge. */
CM_API cm_status cm_sgraph_edge(const cm_sgraph* sg, size_t index, int* a, int* b);
CM_API cm_status cm_sgraph_blocks(const cm_sgraph* sg, cm_setlist** blocks);
/* *chordal = 1 when the S-graph is chordal; *last_simplicial = 1 when the
 * last block's neighbours form a clique. */
CM_API cm_status cm_sgraph_check(const cm_sgraph* sg, int* chordal, int* last_simplicial);
CM_API cm_status cm_sgraph_dot(const cm_sgraph* sg, char** out);
CM_API cm_status cm_sgraph_edge_list(const cm_sgraph* sg, char** out);
CM_API void cm_sgraph_free(cm_sgraph* sg);

/* ---- element-set lists ---------------------------------------------------- */

/* Builds a list from `count` sets; set i has sizes[i] labels at sets[i]. */
CM_API cm_status cm_setlist_create(const int* const* sets, const size_t* sizes, size_t count, int n,
                                   cm_setlist** out);
CM_API size_t cm_setlist_count(const cm_setlist* list);
CM_API size_t cm_setlist_item_size(const cm_setlist* list, size_t index);
/* Copies up to `capacity` sorted labels of item `index` into `buffer`. */
CM_API cm_status cm_setlist_item(const cm_setlist* list, size_t index, int* buffer, size_t capacity);
/* Items rendered as {a,b,c} joined by `separator`. */
CM_API cm_status cm_setlist_format(const cm_setlist* list, const char* separator, char** out);
CM_API void cm_setlist_free(cm_setlist* list);

/* ---- graphs ---------------------------------------------------------------- */

CM_API cm_status cm_graph_from_text(const char* text, cm_graph** out);
CM_API cm_status cm_graph_load_file(const char* path, cm_graph** out);
/* Builtin graphs: g0, k<k>, k<a>,<b>, c<k>, p<k>. */
CM_API cm_status cm_graph_builtin(const char* name, cm_graph** out);
CM_API void cm_graph_free(cm_graph* g);
CM_API int cm_graph_order(const cm_graph* g);
CM_API int cm_graph_size(const cm_graph* g);
CM_API const char* cm_graph_vertex_name(const cm_graph* g, int vertex);

/* One S-labeling (maximum-cardinality search); *found = 0 when not chordal.
 * `order` must hold cm_graph_order(g) entries. */
CM_API cm_status cm_graph_slabeling(const cm_graph* g, int* found, int* order, size_t capacity);
CM_API cm_status cm_graph_slabeling_count(const cm_graph* g, uint64_t* count);
/* M-chain of the cycle matroid attached to an S-labeling. */
CM_API cm_status cm_graph_slabel_to_mchain(const cm_graph* g, const int* order, size_t len, cm_setlist** chain);
CM_API cm_status cm_graph_derived_sgraph(const cm_graph* g, const int* order, size_t len, cm_sgraph** out);
CM_API cm_status cm_graph_cone(const cm_graph* g, cm_graph** out);
/* For the S-labeling `order` of g: *isomorphic = 1 when the derived S-graph
 * of the cone under (apex, order...) is isomorphic to g, and *embeds = 1
 * when the derived S-graph of g itself maps into g via P_l -> v_(l+1). */
CM_API cm_status cm_graph_cone_check(const cm_graph* g, const int* order, size_t len, int* isomorphic,
                                     int* embeds);

/* ---- analysis and catalog ------------------------------------------------- */

typedef struct cm_report_summary {
  int n;
  int rank;
  int simple;
  int binary;
  size_t circuit_count;
  int chordal;        /* -1 when not computed */
  int supersolvable;  /* -1 when not computed */
} cm_report_summary;

CM_API cm_status cm_analyze(const cm_matroid* m, cm_report** out);
CM_API cm_status cm_report_summary_get(const cm_report* r, cm_report_summary* out);
/* key_value = 0: aligned text; otherwise key=value lines. */
CM_API cm_status cm_report_format(const cm_report* r, int key_value, char** out);
CM_API void cm_report_free(cm_report* r);

typedef struct cm_catalog_summary {
  size_t entries;
  size_t chordal;
  size_t supersolvable;
  size_t chordal_not_supersolvable;
  size_t violations; /* supersolvable but not chordal; expected 0 */
} cm_catalog_summary;

/* Called once per catalog entry; the report is owned by the library and
 * only valid during the call. Return nonzero to stop the sweep. */
typedef int (*cm_catalog_visitor)(const char* id, const cm_report* report, void* user);

CM_API cm_status cm_catalog_sweep(int max_r, int max_n, cm_catalog_visitor visit, void* user,
                                  cm_catalog_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* CHORDMAT_CHORDMAT_H */
