// extern "C" surface over the C++ core. Every entry point catches and
// converts exceptions; no exception crosses the ABI.

#include "treehom.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "digraph.hpp"
#include "embedding.hpp"
#include "enumerate.hpp"
#include "gadget.hpp"
#include "hom.hpp"

using namespace treehom;

struct th_digraph {
    Digraph g;
};
struct th_gadget {
    LabelledGadget gadget;
    th_digraph tree_view;
};
struct th_anchored {
    AnchoredTree anchored;
    th_digraph tree_view;
};
struct th_certificate {
    DensityCertificate cert;
    th_digraph witness_view;
};
struct th_pathlist {
    std::vector<th_digraph> items;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** errmsg, const std::string& what) {
    if (errmsg) *errmsg = dup_string(what);
}

th_status status_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::parse: return TH_ERR_PARSE;
        case ErrorKind::precondition: return TH_ERR_PRECONDITION;
        case ErrorKind::cap_exceeded: return TH_ERR_CAP_EXCEEDED;
        case ErrorKind::search_failed: return TH_ERR_SEARCH_FAILED;
        case ErrorKind::internal: return TH_ERR_INTERNAL;
    }
    return TH_ERR_INTERNAL;
}

template <typename Fn>
th_status guarded(char** errmsg, Fn&& fn) {
    try {
        fn();
        return TH_OK;
    } catch (const Error& e) {
        set_err(errmsg, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return TH_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* th_version(void) { return "treehom 1.0.0"; }

const char* th_order_name(th_order rel) {
    switch (rel) {
        case TH_ORDER_EQUIVALENT: return "equivalent";
        case TH_ORDER_STRICTLY_BELOW: return "strictly_below";
        case TH_ORDER_STRICTLY_ABOVE: return "strictly_above";
        case TH_ORDER_INCOMPARABLE: return "incomparable";
    }
    return "?";
}

void th_string_free(char* s) { std::free(s); }
void th_digraph_free(th_digraph* g) { delete g; }
void th_gadget_free(th_gadget* g) { delete g; }
void th_anchored_free(th_anchored* a) { delete a; }
void th_certificate_free(th_certificate* c) { delete c; }
void th_pathlist_free(th_pathlist* l) { delete l; }

th_status th_digraph_parse(const char* text, th_digraph** out, char** errmsg) {
    return guarded(errmsg, [&] {
        auto* g = new th_digraph{parse_digraph(text ? text : "")};
        *out = g;
    });
}

th_status th_digraph_to_edge_list(const th_digraph* g, char** out) {
    return guarded(nullptr, [&] { *out = dup_string(to_edge_list(g->g)); });
}

th_status th_digraph_to_dot(const th_digraph* g, char** out) {
    return guarded(nullptr, [&] { *out = dup_string(to_dot(g->g)); });
}

int th_digraph_vertex_count(const th_digraph* g) { return g->g.vertex_count(); }
int th_digraph_arc_count(const th_digraph* g) { return g->g.arc_count(); }

th_status th_classify(const th_digraph* g, int* connected, int* is_tree, int* is_oriented_path,
                      int* has_cycle) {
    return guarded(nullptr, [&] {
        StructureClass sc = classify(g->g);
        if (connected) *connected = sc.connected;
        if (is_tree) *is_tree = sc.is_tree;
        if (is_oriented_path) *is_oriented_path = sc.is_oriented_path;
        if (has_cycle) *has_cycle = sc.has_cycle;
    });
}

th_status th_tree_height(const th_digraph* g, int* height, char** errmsg) {
    return guarded(errmsg, [&] { *height = level_map(g->g).height; });
}

th_status th_reverse(const th_digraph* g, th_digraph** out) {
    return guarded(nullptr, [&] { *out = new th_digraph{reverse(g->g)}; });
}

th_status th_disjoint_union(const th_digraph* a, const th_digraph* b, th_digraph** out) {
    return guarded(nullptr, [&] { *out = new th_digraph{disjoint_union(a->g, b->g)}; });
}

th_status th_hom_exists(const th_digraph* g, const th_digraph* h, int* exists, char** witness) {
    return guarded(nullptr, [&] {
        auto map = find_hom(g->g, h->g);
        *exists = map.has_value();
        if (witness) *witness = map ? dup_string(hom_to_text(g->g, h->g, *map)) : nullptr;
    });
}

th_status th_brute_force_hom(const th_digraph* g, const th_digraph* h, uint64_t cap, int* exists,
                             char** errmsg) {
    return guarded(errmsg, [&] {
        *exists = brute_force_hom(g->g, h->g, cap ? cap : kDefaultBruteForceCap);
    });
}

th_status th_compare(const th_digraph* g, const th_digraph* h, th_order* rel) {
    return guarded(nullptr, [&] { *rel = static_cast<th_order>(compare(g->g, h->g)); });
}

th_status th_core(const th_digraph* g, th_digraph** out) {
    return guarded(nullptr, [&] { *out = new th_digraph{core(g->g)}; });
}

th_status th_is_core(const th_digraph* g, int* result) {
    return guarded(nullptr, [&] { *result = is_core(g->g); });
}

th_status th_is_rigid(const th_digraph* g, int* result) {
    return guarded(nullptr, [&] { *result = is_rigid(g->g); });
}

th_status th_is_proper_tree(const th_digraph* g, int* result, char** errmsg) {
    return guarded(errmsg, [&] { *result = is_proper_tree(g->g); });
}

th_status th_build_dn(const th_digraph* t2, int n, th_gadget** out, char** errmsg) {
    return guarded(errmsg, [&] {
        if (!classify(t2->g).is_tree || !is_proper_tree(t2->g))
            throw Error(ErrorKind::precondition, "build_dn requires a proper tree");
        auto* g = new th_gadget;
        g->gadget = gadget_over_core(core(t2->g), n);
        g->tree_view.g = g->gadget.tree;
        *out = g;
    });
}

const th_digraph* th_gadget_tree(const th_gadget* g) { return &g->tree_view; }
int th_gadget_block_count(const th_gadget* g) { return g->gadget.n; }

th_status th_gadget_labels_text(const th_gadget* g, char** out) {
    return guarded(nullptr, [&] {
        std::ostringstream text;
        for (size_t i = 0; i < g->gadget.labels.size(); ++i)
            text << g->gadget.roles[i] << " " << g->gadget.tree.name(g->gadget.labels[i]) << "\n";
        *out = dup_string(text.str());
    });
}

th_status th_density_witness(const th_digraph* t1, const th_digraph* t2, int max_zigzag,
                             th_certificate** out, char** errmsg) {
    return guarded(errmsg, [&] {
        DensityResult result = density_witness(t1->g, t2->g, max_zigzag);
        auto* c = new th_certificate;
        c->cert = result.cert;
        c->witness_view.g = result.cert.witness;
        *out = c;
        if (!result.joined)
            throw Error(ErrorKind::search_failed, result.diagnostics);
    });
}

const th_digraph* th_certificate_witness(const th_certificate* c) { return &c->witness_view; }
int th_certificate_witness_is_tree(const th_certificate* c) { return c->cert.witness_is_tree; }

th_status th_certificate_text(const th_certificate* c, char** out) {
    return guarded(nullptr, [&] { *out = dup_string(certificate_text(c->cert)); });
}

th_status th_certificate_verify(const th_certificate* c, uint64_t oracle_cap, int* ok) {
    return guarded(nullptr, [&] { *ok = verify_certificate(c->cert, oracle_cap); });
}

th_status th_build_phi_gadget(const th_digraph* t1, const th_digraph* t2, int max_zigzag,
                              th_anchored** out, char** errmsg) {
    return guarded(errmsg, [&] {
        AnchoredTree t_prime = build_t_prime(t2->g, t1->g.vertex_count());
        auto* a = new th_anchored;
        a->anchored = build_t_double_prime(t1->g, t_prime, max_zigzag);
        a->tree_view.g = a->anchored.tree;
        *out = a;
    });
}

const th_digraph* th_anchored_tree(const th_anchored* a) { return &a->tree_view; }

th_status th_phi_apply(const th_anchored* a, const th_digraph* path, th_digraph** out,
                       char** errmsg) {
    return guarded(errmsg, [&] { *out = new th_digraph{phi(path->g, a->anchored)}; });
}

th_status th_verify_embedding(const th_anchored* a, const th_digraph* t1, const th_digraph* t2,
                              const th_digraph* const* paths, int npaths, char** report,
                              int* all_ok) {
    return guarded(nullptr, [&] {
        std::vector<Digraph> ps;
        ps.reserve(static_cast<size_t>(npaths));
        for (int i = 0; i < npaths; ++i) ps.push_back(paths[i]->g);
        EmbeddingReport r = verify_interval_embedding(ps, t1->g, t2->g, a->anchored);
        if (report) *report = dup_string(report_text(r));
        if (all_ok) *all_ok = r.all_match && r.interval_ok;
    });
}

th_status th_enumerate_path_cores(int max_arcs, th_pathlist** out) {
    return guarded(nullptr, [&] {
        auto* l = new th_pathlist;
        for (Digraph& p : enumerate_path_cores(max_arcs)) l->items.push_back({std::move(p)});
        *out = l;
    });
}

th_status th_random_paths(int count, int max_len, uint64_t seed, th_pathlist** out) {
    return guarded(nullptr, [&] {
        auto* l = new th_pathlist;
        for (Digraph& p : random_paths(count, max_len, seed)) l->items.push_back({std::move(p)});
        *out = l;
    });
}

int th_pathlist_size(const th_pathlist* l) { return static_cast<int>(l->items.size()); }

const th_digraph* th_pathlist_get(const th_pathlist* l, int i) {
    if (i < 0 || i >= static_cast<int>(l->items.size())) return nullptr;
    return &l->items[static_cast<size_t>(i)];
}

}  // extern "C"
