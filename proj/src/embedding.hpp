// The interval-universality machinery: the anchored tree T' built from
// the core of a large D_n, its join T'' with t1, the arc-substitution map
// phi from oriented paths into the interval [t1, t2], and the report that
// checks order preservation and interval membership pair by pair.

#ifndef TREEHOM_EMBEDDING_HPP
#define TREEHOM_EMBEDDING_HPP

#include <array>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "gadget.hpp"
#include "hom.hpp"

namespace treehom {

struct AnchoredTree {
    Digraph tree;
    int y_prime = -1, z_prime = -1;  // the two degree-1 anchors, equal level
    Digraph base;                    // core of t2 (what everything maps onto)

    // provenance
    int n = 0;
    bool flipped = false;
    int y_tail_len = 0, z_tail_len = 0;
    bool y_tail_forward = true, z_tail_forward = true;
    std::string y_anchor_root, z_anchor_root;  // the labelled vertices the tails hang from
    int join_length = 0;                       // set once t1 is joined in
    bool join_start_forward = true;
    std::string join_attach_gadget, join_attach_t1;
};

// T': core of D_n (n = t1_size + 2|core(t2)| + 1) with labelled vertices
// transported through the retraction, plus two zig-zag tails of length 5
// or 6 ending in fresh anchors y', z' at equal level.
AnchoredTree build_t_prime(const Digraph& t2, int t1_size);

// T'': t1 joined into T' by a zig-zag that avoids the anchors. The join is
// accepted only when the result J satisfies J -> core(t2), J -/-> t1,
// core(t2) -/-> J, and J with y'=z' identified still maps to core(t2)
// (which makes chains of copies map to t2 for every path).
AnchoredTree build_t_double_prime(const Digraph& t1, const AnchoredTree& t_prime,
                                  int max_zigzag = 0);

// One fresh copy of the gadget per arc of the oriented path p; the arc's
// tail is identified with the copy's y' and its head with z'.
Digraph phi(const Digraph& p, const AnchoredTree& gadget);

struct EmbeddingPair {
    int i = 0, j = 0;
    OrderRelation path_rel = OrderRelation::incomparable;
    OrderRelation phi_rel = OrderRelation::incomparable;
    bool match = false;
};

struct EmbeddingReport {
    std::vector<std::string> path_names;             // orientation patterns
    std::vector<EmbeddingPair> pairs;                // all ordered pairs
    std::vector<std::array<bool, 4>> interval;       // t1<=phi, phi-/->t1, phi<=t2, t2-/->phi
    bool all_match = true;
    bool interval_ok = true;
};

EmbeddingReport verify_interval_embedding(const std::vector<Digraph>& paths, const Digraph& t1,
                                          const Digraph& t2, const AnchoredTree& gadget);

std::string report_text(const EmbeddingReport& report);

// Orientation pattern of an oriented path, walking from its
// smallest-index endpoint ("+-+"; "." for a single vertex).
std::string path_pattern(const Digraph& p);

}  // namespace treehom

#endif
