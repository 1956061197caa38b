// Gadget constructions over a proper tree: the branching-vertex
// decomposition into planks, the chained block gadget D_n with its 6n
// labelled vertices, zig-zag joins, and the verified density pipeline
// producing a certificate t1 < T < t2.

#ifndef TREEHOM_GADGET_HPP
#define TREEHOM_GADGET_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "hom.hpp"

namespace treehom {

// The subtree of all vertices lying on or beyond a path that starts at u
// and passes through a vertex of s. The base vertex u is always part of
// the plank.
Digraph plank(const Digraph& t, int u, const std::vector<int>& s);
std::vector<int> plank_vertices(const Digraph& t, int u, const std::vector<int>& s);

// The split of a proper core around a branching vertex x with in-arcs
// from u and w: planks U = P(x,{u}) \ {x}, W = P(x,{w}) \ {x},
// X = P(x, X') where X' holds the remaining neighbours of x.
struct Decomposition {
    Digraph base;             // the core, after orientation normalization
    bool flipped = false;     // whether all arcs were reversed to get two in-arcs
    int x = -1, u = -1, w = -1;
    std::vector<int> x_prime;
    Digraph plank_u, plank_x, plank_w;
};

Decomposition decompose(const Digraph& t2);

// Structural identity: the three planks plus the arcs ux, wx reassemble
// the base exactly.
bool reassembles(const Decomposition& dec);

struct LabelledGadget {
    Digraph tree;
    Digraph base;                    // the decomposition base it maps onto
    int n = 0;                       // block count
    bool flipped = false;            // built through the orientation flip
    std::vector<int> labels;         // 6n vertices in block order
    std::vector<std::string> roles;  // "w1","a1","u1","x1","b1","x'1",...
};

LabelledGadget build_d1(const Decomposition& dec);
LabelledGadget build_dn(const Decomposition& dec, int n);

// decompose + build_dn + undo of the orientation flip, so the result maps
// onto the given core itself.
LabelledGadget gadget_over_core(const Digraph& t2_core, int n);

struct LemmaReport {
    bool hypothesis_ok = false;       // base -/-> t1
    uint64_t hom_count = 0;
    bool all_injective = true;
    std::string first_violation;      // empty when none
    bool counting_applies = false;    // 6n > |V(t1)| (and hypothesis holds)
    bool counting_consistent = true;  // counting_applies implies hom_count == 0
};

// Enumerates every homomorphism gadget.tree -> t1 and reports whether each
// maps the labelled vertices injectively. Throws Error(cap_exceeded) when
// the enumeration limits are hit.
LemmaReport check_labelled_lemma(const LabelledGadget& gadget, const Digraph& t1,
                                 const EnumLimits& limits = {});

// Oriented path of k arcs with strictly alternating orientations; the
// first arc points forward iff start_forward.
Digraph build_zigzag(int k, bool start_forward);

struct JoinResult {
    Digraph tree;
    int length = 0;
    bool start_forward = true;
    std::string attach_a, attach_b;  // vertex names inside the joined tree
};

// Searches zig-zag candidates in (length, orientation, attachment) order
// and returns the first one `accept` certifies. Attachment vertices are
// fixed when given, otherwise searched in declared order. Throws
// Error(search_failed) on exhaustion.
JoinResult join_search(const Digraph& a, std::optional<int> va, const Digraph& b,
                       std::optional<int> vb, int max_len,
                       const std::function<bool(const Digraph&)>& accept,
                       const std::string& what);

// The spec'd join: first candidate J with J -> must_map_to and
// J -/-> must_not_map_to.
JoinResult join_by_zigzag(const Digraph& a, std::optional<int> va, const Digraph& b,
                          std::optional<int> vb, const Digraph& must_map_to,
                          const Digraph& must_not_map_to, int max_len);

// The four facts of a density certificate. The positive facts carry
// solver witnesses; the negative ones were solver-verified at build time
// and can be re-derived by any homomorphism checker.
struct DensityCertificate {
    Digraph t1, t2, t2_core;
    Digraph witness;                  // the tree T (or the forest t1 + D_n)
    bool witness_is_tree = false;
    int n = 0;
    bool flipped = false;
    int zigzag_length = 0;            // 0 when the witness is the forest
    bool zigzag_start_forward = true;
    std::string attach_t1, attach_gadget;
    VertexMap hom_t1_to_witness;
    VertexMap hom_witness_to_t2;      // into t2_core (a subgraph of t2)
};

struct DensityResult {
    bool joined = false;       // witness is a single tree
    DensityCertificate cert;   // forest-witness fallback when !joined
    std::string diagnostics;
};

// The full pipeline: core t2, decompose, build D_n with n = |V(t1)|+1,
// verify the forest facts, then search for the zig-zag join. max_zigzag 0
// means 4 * (|V(t1)| + |V(D_n)|).
DensityResult density_witness(const Digraph& t1, const Digraph& t2, int max_zigzag = 0);

std::string certificate_text(const DensityCertificate& cert);

// Re-verifies the four facts with the solver; with oracle_cap > 0 also
// cross-checks each fact with the brute-force oracle whenever its state
// space fits under the cap.
bool verify_certificate(const DensityCertificate& cert, uint64_t oracle_cap = 0);

}  // namespace treehom

#endif
