// Homomorphism decisions, enumeration, the homomorphism order, cores and
// rigidity.
//
// Two complete decision routes are kept side by side: a polynomial
// candidate-propagation algorithm for forest sources and a backtracking
// search with forward checking for everything else. find_hom() picks the
// route; both are exposed so tests can cross-check them. brute_force_hom
// is the definitional oracle: it tries every vertex map and refuses
// (never samples) above its cap.

#ifndef TREEHOM_HOM_HPP
#define TREEHOM_HOM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace treehom {

enum class OrderRelation { equivalent, strictly_below, strictly_above, incomparable };

std::string to_string(OrderRelation r);

// Vertex map g -> h as a vector indexed by source vertex.
using VertexMap = std::vector<int>;

bool is_valid_hom(const Digraph& g, const Digraph& h, const VertexMap& map);
std::string hom_to_text(const Digraph& g, const Digraph& h, const VertexMap& map);

std::optional<VertexMap> find_hom(const Digraph& g, const Digraph& h);
// Forest sources only. `pinned` fixes the image of selected source
// vertices before propagation.
std::optional<VertexMap> find_hom_tree(const Digraph& g, const Digraph& h,
                                       const std::vector<std::pair<int, int>>& pinned = {});
std::optional<VertexMap> find_hom_backtracking(const Digraph& g, const Digraph& h);  // any source

inline bool hom_exists(const Digraph& g, const Digraph& h) { return find_hom(g, h).has_value(); }

inline constexpr uint64_t kDefaultBruteForceCap = 50'000'000;

// Tries all |V(h)|^|V(g)| maps. Throws Error(cap_exceeded) when the state
// space is larger than `cap`.
bool brute_force_hom(const Digraph& g, const Digraph& h, uint64_t cap = kDefaultBruteForceCap);

struct EnumLimits {
    uint64_t max_nodes = 50'000'000;
    uint64_t max_homs = 5'000'000;
};

// Enumerates every homomorphism g -> h (complete backtracking), calling
// `visit` for each; stop early by returning false from the callback.
// Returns the number of homomorphisms visited. Throws Error(cap_exceeded)
// if a limit is hit before the enumeration finishes.
uint64_t enumerate_homs(const Digraph& g, const Digraph& h,
                        const std::function<bool(const VertexMap&)>& visit,
                        const EnumLimits& limits = {});

OrderRelation compare(const Digraph& g, const Digraph& h);

// True iff every endomorphism of g is surjective.
bool is_core(const Digraph& g);

// The core: an induced subgraph equivalent to g with no smaller equivalent
// induced subgraph. Deterministic: up to kCoreLexExactLimit vertices the
// copy whose vertex set is lexicographically least in declared order is
// returned (exact scan over subsets of the core's size); above the limit
// the result of the image-shrinking loop, which is deterministic but not
// canonical across relabelings.
inline constexpr int kCoreLexExactLimit = 12;
Digraph core(const Digraph& g);

// True iff g is a core and its only automorphism is the identity. Trees
// use a canonical-encoding argument; other digraphs search for a
// non-identity bijective endomorphism.
bool is_rigid(const Digraph& g);

// True iff the core of the tree t is not an oriented path.
bool is_proper_tree(const Digraph& t);

// Underlying connected components: component id per vertex (ids in order
// of first appearance) plus whether the underlying graph is acyclic.
struct Components {
    std::vector<int> comp;
    int count = 0;
    bool acyclic = true;
};
Components underlying_components(const Digraph& d);

}  // namespace treehom

#endif
