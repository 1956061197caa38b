// Finite digraphs with named vertices: the carrier type for everything else.
//
// A Digraph is a finite ordered vertex set plus an irreflexive arc relation.
// Vertices are opaque strings kept in first-appearance order; all algorithms
// work on dense integer indices into that order. Values are immutable once
// built (the mutating calls are for construction only) and every operation
// below is a pure function.

#ifndef TREEHOM_DIGRAPH_HPP
#define TREEHOM_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace treehom {

enum class ErrorKind {
    parse,          // malformed input text
    precondition,   // operation called outside its contract
    cap_exceeded,   // an exhaustive search refused to run above its cap
    search_failed,  // a bounded search exhausted its budget without a result
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class Digraph {
public:
    Digraph() = default;

    // Construction. Names must be nonempty, contain no whitespace and not
    // begin with '#' (so the edge-list format round-trips).
    int add_vertex(const std::string& name);     // throws if name exists
    int ensure_vertex(const std::string& name);  // get-or-add
    void add_arc(int u, int v);                  // throws on loop or duplicate
    void add_arc(const std::string& u, const std::string& v);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }
    int index_of(const std::string& name) const;  // -1 if absent
    bool has_vertex(const std::string& name) const { return index_of(name) >= 0; }
    bool has_arc(int u, int v) const;
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::span<const int> out(int v) const { return out_[static_cast<size_t>(v)]; }
    std::span<const int> in(int v) const { return in_[static_cast<size_t>(v)]; }
    int underlying_degree(int v) const {
        return static_cast<int>(out_[static_cast<size_t>(v)].size() + in_[static_cast<size_t>(v)].size());
    }

    // Underlying (orientation-forgetting) neighbours, out-arcs first.
    std::vector<int> neighbors(int v) const;

    bool operator==(const Digraph& other) const {
        return names_ == other.names_ && arcs_ == other.arcs_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_set<uint64_t> arc_set_;
};

struct StructureClass {
    bool connected = false;
    bool is_tree = false;
    bool is_oriented_path = false;
    bool has_cycle = false;
};

struct LevelMap {
    std::vector<int> level;  // indexed by vertex, normalized so min level = 0
    int height = 0;          // = max level
};

// Flags computed on the underlying graph; a tree is a connected digraph
// whose underlying graph is acyclic, an oriented path additionally has
// underlying degree <= 2 everywhere.
StructureClass classify(const Digraph& d);

// Levels of a tree: +1 across each arc, normalized to min 0. Rejects
// non-trees (levels need not exist on cycles).
LevelMap level_map(const Digraph& t);

Digraph reverse(const Digraph& d);

// Disjoint union; vertices of d2 are renamed with a collision-free prefix.
Digraph disjoint_union(const Digraph& d1, const Digraph& d2);

// Subgraph induced by `keep` (indices into d); declared order preserved.
Digraph induced_subgraph(const Digraph& d, const std::vector<int>& keep);

// Copy with every vertex renamed through `rename` (must be injective).
Digraph rename_vertices(const Digraph& d, const std::unordered_map<std::string, std::string>& rename);

// Identify vertex b into vertex a (b disappears; arcs re-attach to a).
// Throws if the merge would create a loop or a duplicate arc.
Digraph merge_vertices(const Digraph& d, int a, int b);

// Edge-list text format: one arc "u v" per line, isolated vertices as a
// bare "u" line; '#' lines and blank lines are ignored on input.
Digraph parse_digraph(const std::string& text);
std::string to_edge_list(const Digraph& d);

// DOT rendering, deterministic for a fixed input. `labels` adds label
// attributes for the vertices it mentions.
std::string to_dot(const Digraph& d,
                   const std::unordered_map<std::string, std::string>& labels = {});

}  // namespace treehom

#endif
