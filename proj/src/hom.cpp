#include "hom.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace treehom {

namespace {

// --- small bitset helpers (row-major masks over target vertices) ---

struct Masks {
    int bits = 0;
    int words = 0;
    std::vector<uint64_t> data;  // rows of `words` words

    Masks(int rows, int bits_) : bits(bits_), words((bits_ + 63) / 64), data(static_cast<size_t>(rows) * static_cast<size_t>(words), 0) {}
    uint64_t* row(int r) { return data.data() + static_cast<size_t>(r) * static_cast<size_t>(words); }
    const uint64_t* row(int r) const { return data.data() + static_cast<size_t>(r) * static_cast<size_t>(words); }
};

void set_bit(uint64_t* row, int i) { row[i >> 6] |= uint64_t{1} << (i & 63); }
bool any_and(const uint64_t* a, const uint64_t* b, int words) {
    for (int i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}
void and_into(uint64_t* a, const uint64_t* b, int words) {
    for (int i = 0; i < words; ++i) a[i] &= b[i];
}
bool is_zero(const uint64_t* a, int words) {
    for (int i = 0; i < words; ++i)
        if (a[i]) return false;
    return true;
}
int lowest_bit(const uint64_t* a, int words) {
    for (int i = 0; i < words; ++i)
        if (a[i]) return i * 64 + __builtin_ctzll(a[i]);
    return -1;
}
void fill_ones(uint64_t* a, int bits) {
    int words = (bits + 63) / 64;
    for (int i = 0; i < words; ++i) a[i] = ~uint64_t{0};
    int rem = bits & 63;
    if (rem) a[words - 1] = (uint64_t{1} << rem) - 1;
}

// Adjacency masks of the target.
struct TargetAdj {
    Masks out, in;
    explicit TargetAdj(const Digraph& h) : out(h.vertex_count(), h.vertex_count()), in(h.vertex_count(), h.vertex_count()) {
        for (auto [u, v] : h.arcs()) {
            set_bit(out.row(u), v);
            set_bit(in.row(v), u);
        }
    }
};

}  // namespace

Components underlying_components(const Digraph& d) {
    int n = d.vertex_count();
    Components c;
    c.comp.assign(static_cast<size_t>(n), -1);
    std::vector<int> arrival(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (c.comp[static_cast<size_t>(s)] >= 0) continue;
        int id = c.count++;
        std::deque<int> queue{s};
        c.comp[static_cast<size_t>(s)] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            bool skipped_parent = false;
            for (int w : d.neighbors(v)) {
                if (w == arrival[static_cast<size_t>(v)] && !skipped_parent) {
                    skipped_parent = true;
                    continue;
                }
                if (c.comp[static_cast<size_t>(w)] >= 0) {
                    c.acyclic = false;
                    continue;
                }
                c.comp[static_cast<size_t>(w)] = id;
                arrival[static_cast<size_t>(w)] = v;
                queue.push_back(w);
            }
        }
    }
    return c;
}

std::string to_string(OrderRelation r) {
    switch (r) {
        case OrderRelation::equivalent: return "equivalent";
        case OrderRelation::strictly_below: return "strictly_below";
        case OrderRelation::strictly_above: return "strictly_above";
        case OrderRelation::incomparable: return "incomparable";
    }
    return "?";
}

bool is_valid_hom(const Digraph& g, const Digraph& h, const VertexMap& map) {
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    for (int img : map)
        if (img < 0 || img >= h.vertex_count()) return false;
    for (auto [u, v] : g.arcs())
        if (!h.has_arc(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) return false;
    return true;
}

std::string hom_to_text(const Digraph& g, const Digraph& h, const VertexMap& map) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v)
        out << g.name(v) << " -> " << h.name(map[static_cast<size_t>(v)]) << "\n";
    return out.str();
}

// --- forest-source route: exact candidate propagation over rooted trees ---

std::optional<VertexMap> find_hom_tree(const Digraph& g, const Digraph& h,
                                       const std::vector<std::pair<int, int>>& pinned) {
    Components comps = underlying_components(g);
    if (!comps.acyclic)
        throw Error(ErrorKind::precondition, "find_hom_tree requires a forest source");
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0) return VertexMap{};
    if (nh == 0) return std::nullopt;

    TargetAdj adj(h);
    int words = adj.out.words;
    Masks cand(ng, nh);
    for (int v = 0; v < ng; ++v) fill_ones(cand.row(v), nh);
    for (auto [v, image] : pinned) {
        if (v < 0 || v >= ng || image < 0 || image >= nh)
            throw Error(ErrorKind::precondition, "find_hom_tree: pinned vertex out of range");
        for (int i = 0; i < words; ++i) cand.row(v)[i] = 0;
        set_bit(cand.row(v), image);
    }

    // Rooted BFS orders per component; parent[v] and the connecting arc
    // direction (true = arc parent->v).
    std::vector<int> parent(static_cast<size_t>(ng), -1);
    std::vector<char> arc_from_parent(static_cast<size_t>(ng), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(ng));
    std::vector<char> seen(static_cast<size_t>(ng), 0);
    for (int s = 0; s < ng; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        seen[static_cast<size_t>(s)] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int w : g.out(v)) {
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = 1;
                parent[static_cast<size_t>(w)] = v;
                arc_from_parent[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
            for (int w : g.in(v)) {
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = 1;
                parent[static_cast<size_t>(w)] = v;
                arc_from_parent[static_cast<size_t>(w)] = 0;
                queue.push_back(w);
            }
        }
    }

    // Bottom-up: shrink the parent's candidate set by each child's.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int p = parent[static_cast<size_t>(v)];
        if (p < 0) {
            if (is_zero(cand.row(v), words)) return std::nullopt;
            continue;
        }
        // Value a stays allowed for p iff some b in cand[v] is adjacent in
        // the right direction.
        const Masks& dir = arc_from_parent[static_cast<size_t>(v)] ? adj.out : adj.in;
        uint64_t* prow = cand.row(p);
        for (int a = 0; a < nh; ++a) {
            if (!(prow[a >> 6] >> (a & 63) & 1)) continue;
            if (!any_and(dir.row(a), cand.row(v), words))
                prow[a >> 6] &= ~(uint64_t{1} << (a & 63));
        }
        if (is_zero(prow, words)) return std::nullopt;
    }

    // Top-down extraction, smallest candidate first.
    VertexMap map(static_cast<size_t>(ng), -1);
    for (int v : order) {
        int p = parent[static_cast<size_t>(v)];
        if (p < 0) {
            map[static_cast<size_t>(v)] = lowest_bit(cand.row(v), words);
        } else {
            const Masks& dir = arc_from_parent[static_cast<size_t>(v)] ? adj.out : adj.in;
            std::vector<uint64_t> allowed(cand.row(v), cand.row(v) + words);
            and_into(allowed.data(), dir.row(map[static_cast<size_t>(p)]), words);
            map[static_cast<size_t>(v)] = lowest_bit(allowed.data(), words);
        }
    }
    return map;
}

// --- backtracking route with forward checking ---

namespace {

struct Backtracker {
    const Digraph& g;
    const Digraph& h;
    TargetAdj adj;
    int ng, nh, words;
    std::vector<int> var_order;       // position -> source vertex
    std::vector<int> position_of;     // source vertex -> position
    std::vector<std::vector<std::pair<int, int>>> later_constraints;
    // later_constraints[pos]: (later position, direction) pairs where
    // direction 1 = arc var->later, 0 = arc later->var, 2 = both.
    bool injective = false;
    uint64_t nodes = 0;
    uint64_t node_cap = 0;  // 0 = unlimited

    Backtracker(const Digraph& g_, const Digraph& h_) : g(g_), h(h_), adj(h_) {
        ng = g.vertex_count();
        nh = h.vertex_count();
        words = (nh + 63) / 64;

        // Connected static order: highest degree first, then always a
        // vertex adjacent to the ordered prefix (so forward checking
        // constrains every new variable), ties by degree then index.
        position_of.assign(static_cast<size_t>(ng), -1);
        std::vector<char> frontier(static_cast<size_t>(ng), 0);
        auto better = [&](int a, int b) {  // is a a better next pick than b
            if (b < 0) return true;
            if (frontier[static_cast<size_t>(a)] != frontier[static_cast<size_t>(b)])
                return frontier[static_cast<size_t>(a)] > frontier[static_cast<size_t>(b)];
            int da = g.underlying_degree(a), db = g.underlying_degree(b);
            if (da != db) return da > db;
            return a < b;
        };
        var_order.reserve(static_cast<size_t>(ng));
        while (static_cast<int>(var_order.size()) < ng) {
            int pick = -1;
            for (int v = 0; v < ng; ++v)
                if (position_of[static_cast<size_t>(v)] < 0 && better(v, pick)) pick = v;
            position_of[static_cast<size_t>(pick)] = static_cast<int>(var_order.size());
            var_order.push_back(pick);
            for (int w : g.neighbors(pick)) frontier[static_cast<size_t>(w)] = 1;
        }

        later_constraints.resize(static_cast<size_t>(ng));
        for (auto [u, v] : g.arcs()) {
            int pu = position_of[static_cast<size_t>(u)], pv = position_of[static_cast<size_t>(v)];
            if (pu < pv)
                later_constraints[static_cast<size_t>(pu)].emplace_back(pv, 1);
            else
                later_constraints[static_cast<size_t>(pv)].emplace_back(pu, 0);
        }
    }

    // Initial domains with the degree-zero filter.
    std::vector<uint64_t> initial_domains() const {
        std::vector<uint64_t> dom(static_cast<size_t>(ng) * static_cast<size_t>(words), 0);
        for (int v = 0; v < ng; ++v) {
            uint64_t* row = dom.data() + static_cast<size_t>(v) * static_cast<size_t>(words);
            fill_ones(row, nh);
            if (!g.out(v).empty())
                for (int a = 0; a < nh; ++a)
                    if (h.out(a).empty()) row[a >> 6] &= ~(uint64_t{1} << (a & 63));
            if (!g.in(v).empty())
                for (int a = 0; a < nh; ++a)
                    if (h.in(a).empty()) row[a >> 6] &= ~(uint64_t{1} << (a & 63));
        }
        return dom;
    }

    // Visit every solution; `visit` returns false to stop. Returns false
    // if the search was stopped by the callback.
    bool search(const std::function<bool(const VertexMap&)>& visit) {
        if (nh == 0) return ng == 0 ? visit(VertexMap{}) : true;
        if (ng == 0) return visit(VertexMap{});
        std::vector<std::vector<uint64_t>> dom_stack(static_cast<size_t>(ng) + 1);
        dom_stack[0] = initial_domains();
        for (size_t i = 1; i < dom_stack.size(); ++i) dom_stack[i].resize(dom_stack[0].size());
        VertexMap map(static_cast<size_t>(ng), -1);
        return descend(0, dom_stack, map, visit);
    }

    bool descend(int pos, std::vector<std::vector<uint64_t>>& dom_stack, VertexMap& map,
                 const std::function<bool(const VertexMap&)>& visit) {
        if (pos == ng) return visit(map);
        if (node_cap && ++nodes > node_cap)
            throw Error(ErrorKind::cap_exceeded, "homomorphism enumeration exceeded node cap");
        int v = var_order[static_cast<size_t>(pos)];
        const std::vector<uint64_t>& dom = dom_stack[static_cast<size_t>(pos)];
        const uint64_t* row = dom.data() + static_cast<size_t>(v) * static_cast<size_t>(words);
        for (int a = 0; a < nh; ++a) {
            if (!(row[a >> 6] >> (a & 63) & 1)) continue;
            std::vector<uint64_t>& next = dom_stack[static_cast<size_t>(pos) + 1];
            next = dom;
            bool dead = false;
            for (auto [later_pos, dir] : later_constraints[static_cast<size_t>(pos)]) {
                int u = var_order[static_cast<size_t>(later_pos)];
                uint64_t* urow = next.data() + static_cast<size_t>(u) * static_cast<size_t>(words);
                and_into(urow, dir ? adj.out.row(a) : adj.in.row(a), words);
                if (is_zero(urow, words)) {
                    dead = true;
                    break;
                }
            }
            if (injective && !dead) {
                for (int later = pos + 1; later < ng && !dead; ++later) {
                    int u = var_order[static_cast<size_t>(later)];
                    uint64_t* urow = next.data() + static_cast<size_t>(u) * static_cast<size_t>(words);
                    urow[a >> 6] &= ~(uint64_t{1} << (a & 63));
                    if (is_zero(urow, words)) dead = true;
                }
            }
            if (dead) continue;
            map[static_cast<size_t>(v)] = a;
            if (!descend(pos + 1, dom_stack, map, visit)) return false;
        }
        map[static_cast<size_t>(v)] = -1;
        return true;
    }
};

std::optional<VertexMap> backtrack_one_component_aware(const Digraph& g, const Digraph& h) {
    // Decide component by component so an unsatisfiable component cannot
    // hide behind a combinatorial component in front of it.
    Components comps = underlying_components(g);
    if (comps.count <= 1) {
        std::optional<VertexMap> found;
        Backtracker bt(g, h);
        bt.search([&](const VertexMap& m) {
            found = m;
            return false;
        });
        return found;
    }
    VertexMap combined(static_cast<size_t>(g.vertex_count()), -1);
    for (int c = 0; c < comps.count; ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comps.comp[static_cast<size_t>(v)] == c) keep.push_back(v);
        Digraph part = induced_subgraph(g, keep);
        Backtracker bt(part, h);
        std::optional<VertexMap> found;
        bt.search([&](const VertexMap& m) {
            found = m;
            return false;
        });
        if (!found) return std::nullopt;
        for (size_t i = 0; i < keep.size(); ++i)
            combined[static_cast<size_t>(keep[i])] = (*found)[i];
    }
    return combined;
}

}  // namespace

std::optional<VertexMap> find_hom_backtracking(const Digraph& g, const Digraph& h) {
    if (g.vertex_count() == 0) return VertexMap{};
    if (h.vertex_count() == 0) return std::nullopt;
    return backtrack_one_component_aware(g, h);
}

std::optional<VertexMap> find_hom(const Digraph& g, const Digraph& h) {
    if (g.vertex_count() == 0) return VertexMap{};
    if (h.vertex_count() == 0) return std::nullopt;
    if (underlying_components(g).acyclic) return find_hom_tree(g, h);
    return find_hom_backtracking(g, h);
}

bool brute_force_hom(const Digraph& g, const Digraph& h, uint64_t cap) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0) return true;
    if (nh == 0) return false;

    uint64_t states = 1;
    for (int i = 0; i < ng; ++i) {
        if (states > cap / static_cast<uint64_t>(nh))
            throw Error(ErrorKind::cap_exceeded,
                        "brute force refused: |V(h)|^|V(g)| exceeds cap " + std::to_string(cap));
        states *= static_cast<uint64_t>(nh);
    }

    VertexMap map(static_cast<size_t>(ng), 0);
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.arcs()) {
            if (!h.has_arc(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        int i = ng - 1;
        while (i >= 0 && map[static_cast<size_t>(i)] == nh - 1) map[static_cast<size_t>(i--)] = 0;
        if (i < 0) return false;
        ++map[static_cast<size_t>(i)];
    }
}

uint64_t enumerate_homs(const Digraph& g, const Digraph& h,
                        const std::function<bool(const VertexMap&)>& visit, const EnumLimits& limits) {
    if (h.vertex_count() == 0) {
        if (g.vertex_count() == 0) {
            visit(VertexMap{});
            return 1;
        }
        return 0;
    }
    // Make sure every component is satisfiable before the full product
    // enumeration runs.
    Components comps = underlying_components(g);
    for (int c = 0; c < comps.count; ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comps.comp[static_cast<size_t>(v)] == c) keep.push_back(v);
        if (!find_hom(induced_subgraph(g, keep), h)) return 0;
    }
    Backtracker bt(g, h);
    bt.node_cap = limits.max_nodes;
    uint64_t count = 0;
    bt.search([&](const VertexMap& m) {
        if (++count > limits.max_homs)
            throw Error(ErrorKind::cap_exceeded, "homomorphism enumeration exceeded hom cap");
        return visit(m);
    });
    return count;
}

OrderRelation compare(const Digraph& g, const Digraph& h) {
    bool below = hom_exists(g, h);
    bool above = hom_exists(h, g);
    if (below && above) return OrderRelation::equivalent;
    if (below) return OrderRelation::strictly_below;
    if (above) return OrderRelation::strictly_above;
    return OrderRelation::incomparable;
}

namespace {

std::vector<int> all_but(int n, int skip) {
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(n) - 1);
    for (int v = 0; v < n; ++v)
        if (v != skip) keep.push_back(v);
    return keep;
}

}  // namespace

bool is_core(const Digraph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (hom_exists(g, induced_subgraph(g, all_but(n, v)))) return false;
    return true;
}

namespace {

// One round of the shrink loop: the first vertex (declared order) whose
// deletion keeps an endomorphism shrinks the retained set to that
// endomorphism's image.
std::vector<int> shrink_to_core_indices(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<int> current(static_cast<size_t>(n));
    std::iota(current.begin(), current.end(), 0);
    bool changed = true;
    while (changed && current.size() > 1) {
        changed = false;
        Digraph cur = induced_subgraph(g, current);
        for (size_t drop = 0; drop < current.size(); ++drop) {
            std::vector<int> smaller_local;
            for (size_t i = 0; i < current.size(); ++i)
                if (i != drop) smaller_local.push_back(static_cast<int>(i));
            Digraph target = induced_subgraph(cur, smaller_local);
            auto f = find_hom(cur, target);
            if (!f) continue;
            // Map the image back into original indices.
            std::vector<char> in_image(current.size(), 0);
            for (int img : *f) in_image[static_cast<size_t>(smaller_local[static_cast<size_t>(img)])] = 1;
            std::vector<int> next;
            for (size_t i = 0; i < current.size(); ++i)
                if (in_image[i]) next.push_back(current[i]);
            current = std::move(next);
            changed = true;
            break;
        }
    }
    return current;
}

}  // namespace

Digraph core(const Digraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return g;
    std::vector<int> copy = shrink_to_core_indices(g);
    size_t k = copy.size();
    if (n > kCoreLexExactLimit || k == static_cast<size_t>(n)) return induced_subgraph(g, copy);

    // Exact tie-break at small sizes: the lexicographically least k-subset
    // carrying a copy of the core.
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        if (hom_exists(g, induced_subgraph(g, subset))) return induced_subgraph(g, subset);
        // next k-combination of {0..n-1} in lexicographic order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == n - static_cast<int>(k) + i) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return induced_subgraph(g, copy);  // unreachable: the shrink copy qualifies
}

namespace {

// Automorphism triviality for oriented trees via canonical subtree
// encodings: a repeated (direction-tagged) encoding among siblings is
// exactly a nontrivial automorphism.
bool tree_aut_trivial(const Digraph& t) {
    int n = t.vertex_count();
    if (n <= 1) return true;

    // Underlying centers by leaf peeling.
    std::vector<int> degree(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) degree[static_cast<size_t>(v)] = t.underlying_degree(v);
    std::vector<int> layer = degree;
    std::deque<int> leaves;
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (layer[static_cast<size_t>(v)] <= 1) leaves.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::deque<int> next;
        for (int v : leaves) {
            removed[static_cast<size_t>(v)] = 1;
            --remaining;
            for (int w : t.neighbors(v)) {
                if (removed[static_cast<size_t>(w)]) continue;
                if (--layer[static_cast<size_t>(w)] == 1) next.push_back(w);
            }
        }
        leaves = std::move(next);
    }
    int root = -1;
    for (int v = 0; v < n && root < 0; ++v)
        if (!removed[static_cast<size_t>(v)]) root = v;

    // Recursive encoding; duplicate sibling encodings end the check early.
    bool trivial = true;
    std::function<std::string(int, int)> encode = [&](int v, int parent) -> std::string {
        std::vector<std::string> children;
        for (int w : t.out(v)) {
            if (w == parent) continue;
            children.push_back("F" + encode(w, v));
        }
        for (int w : t.in(v)) {
            if (w == parent) continue;
            children.push_back("B" + encode(w, v));
        }
        std::sort(children.begin(), children.end());
        for (size_t i = 1; i < children.size(); ++i)
            if (children[i] == children[i - 1]) trivial = false;
        std::string enc = "(";
        for (const std::string& c : children) enc += c;
        enc += ")";
        return enc;
    };
    encode(root, -1);
    return trivial;
}

bool generic_aut_trivial(const Digraph& g) {
    Backtracker bt(g, g);
    bt.injective = true;
    bool trivial = true;
    bt.search([&](const VertexMap& m) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (m[static_cast<size_t>(v)] != v) {
                trivial = false;
                return false;
            }
        }
        return true;
    });
    return trivial;
}

}  // namespace

bool is_rigid(const Digraph& g) {
    if (!is_core(g)) return false;
    if (classify(g).is_tree) return tree_aut_trivial(g);
    return generic_aut_trivial(g);
}

bool is_proper_tree(const Digraph& t) {
    if (!classify(t).is_tree)
        throw Error(ErrorKind::precondition, "is_proper_tree requires a tree");
    return !classify(core(t)).is_oriented_path;
}

}  // namespace treehom
