#include "enumerate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "hom.hpp"

namespace treehom {

Digraph make_path(const std::vector<bool>& pattern) {
    Digraph p;
    p.add_vertex("p0");
    for (size_t i = 0; i < pattern.size(); ++i) {
        p.add_vertex("p" + std::to_string(i + 1));
        if (pattern[i])
            p.add_arc(static_cast<int>(i), static_cast<int>(i) + 1);
        else
            p.add_arc(static_cast<int>(i) + 1, static_cast<int>(i));
    }
    return p;
}

std::string pattern_string(const std::vector<bool>& pattern) {
    if (pattern.empty()) return ".";
    std::string s;
    for (bool b : pattern) s += b ? '+' : '-';
    return s;
}

std::vector<bool> canonical_path_pattern(const std::vector<bool>& pattern) {
    std::vector<bool> best = pattern;
    auto consider = [&](std::vector<bool> s) {
        if (s < best) best = std::move(s);
    };
    std::vector<bool> rev(pattern.rbegin(), pattern.rend());
    std::vector<bool> comp = pattern, revcomp = rev;
    comp.flip();
    revcomp.flip();
    consider(rev);
    consider(comp);
    consider(revcomp);
    return best;
}

std::vector<Digraph> enumerate_path_cores(int max_arcs) {
    std::vector<Digraph> result;
    result.push_back(make_path({}));  // the single-vertex path
    for (int len = 1; len <= max_arcs; ++len) {
        for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
            std::vector<bool> pattern(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i) pattern[static_cast<size_t>(i)] = (bits >> i) & 1;
            if (canonical_path_pattern(pattern) != pattern) continue;
            Digraph p = make_path(pattern);
            if (is_core(p)) result.push_back(std::move(p));
        }
    }
    return result;
}

std::vector<Digraph> random_paths(int count, int max_len, uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<Digraph> result;
    for (int i = 0; i < count; ++i) {
        int len = 1 + static_cast<int>(eng() % static_cast<uint64_t>(max_len));
        std::vector<bool> pattern(static_cast<size_t>(len));
        for (int j = 0; j < len; ++j) pattern[static_cast<size_t>(j)] = eng() & 1;
        result.push_back(make_path(pattern));
    }
    return result;
}

namespace {

std::vector<int> underlying_centers(const Digraph& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> layer(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) layer[static_cast<size_t>(v)] = t.underlying_degree(v);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::deque<int> leaves;
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
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
    return centers;
}

std::string rooted_encoding(const Digraph& t, int v, int parent) {
    std::vector<std::string> children;
    for (int w : t.out(v)) {
        if (w == parent) continue;
        children.push_back("F" + rooted_encoding(t, w, v));
    }
    for (int w : t.in(v)) {
        if (w == parent) continue;
        children.push_back("B" + rooted_encoding(t, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string enc = "(";
    for (const std::string& c : children) enc += c;
    enc += ")";
    return enc;
}

}  // namespace

std::string canonical_tree_encoding(const Digraph& t) {
    if (!classify(t).is_tree)
        throw Error(ErrorKind::precondition, "canonical_tree_encoding requires a tree");
    std::string best;
    for (int c : underlying_centers(t)) {
        std::string enc = rooted_encoding(t, c, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

Digraph decode_tree_encoding(const std::string& encoding) {
    Digraph t;
    size_t pos = 0;
    std::function<int()> parse = [&]() -> int {
        if (pos >= encoding.size() || encoding[pos] != '(')
            throw Error(ErrorKind::parse, "bad tree encoding");
        ++pos;
        int v = t.add_vertex("t" + std::to_string(t.vertex_count()));
        while (pos < encoding.size() && encoding[pos] != ')') {
            char tag = encoding[pos++];
            int child = parse();
            if (tag == 'F')
                t.add_arc(v, child);
            else if (tag == 'B')
                t.add_arc(child, v);
            else
                throw Error(ErrorKind::parse, "bad tree encoding tag");
        }
        if (pos >= encoding.size())
            throw Error(ErrorKind::parse, "bad tree encoding");
        ++pos;  // ')'
        return v;
    };
    parse();
    if (pos != encoding.size())
        throw Error(ErrorKind::parse, "bad tree encoding");
    return t;
}

std::vector<std::string> oriented_tree_encodings(int vertices) {
    std::vector<std::string> current{"()"};
    for (int n = 2; n <= vertices; ++n) {
        std::set<std::string> next;
        for (const std::string& enc : current) {
            Digraph t = decode_tree_encoding(enc);
            for (int v = 0; v < t.vertex_count(); ++v) {
                for (int dir = 0; dir < 2; ++dir) {
                    Digraph grown = t;
                    int leaf = grown.add_vertex("t" + std::to_string(grown.vertex_count()));
                    if (dir == 0)
                        grown.add_arc(v, leaf);
                    else
                        grown.add_arc(leaf, v);
                    next.insert(canonical_tree_encoding(grown));
                }
            }
        }
        current.assign(next.begin(), next.end());
    }
    if (vertices <= 1) return vertices == 1 ? current : std::vector<std::string>{};
    return current;
}

std::vector<Digraph> enumerate_oriented_trees(int max_vertices) {
    std::vector<Digraph> result;
    for (int n = 1; n <= max_vertices; ++n)
        for (const std::string& enc : oriented_tree_encodings(n))
            result.push_back(decode_tree_encoding(enc));
    return result;
}

Digraph random_tree(int n, std::mt19937_64& eng) {
    Digraph t;
    t.add_vertex("r0");
    for (int v = 1; v < n; ++v) {
        t.add_vertex("r" + std::to_string(v));
        int parent = static_cast<int>(eng() % static_cast<uint64_t>(v));
        if (eng() & 1)
            t.add_arc(parent, v);
        else
            t.add_arc(v, parent);
    }
    return t;
}

namespace {

std::string permuted_arc_key(const Digraph& d, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arcs().size());
    for (auto [u, v] : d.arcs())
        arcs.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    std::sort(arcs.begin(), arcs.end());
    std::string key;
    for (auto [u, v] : arcs) {
        key += static_cast<char>('0' + u);
        key += static_cast<char>('0' + v);
        key += ',';
    }
    return key;
}

std::string canonical_small_key(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::string best;
    do {
        std::string key = permuted_arc_key(d, perm);
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

}  // namespace

std::vector<Digraph> enumerate_small_digraphs(int max_vertices) {
    std::vector<Digraph> result;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) slots.emplace_back(u, v);
        std::set<std::string> seen;
        for (uint64_t bits = 0; bits < (uint64_t{1} << slots.size()); ++bits) {
            Digraph d;
            for (int v = 0; v < n; ++v) d.add_vertex("v" + std::to_string(v));
            for (size_t i = 0; i < slots.size(); ++i)
                if ((bits >> i) & 1) d.add_arc(slots[i].first, slots[i].second);
            if (seen.insert(canonical_small_key(d)).second) result.push_back(std::move(d));
        }
    }
    return result;
}

}  // namespace treehom
