#include "digraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace treehom {

namespace {

uint64_t arc_key(int u, int v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

void check_name(const std::string& name) {
    if (name.empty())
        throw Error(ErrorKind::precondition, "vertex name must be nonempty");
    if (name.front() == '#')
        throw Error(ErrorKind::precondition, "vertex name must not begin with '#': " + name);
    for (char c : name)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            throw Error(ErrorKind::precondition, "vertex name must not contain whitespace: " + name);
}

}  // namespace

int Digraph::add_vertex(const std::string& name) {
    check_name(name);
    if (index_.count(name))
        throw Error(ErrorKind::precondition, "duplicate vertex: " + name);
    int id = vertex_count();
    names_.push_back(name);
    index_.emplace(name, id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

int Digraph::ensure_vertex(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    return add_vertex(name);
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw Error(ErrorKind::precondition, "arc endpoint out of range");
    if (u == v)
        throw Error(ErrorKind::precondition, "loop arc rejected (arcs are irreflexive): " + names_[static_cast<size_t>(u)]);
    if (!arc_set_.insert(arc_key(u, v)).second)
        throw Error(ErrorKind::precondition,
                    "duplicate arc: " + names_[static_cast<size_t>(u)] + " " + names_[static_cast<size_t>(v)]);
    arcs_.emplace_back(u, v);
    out_[static_cast<size_t>(u)].push_back(v);
    in_[static_cast<size_t>(v)].push_back(u);
}

void Digraph::add_arc(const std::string& u, const std::string& v) {
    int iu = ensure_vertex(u);  // first-appearance order: u before v
    int iv = ensure_vertex(v);
    add_arc(iu, iv);
}

int Digraph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool Digraph::has_arc(int u, int v) const {
    return arc_set_.count(arc_key(u, v)) != 0;
}

std::vector<int> Digraph::neighbors(int v) const {
    std::vector<int> result(out_[static_cast<size_t>(v)].begin(), out_[static_cast<size_t>(v)].end());
    result.insert(result.end(), in_[static_cast<size_t>(v)].begin(), in_[static_cast<size_t>(v)].end());
    return result;
}

StructureClass classify(const Digraph& d) {
    StructureClass sc;
    int n = d.vertex_count();
    if (n == 0) return sc;

    // BFS on the underlying graph, tracking the arc we arrived by so a
    // revisit through a different arc marks a cycle. A pair of opposite
    // arcs u<->v counts as a (2-)cycle.
    std::vector<int> seen(static_cast<size_t>(n), 0);
    int reached = 0;
    bool cycle = false;
    std::deque<int> queue;
    std::vector<int> arrival(static_cast<size_t>(n), -1);  // vertex we came from
    seen[0] = 1;
    queue.push_back(0);
    ++reached;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        bool skipped_parent = false;
        for (int w : d.neighbors(v)) {
            if (w == arrival[static_cast<size_t>(v)] && !skipped_parent) {
                // One traversal back along the arrival edge is the parent
                // link; any further v-w connection is a parallel pair.
                skipped_parent = true;
                continue;
            }
            if (seen[static_cast<size_t>(w)]) {
                cycle = true;
                continue;
            }
            seen[static_cast<size_t>(w)] = 1;
            arrival[static_cast<size_t>(w)] = v;
            queue.push_back(w);
            ++reached;
        }
    }

    sc.connected = reached == n;
    sc.has_cycle = cycle;
    if (!sc.connected) {
        // Cycle detection must still look at the other components.
        for (int s = 0; s < n && !sc.has_cycle; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            seen[static_cast<size_t>(s)] = 1;
            queue.push_back(s);
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                bool skipped_parent = false;
                for (int w : d.neighbors(v)) {
                    if (w == arrival[static_cast<size_t>(v)] && !skipped_parent) {
                        skipped_parent = true;
                        continue;
                    }
                    if (seen[static_cast<size_t>(w)]) {
                        sc.has_cycle = true;
                        continue;
                    }
                    seen[static_cast<size_t>(w)] = 1;
                    arrival[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    sc.is_tree = sc.connected && !sc.has_cycle;
    if (sc.is_tree) {
        int max_deg = 0;
        for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, d.underlying_degree(v));
        sc.is_oriented_path = max_deg <= 2;
    }
    return sc;
}

LevelMap level_map(const Digraph& t) {
    StructureClass sc = classify(t);
    if (!sc.is_tree)
        throw Error(ErrorKind::precondition, "level_map requires a tree");
    int n = t.vertex_count();
    LevelMap lm;
    lm.level.assign(static_cast<size_t>(n), 0);
    std::vector<int> seen(static_cast<size_t>(n), 0);
    std::deque<int> queue;
    seen[0] = 1;
    queue.push_back(0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : t.out(v)) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            lm.level[static_cast<size_t>(w)] = lm.level[static_cast<size_t>(v)] + 1;
            queue.push_back(w);
        }
        for (int w : t.in(v)) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            lm.level[static_cast<size_t>(w)] = lm.level[static_cast<size_t>(v)] - 1;
            queue.push_back(w);
        }
    }
    int lo = *std::min_element(lm.level.begin(), lm.level.end());
    int hi = *std::max_element(lm.level.begin(), lm.level.end());
    for (int& x : lm.level) x -= lo;
    lm.height = hi - lo;
    return lm;
}

Digraph reverse(const Digraph& d) {
    Digraph r;
    for (int v = 0; v < d.vertex_count(); ++v) r.add_vertex(d.name(v));
    for (auto [u, v] : d.arcs()) r.add_arc(v, u);
    return r;
}

Digraph disjoint_union(const Digraph& d1, const Digraph& d2) {
    std::string prefix = "g2.";
    for (;;) {
        bool clash = false;
        for (int v = 0; v < d2.vertex_count() && !clash; ++v)
            clash = d1.has_vertex(prefix + d2.name(v));
        if (!clash) break;
        prefix += "g2.";
    }
    Digraph u;
    for (int v = 0; v < d1.vertex_count(); ++v) u.add_vertex(d1.name(v));
    for (auto [a, b] : d1.arcs()) u.add_arc(a, b);
    int base = d1.vertex_count();
    for (int v = 0; v < d2.vertex_count(); ++v) u.add_vertex(prefix + d2.name(v));
    for (auto [a, b] : d2.arcs()) u.add_arc(base + a, base + b);
    return u;
}

Digraph induced_subgraph(const Digraph& d, const std::vector<int>& keep) {
    std::vector<int> remap(static_cast<size_t>(d.vertex_count()), -1);
    Digraph s;
    for (int v : keep) {
        if (v < 0 || v >= d.vertex_count())
            throw Error(ErrorKind::precondition, "induced_subgraph: vertex out of range");
        remap[static_cast<size_t>(v)] = s.add_vertex(d.name(v));
    }
    for (auto [u, v] : d.arcs()) {
        int a = remap[static_cast<size_t>(u)], b = remap[static_cast<size_t>(v)];
        if (a >= 0 && b >= 0) s.add_arc(a, b);
    }
    return s;
}

Digraph rename_vertices(const Digraph& d, const std::unordered_map<std::string, std::string>& rename) {
    Digraph r;
    for (int v = 0; v < d.vertex_count(); ++v) {
        auto it = rename.find(d.name(v));
        r.add_vertex(it == rename.end() ? d.name(v) : it->second);
    }
    for (auto [u, v] : d.arcs()) r.add_arc(u, v);
    return r;
}

Digraph merge_vertices(const Digraph& d, int a, int b) {
    if (a == b) throw Error(ErrorKind::precondition, "merge_vertices: identical vertices");
    Digraph m;
    std::vector<int> remap(static_cast<size_t>(d.vertex_count()), -1);
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == b) continue;
        remap[static_cast<size_t>(v)] = m.add_vertex(d.name(v));
    }
    remap[static_cast<size_t>(b)] = remap[static_cast<size_t>(a)];
    for (auto [u, v] : d.arcs()) {
        int x = remap[static_cast<size_t>(u)], y = remap[static_cast<size_t>(v)];
        if (x == y)
            throw Error(ErrorKind::precondition, "merge_vertices would create a loop");
        if (!m.has_arc(x, y)) m.add_arc(x, y);
    }
    return m;
}

Digraph parse_digraph(const std::string& text) {
    Digraph d;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        ls >> a >> b;
        if (ls >> extra)
            throw Error(ErrorKind::parse,
                        "line " + std::to_string(line_no) + ": expected \"u\" or \"u v\"");
        try {
            if (b.empty()) {
                d.ensure_vertex(a);
            } else {
                d.add_arc(a, b);
            }
        } catch (const Error& e) {
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return d;
}

std::string to_edge_list(const Digraph& d) {
    std::ostringstream out;
    for (int v = 0; v < d.vertex_count(); ++v) out << d.name(v) << "\n";
    for (auto [u, v] : d.arcs()) out << d.name(u) << " " << d.name(v) << "\n";
    return out.str();
}

namespace {

bool dot_safe(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::string dot_id(const std::string& name) {
    if (dot_safe(name)) return name;
    std::string quoted = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string to_dot(const Digraph& d, const std::unordered_map<std::string, std::string>& labels) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        out << "  " << dot_id(d.name(v));
        auto it = labels.find(d.name(v));
        if (it != labels.end()) out << " [label=" << dot_id(it->second) << "]";
        out << ";\n";
    }
    for (auto [u, v] : d.arcs())
        out << "  " << dot_id(d.name(u)) << " -> " << dot_id(d.name(v)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace treehom
