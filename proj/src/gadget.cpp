#include "gadget.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace treehom {

std::vector<int> plank_vertices(const Digraph& t, int u, const std::vector<int>& s) {
    if (!classify(t).is_tree)
        throw Error(ErrorKind::precondition, "plank requires a tree");
    int n = t.vertex_count();
    if (u < 0 || u >= n)
        throw Error(ErrorKind::precondition, "plank: base vertex not in tree");
    for (int v : s)
        if (v < 0 || v >= n)
            throw Error(ErrorKind::precondition, "plank: target vertex not in tree");

    // Root the underlying tree at u; parent pointers give u-paths.
    std::vector<int> parent(static_cast<size_t>(n), -2);
    parent[static_cast<size_t>(u)] = -1;
    std::deque<int> queue{u};
    std::vector<int> order;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : t.neighbors(v)) {
            if (parent[static_cast<size_t>(w)] != -2) continue;
            parent[static_cast<size_t>(w)] = v;
            queue.push_back(w);
        }
    }

    std::vector<char> keep(static_cast<size_t>(n), 0);
    keep[static_cast<size_t>(u)] = 1;
    std::vector<char> anchor(static_cast<size_t>(n), 0);
    for (int v : s)
        if (v != u) anchor[static_cast<size_t>(v)] = 1;
    // Everything between u and an anchor.
    for (int v : s) {
        for (int walk = v; walk != -1; walk = parent[static_cast<size_t>(walk)])
            keep[static_cast<size_t>(walk)] = 1;
    }
    // Everything beyond an anchor: a vertex whose u-path meets an anchor.
    std::vector<char> beyond(static_cast<size_t>(n), 0);
    for (int v : order) {
        int p = parent[static_cast<size_t>(v)];
        bool from_above = p >= 0 && (beyond[static_cast<size_t>(p)] || anchor[static_cast<size_t>(p)]);
        beyond[static_cast<size_t>(v)] = anchor[static_cast<size_t>(v)] || from_above;
        if (beyond[static_cast<size_t>(v)]) keep[static_cast<size_t>(v)] = 1;
    }

    std::vector<int> result;
    for (int v = 0; v < n; ++v)
        if (keep[static_cast<size_t>(v)]) result.push_back(v);
    return result;
}

Digraph plank(const Digraph& t, int u, const std::vector<int>& s) {
    return induced_subgraph(t, plank_vertices(t, u, s));
}

namespace {

std::vector<int> sorted_in_neighbors(const Digraph& d, int v) {
    std::vector<int> result(d.in(v).begin(), d.in(v).end());
    std::sort(result.begin(), result.end());
    return result;
}

// First branching vertex (declared order) with at least two in-arcs, with
// its first two in-neighbours.
bool find_branching(const Digraph& base, int& x, int& u, int& w) {
    for (int v = 0; v < base.vertex_count(); ++v) {
        if (base.underlying_degree(v) < 3) continue;
        std::vector<int> ins = sorted_in_neighbors(base, v);
        if (ins.size() < 2) continue;
        x = v;
        u = ins[0];
        w = ins[1];
        return true;
    }
    return false;
}

}  // namespace

Decomposition decompose(const Digraph& t2) {
    if (!classify(t2).is_tree)
        throw Error(ErrorKind::precondition, "decompose requires a tree");
    Digraph base = core(t2);
    if (classify(base).is_oriented_path)
        throw Error(ErrorKind::precondition, "decompose: tree is not proper (its core is a path)");

    Decomposition dec;
    if (find_branching(base, dec.x, dec.u, dec.w)) {
        dec.base = base;
        dec.flipped = false;
    } else {
        Digraph rev = reverse(base);
        if (!find_branching(rev, dec.x, dec.u, dec.w))
            throw Error(ErrorKind::precondition,
                        "decompose: no branching vertex with two in-arcs in either orientation");
        dec.base = rev;
        dec.flipped = true;
    }

    for (int v : dec.base.neighbors(dec.x))
        if (v != dec.u && v != dec.w) dec.x_prime.push_back(v);
    std::sort(dec.x_prime.begin(), dec.x_prime.end());
    dec.x_prime.erase(std::unique(dec.x_prime.begin(), dec.x_prime.end()), dec.x_prime.end());
    if (dec.x_prime.empty())
        throw Error(ErrorKind::internal, "decompose: branching vertex lost its third neighbour");

    std::vector<int> u_vertices = plank_vertices(dec.base, dec.x, {dec.u});
    std::vector<int> w_vertices = plank_vertices(dec.base, dec.x, {dec.w});
    std::erase(u_vertices, dec.x);
    std::erase(w_vertices, dec.x);
    dec.plank_u = induced_subgraph(dec.base, u_vertices);
    dec.plank_w = induced_subgraph(dec.base, w_vertices);
    dec.plank_x = plank(dec.base, dec.x, dec.x_prime);
    return dec;
}

bool reassembles(const Decomposition& dec) {
    // Vertex sets must partition V(base).
    std::set<std::string> seen;
    auto collect = [&](const Digraph& part) {
        for (int v = 0; v < part.vertex_count(); ++v)
            if (!seen.insert(part.name(v)).second) return false;
        return true;
    };
    if (!collect(dec.plank_u) || !collect(dec.plank_x) || !collect(dec.plank_w)) return false;
    if (static_cast<int>(seen.size()) != dec.base.vertex_count()) return false;

    // Arcs of the pieces plus ux, wx must be exactly the base arcs.
    std::set<std::pair<std::string, std::string>> arcs;
    auto collect_arcs = [&](const Digraph& part) {
        for (auto [a, b] : part.arcs()) arcs.emplace(part.name(a), part.name(b));
    };
    collect_arcs(dec.plank_u);
    collect_arcs(dec.plank_x);
    collect_arcs(dec.plank_w);
    arcs.emplace(dec.base.name(dec.u), dec.base.name(dec.x));
    arcs.emplace(dec.base.name(dec.w), dec.base.name(dec.x));
    if (arcs.size() != static_cast<size_t>(dec.base.arc_count())) return false;
    for (auto [a, b] : dec.base.arcs())
        if (!arcs.count({dec.base.name(a), dec.base.name(b)})) return false;
    return true;
}

namespace {

// Adds a named copy of `part`, returning the new index of `distinguished`.
int add_copy(Digraph& g, const Digraph& part, const std::string& prefix, int distinguished) {
    int base_index = g.vertex_count();
    for (int v = 0; v < part.vertex_count(); ++v) g.add_vertex(prefix + part.name(v));
    for (auto [a, b] : part.arcs()) g.add_arc(base_index + a, base_index + b);
    return base_index + distinguished;
}

int index_in(const Digraph& part, const Digraph& whole, int whole_index) {
    return part.index_of(whole.name(whole_index));
}

}  // namespace

LabelledGadget build_dn(const Decomposition& dec, int n) {
    if (n < 1)
        throw Error(ErrorKind::precondition, "build_dn requires n >= 1");

    const int u_in_U = index_in(dec.plank_u, dec.base, dec.u);
    const int w_in_W = index_in(dec.plank_w, dec.base, dec.w);
    const int x_in_X = index_in(dec.plank_x, dec.base, dec.x);

    LabelledGadget g;
    g.base = dec.base;
    g.n = n;

    Digraph& t = g.tree;
    int seam_w = add_copy(t, dec.plank_w, "seam1.", w_in_W);
    for (int i = 1; i <= n; ++i) {
        std::string blk = "blk" + std::to_string(i) + ".";
        int a = t.add_vertex(blk + "a");
        int u = add_copy(t, dec.plank_u, blk + "U.", u_in_U);
        int x = add_copy(t, dec.plank_x, blk + "X.", x_in_X);
        int b = t.add_vertex(blk + "b");
        int x2 = add_copy(t, dec.plank_x, blk + "X2.", x_in_X);
        int next_seam_w = add_copy(t, dec.plank_w, "seam" + std::to_string(i + 1) + ".", w_in_W);

        t.add_arc(seam_w, a);
        t.add_arc(u, a);
        t.add_arc(u, x);
        t.add_arc(b, x);
        t.add_arc(b, x2);
        t.add_arc(next_seam_w, x2);

        std::string idx = std::to_string(i);
        g.labels.insert(g.labels.end(), {seam_w, a, u, x, b, x2});
        g.roles.insert(g.roles.end(), {"w" + idx, "a" + idx, "u" + idx, "x" + idx, "b" + idx, "x'" + idx});
        seam_w = next_seam_w;
    }
    return g;
}

LabelledGadget build_d1(const Decomposition& dec) { return build_dn(dec, 1); }

LabelledGadget gadget_over_core(const Digraph& t2_core, int n) {
    Decomposition dec = decompose(t2_core);
    LabelledGadget g = build_dn(dec, n);
    g.flipped = dec.flipped;
    if (dec.flipped) {
        g.tree = reverse(g.tree);
        g.base = reverse(g.base);  // equals t2_core again
    }
    return g;
}

LemmaReport check_labelled_lemma(const LabelledGadget& gadget, const Digraph& t1,
                                 const EnumLimits& limits) {
    if (!classify(t1).is_tree)
        throw Error(ErrorKind::precondition, "check_labelled_lemma requires a tree t1");
    LemmaReport report;
    report.hypothesis_ok = !hom_exists(gadget.base, t1);

    report.hom_count = enumerate_homs(gadget.tree, t1, [&](const VertexMap& f) {
        std::vector<int> images;
        images.reserve(gadget.labels.size());
        for (int v : gadget.labels) images.push_back(f[static_cast<size_t>(v)]);
        std::vector<int> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            report.all_injective = false;
            if (report.first_violation.empty()) {
                for (size_t i = 0; i < images.size(); ++i)
                    for (size_t j = i + 1; j < images.size(); ++j)
                        if (images[i] == images[j] && report.first_violation.empty())
                            report.first_violation = gadget.roles[i] + " and " + gadget.roles[j] +
                                                     " both map to " + t1.name(images[i]);
            }
        }
        return true;
    }, limits);

    report.counting_applies =
        report.hypothesis_ok && static_cast<int>(gadget.labels.size()) > t1.vertex_count();
    report.counting_consistent = !report.counting_applies || report.hom_count == 0;
    return report;
}

Digraph build_zigzag(int k, bool start_forward) {
    if (k < 1)
        throw Error(ErrorKind::precondition, "build_zigzag requires k >= 1");
    Digraph z;
    z.add_vertex("z0");
    for (int i = 1; i <= k; ++i) {
        z.add_vertex("z" + std::to_string(i));
        bool forward = (i % 2 == 1) == start_forward;
        if (forward)
            z.add_arc(i - 1, i);
        else
            z.add_arc(i, i - 1);
    }
    return z;
}

namespace {

std::string free_prefix(const Digraph& g, std::string stem) {
    for (;;) {
        bool clash = false;
        for (int v = 0; v < g.vertex_count() && !clash; ++v)
            clash = g.name(v).rfind(stem, 0) == 0;
        if (!clash) return stem;
        stem = "_" + stem;
    }
}

}  // namespace

JoinResult join_search(const Digraph& a, std::optional<int> va, const Digraph& b,
                       std::optional<int> vb, int max_len,
                       const std::function<bool(const Digraph&)>& accept,
                       const std::string& what) {
    if (max_len < 1)
        throw Error(ErrorKind::precondition, "join_search: max_len must be positive");

    // Names: a's kept, b's behind a collision-free prefix, interior
    // zig-zag vertices fresh.
    Digraph both = disjoint_union(a, b);
    std::string zz = free_prefix(both, "zz.");

    std::vector<int> va_candidates, vb_candidates;
    if (va)
        va_candidates.push_back(*va);
    else
        for (int v = 0; v < a.vertex_count(); ++v) va_candidates.push_back(v);
    if (vb)
        vb_candidates.push_back(*vb);
    else
        for (int v = 0; v < b.vertex_count(); ++v) vb_candidates.push_back(v);

    for (int len = 1; len <= max_len; ++len) {
        for (bool start_forward : {true, false}) {
            for (int ca : va_candidates) {
                for (int cb : vb_candidates) {
                    Digraph j = both;
                    int prev = ca;
                    for (int i = 1; i <= len; ++i) {
                        int next = i == len ? a.vertex_count() + cb
                                            : j.add_vertex(zz + std::to_string(i));
                        bool forward = (i % 2 == 1) == start_forward;
                        if (forward)
                            j.add_arc(prev, next);
                        else
                            j.add_arc(next, prev);
                        prev = next;
                    }
                    if (accept(j)) {
                        JoinResult result;
                        result.tree = std::move(j);
                        result.length = len;
                        result.start_forward = start_forward;
                        result.attach_a = a.name(ca);
                        result.attach_b = both.name(a.vertex_count() + cb);
                        return result;
                    }
                }
            }
        }
    }
    throw Error(ErrorKind::search_failed,
                "zig-zag search exhausted (max length " + std::to_string(max_len) + ") for " + what);
}

JoinResult join_by_zigzag(const Digraph& a, std::optional<int> va, const Digraph& b,
                          std::optional<int> vb, const Digraph& must_map_to,
                          const Digraph& must_not_map_to, int max_len) {
    return join_search(a, va, b, vb, max_len, [&](const Digraph& j) {
        return hom_exists(j, must_map_to) && !hom_exists(j, must_not_map_to);
    }, "join_by_zigzag");
}

namespace {

VertexMap inclusion_hom(const Digraph& sub, const Digraph& whole) {
    VertexMap map(static_cast<size_t>(sub.vertex_count()), -1);
    for (int v = 0; v < sub.vertex_count(); ++v) {
        int idx = whole.index_of(sub.name(v));
        if (idx < 0)
            throw Error(ErrorKind::internal, "inclusion_hom: vertex missing: " + sub.name(v));
        map[static_cast<size_t>(v)] = idx;
    }
    return map;
}

}  // namespace

DensityResult density_witness(const Digraph& t1, const Digraph& t2, int max_zigzag) {
    if (!classify(t1).is_tree || !classify(t2).is_tree)
        throw Error(ErrorKind::precondition, "density_witness requires trees");
    if (compare(t1, t2) != OrderRelation::strictly_below)
        throw Error(ErrorKind::precondition, "density_witness requires t1 strictly below t2");
    if (!is_proper_tree(t2))
        throw Error(ErrorKind::precondition, "density_witness requires a proper t2");

    Digraph t2c = core(t2);
    int n = t1.vertex_count() + 1;
    LabelledGadget gadget = gadget_over_core(t2c, n);

    DensityResult result;
    DensityCertificate& cert = result.cert;
    cert.t1 = t1;
    cert.t2 = t2;
    cert.t2_core = t2c;
    cert.n = n;
    cert.flipped = gadget.flipped;

    // Forest facts first: t1 < t1 + D_n < t2.
    Digraph forest = disjoint_union(t1, gadget.tree);
    if (!hom_exists(gadget.tree, t2c))
        throw Error(ErrorKind::internal, "density_witness: gadget does not map to the core");
    if (hom_exists(gadget.tree, t1))
        throw Error(ErrorKind::internal, "density_witness: gadget unexpectedly maps to t1");
    if (hom_exists(t2c, forest))
        throw Error(ErrorKind::internal, "density_witness: t2 unexpectedly maps to the forest witness");

    if (max_zigzag <= 0) max_zigzag = 4 * (t1.vertex_count() + gadget.tree.vertex_count());

    try {
        JoinResult joined = join_search(
            t1, std::nullopt, gadget.tree, std::nullopt, max_zigzag,
            [&](const Digraph& j) {
                return hom_exists(j, t2c) && !hom_exists(j, t1) && !hom_exists(t2c, j);
            },
            "density witness");
        cert.witness = joined.tree;
        cert.witness_is_tree = true;
        cert.zigzag_length = joined.length;
        cert.zigzag_start_forward = joined.start_forward;
        cert.attach_t1 = joined.attach_a;
        cert.attach_gadget = joined.attach_b;
        result.joined = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::search_failed) throw;
        cert.witness = forest;
        cert.witness_is_tree = false;
        result.joined = false;
        result.diagnostics = e.what();
    }

    cert.hom_t1_to_witness = inclusion_hom(t1, cert.witness);
    auto into_core = find_hom(cert.witness, t2c);
    if (!into_core)
        throw Error(ErrorKind::internal, "density_witness: witness lost its map into the core");
    // Lift from core indices to t2 indices (the core keeps t2's names).
    cert.hom_witness_to_t2.assign(into_core->size(), -1);
    for (size_t v = 0; v < into_core->size(); ++v)
        cert.hom_witness_to_t2[v] = t2.index_of(t2c.name((*into_core)[v]));
    return result;
}

std::string certificate_text(const DensityCertificate& cert) {
    std::ostringstream out;
    out << "density certificate v1\n";
    out << "witness_kind " << (cert.witness_is_tree ? "tree" : "forest") << "\n";
    out << "blocks " << cert.n << "\n";
    out << "orientation_flipped " << (cert.flipped ? "yes" : "no") << "\n";
    if (cert.witness_is_tree) {
        out << "zigzag length=" << cert.zigzag_length
            << " start=" << (cert.zigzag_start_forward ? "forward" : "backward")
            << " attach_t1=" << cert.attach_t1 << " attach_gadget=" << cert.attach_gadget << "\n";
    }
    auto section = [&](const std::string& name, const Digraph& d) {
        out << "section " << name << "\n" << to_edge_list(d) << "end\n";
    };
    section("t1", cert.t1);
    section("t2", cert.t2);
    section("t2_core", cert.t2_core);
    section("witness", cert.witness);
    out << "section hom t1 -> witness\n"
        << hom_to_text(cert.t1, cert.witness, cert.hom_t1_to_witness) << "end\n";
    out << "section hom witness -> t2\n"
        << hom_to_text(cert.witness, cert.t2, cert.hom_witness_to_t2) << "end\n";
    out << "fact witness -/-> t1\n";
    out << "fact t2 -/-> witness\n";
    return out.str();
}

bool verify_certificate(const DensityCertificate& cert, uint64_t oracle_cap) {
    if (!is_valid_hom(cert.t1, cert.witness, cert.hom_t1_to_witness)) return false;
    if (!is_valid_hom(cert.witness, cert.t2, cert.hom_witness_to_t2)) return false;
    if (!hom_exists(cert.t1, cert.witness)) return false;
    if (!hom_exists(cert.witness, cert.t2)) return false;
    if (hom_exists(cert.witness, cert.t1)) return false;
    if (hom_exists(cert.t2, cert.witness)) return false;
    if (oracle_cap > 0) {
        auto oracle_agrees = [&](const Digraph& g, const Digraph& h, bool expected) {
            try {
                return brute_force_hom(g, h, oracle_cap) == expected;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::cap_exceeded) return true;  // outside oracle reach
                throw;
            }
        };
        if (!oracle_agrees(cert.t1, cert.witness, true)) return false;
        if (!oracle_agrees(cert.witness, cert.t2, true)) return false;
        if (!oracle_agrees(cert.witness, cert.t1, false)) return false;
        if (!oracle_agrees(cert.t2, cert.witness, false)) return false;
    }
    return true;
}

}  // namespace treehom
