#include "embedding.hpp"

#include <algorithm>
#include <sstream>

namespace treehom {

namespace {

// Path vertices in walk order starting from the smallest-index endpoint.
std::vector<int> path_walk(const Digraph& p) {
    StructureClass sc = classify(p);
    if (!sc.is_oriented_path)
        throw Error(ErrorKind::precondition, "expected an oriented path");
    int n = p.vertex_count();
    if (n == 1) return {0};
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (p.underlying_degree(v) == 1) start = v;
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    while (static_cast<int>(walk.size()) < n) {
        int next = -1;
        for (int w : p.neighbors(cur))
            if (w != prev) next = w;
        prev = cur;
        cur = next;
        walk.push_back(cur);
    }
    return walk;
}

// Level offset of the far end of an alternating tail of length len
// starting with a forward arc iff fwd.
int tail_delta(int len, bool fwd) {
    if (len % 2 == 0) return 0;
    return fwd ? 1 : -1;
}

// Attach an alternating tail to `at`; returns the index of the far end.
int attach_tail(Digraph& t, int at, int len, bool fwd, const std::string& stem,
                const std::string& tip_name) {
    int prev = at;
    for (int i = 1; i <= len; ++i) {
        int next = t.add_vertex(i == len ? tip_name : stem + std::to_string(i));
        bool forward = (i % 2 == 1) == fwd;
        if (forward)
            t.add_arc(prev, next);
        else
            t.add_arc(next, prev);
        prev = next;
    }
    return prev;
}

}  // namespace

std::string path_pattern(const Digraph& p) {
    std::vector<int> walk = path_walk(p);
    if (walk.size() == 1) return ".";
    std::string s;
    for (size_t i = 1; i < walk.size(); ++i)
        s += p.has_arc(walk[i - 1], walk[i]) ? '+' : '-';
    return s;
}

AnchoredTree build_t_prime(const Digraph& t2, int t1_size) {
    if (!classify(t2).is_tree || !is_proper_tree(t2))
        throw Error(ErrorKind::precondition, "build_t_prime requires a proper tree");

    Digraph t2c = core(t2);
    int n = t1_size + 2 * t2c.vertex_count() + 1;
    LabelledGadget gadget = gadget_over_core(t2c, n);

    Digraph big_core = core(gadget.tree);
    auto retraction = find_hom(gadget.tree, big_core);
    if (!retraction)
        throw Error(ErrorKind::internal, "core retraction vanished");

    // Transport the labelled vertices; they must stay pairwise distinct.
    std::vector<int> images;
    images.reserve(gadget.labels.size());
    for (int v : gadget.labels) images.push_back((*retraction)[static_cast<size_t>(v)]);
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::internal,
                    "labelled vertices collided under the core retraction; aborting");
    if (images.size() < 2)
        throw Error(ErrorKind::internal, "fewer than two labelled vertices survived");

    int y = images.front(), z = images.back();
    LevelMap lm = level_map(big_core);
    int delta = lm.level[static_cast<size_t>(z)] - lm.level[static_cast<size_t>(y)];

    // Tails of length 5 or 6, 5 preferred, oriented so the anchors land at
    // equal level: level(y) + d_y == level(z) + d_z.
    struct TailOption {
        int len;
        bool fwd;
    };
    constexpr TailOption options[] = {{5, true}, {5, false}, {6, true}, {6, false}};
    const TailOption* chosen_y = nullptr;
    const TailOption* chosen_z = nullptr;
    for (const auto& oy : options) {
        for (const auto& oz : options) {
            if (tail_delta(oy.len, oy.fwd) - tail_delta(oz.len, oz.fwd) == delta) {
                chosen_y = &oy;
                chosen_z = &oz;
                break;
            }
        }
        if (chosen_y) break;
    }
    if (!chosen_y)
        throw Error(ErrorKind::internal,
                    "anchor levels differ by more than two; no 5/6 tail choice works");

    AnchoredTree at;
    at.base = t2c;
    at.n = n;
    at.flipped = gadget.flipped;
    at.tree = big_core;
    at.y_anchor_root = big_core.name(y);
    at.z_anchor_root = big_core.name(z);
    at.y_tail_len = chosen_y->len;
    at.y_tail_forward = chosen_y->fwd;
    at.z_tail_len = chosen_z->len;
    at.z_tail_forward = chosen_z->fwd;
    at.y_prime = attach_tail(at.tree, y, chosen_y->len, chosen_y->fwd, "ya", "y'");
    at.z_prime = attach_tail(at.tree, z, chosen_z->len, chosen_z->fwd, "za", "z'");
    return at;
}

AnchoredTree build_t_double_prime(const Digraph& t1, const AnchoredTree& t_prime, int max_zigzag) {
    if (!classify(t1).is_tree)
        throw Error(ErrorKind::precondition, "build_t_double_prime requires a tree t1");
    if (compare(t1, t_prime.base) != OrderRelation::strictly_below)
        throw Error(ErrorKind::precondition, "build_t_double_prime requires t1 strictly below t2");

    const Digraph& t2c = t_prime.base;
    if (max_zigzag <= 0) max_zigzag = 4 * (t1.vertex_count() + t_prime.tree.vertex_count());

    auto accept = [&](const Digraph& j) {
        // Anchors must stay free: an attachment at y'/z' raises its degree.
        int yp = j.index_of("y'");
        int zp = j.index_of("z'");
        if (yp < 0 || zp < 0) return false;
        if (j.underlying_degree(yp) != 1 || j.underlying_degree(zp) != 1) return false;
        if (!hom_exists(j, t2c)) return false;
        if (hom_exists(j, t1)) return false;
        if (hom_exists(t2c, j)) return false;
        // Copies of the gadget glue at the anchors in phi, so the gadget
        // must still map onto the core with both anchors identified; that
        // is a homomorphism pinning y' and z' to a common image.
        for (int c = 0; c < t2c.vertex_count(); ++c)
            if (find_hom_tree(j, t2c, {{yp, c}, {zp, c}})) return true;
        return false;
    };

    JoinResult joined =
        join_search(t_prime.tree, std::nullopt, t1, std::nullopt, max_zigzag, accept, "t'' join");

    AnchoredTree result = t_prime;
    result.tree = joined.tree;
    result.y_prime = result.tree.index_of("y'");
    result.z_prime = result.tree.index_of("z'");
    result.join_length = joined.length;
    result.join_start_forward = joined.start_forward;
    result.join_attach_gadget = joined.attach_a;
    result.join_attach_t1 = joined.attach_b;
    return result;
}

Digraph phi(const Digraph& p, const AnchoredTree& gadget) {
    if (!classify(p).is_oriented_path)
        throw Error(ErrorKind::precondition, "phi requires an oriented path");
    if (p.arc_count() < 1)
        throw Error(ErrorKind::precondition, "phi requires a path with at least one arc");

    std::vector<int> walk = path_walk(p);
    const Digraph& g = gadget.tree;

    Digraph result;
    // Junction vertices in walk order; junction j stands for path vertex
    // walk[j] and absorbs the anchors of the adjacent copies.
    std::vector<int> junction(walk.size(), -1);
    auto ensure_junction = [&](size_t j) {
        if (junction[j] < 0) junction[j] = result.add_vertex("n" + std::to_string(j));
        return junction[j];
    };

    for (size_t arc = 1; arc < walk.size(); ++arc) {
        bool forward = p.has_arc(walk[arc - 1], walk[arc]);
        int tail_junction = ensure_junction(forward ? arc - 1 : arc);
        int head_junction = ensure_junction(forward ? arc : arc - 1);

        std::string prefix = "c" + std::to_string(arc) + ".";
        std::vector<int> remap(static_cast<size_t>(g.vertex_count()), -1);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == gadget.y_prime)
                remap[static_cast<size_t>(v)] = tail_junction;
            else if (v == gadget.z_prime)
                remap[static_cast<size_t>(v)] = head_junction;
            else
                remap[static_cast<size_t>(v)] = result.add_vertex(prefix + g.name(v));
        }
        for (auto [a, b] : g.arcs())
            result.add_arc(remap[static_cast<size_t>(a)], remap[static_cast<size_t>(b)]);
    }
    return result;
}

EmbeddingReport verify_interval_embedding(const std::vector<Digraph>& paths, const Digraph& t1,
                                          const Digraph& t2, const AnchoredTree& gadget) {
    EmbeddingReport report;
    size_t n = paths.size();
    std::vector<Digraph> phis;
    phis.reserve(n);
    for (const Digraph& p : paths) {
        report.path_names.push_back(path_pattern(p));
        phis.push_back(phi(p, gadget));
    }

    // Hom matrices once; both relations per ordered pair fall out of them.
    std::vector<std::vector<char>> path_hom(n, std::vector<char>(n)), phi_hom(n, std::vector<char>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            path_hom[i][j] = hom_exists(paths[i], paths[j]);
            phi_hom[i][j] = hom_exists(phis[i], phis[j]);
        }
    }
    auto relation = [](bool below, bool above) {
        if (below && above) return OrderRelation::equivalent;
        if (below) return OrderRelation::strictly_below;
        if (above) return OrderRelation::strictly_above;
        return OrderRelation::incomparable;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            EmbeddingPair pair;
            pair.i = static_cast<int>(i);
            pair.j = static_cast<int>(j);
            pair.path_rel = relation(path_hom[i][j], path_hom[j][i]);
            pair.phi_rel = relation(phi_hom[i][j], phi_hom[j][i]);
            pair.match = pair.path_rel == pair.phi_rel;
            if (!pair.match) report.all_match = false;
            report.pairs.push_back(pair);
        }
    }

    for (size_t i = 0; i < n; ++i) {
        std::array<bool, 4> checks{
            hom_exists(t1, phis[i]),
            !hom_exists(phis[i], t1),
            hom_exists(phis[i], t2),
            !hom_exists(t2, phis[i]),
        };
        if (!(checks[0] && checks[1] && checks[2] && checks[3])) report.interval_ok = false;
        report.interval.push_back(checks);
    }
    return report;
}

std::string report_text(const EmbeddingReport& report) {
    std::ostringstream out;
    out << "embedding report\n";
    out << "paths " << report.path_names.size() << "\n";
    for (size_t i = 0; i < report.path_names.size(); ++i)
        out << "path " << i << " " << report.path_names[i] << "\n";
    for (const EmbeddingPair& p : report.pairs) {
        out << "pair " << p.i << " " << p.j << " path=" << to_string(p.path_rel)
            << " phi=" << to_string(p.phi_rel) << " match=" << (p.match ? "yes" : "no") << "\n";
    }
    for (size_t i = 0; i < report.interval.size(); ++i) {
        const auto& c = report.interval[i];
        bool ok = c[0] && c[1] && c[2] && c[3];
        out << "interval " << i << " ok=" << (ok ? "yes" : "no");
        if (!ok)
            out << " t1<=phi=" << c[0] << " phi-/->t1=" << c[1] << " phi<=t2=" << c[2]
                << " t2-/->phi=" << c[3];
        out << "\n";
    }
    out << "all_match " << (report.all_match ? "yes" : "no") << "\n";
    out << "interval_ok " << (report.interval_ok ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace treehom
