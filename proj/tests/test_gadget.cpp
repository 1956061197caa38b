#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "digraph.hpp"
#include "enumerate.hpp"
#include "gadget.hpp"
#include "hom.hpp"

using namespace treehom;

namespace {

// The first proper tree found by the exhaustive enumeration (8 vertices).
Digraph proper8() {
    return parse_digraph("t2 t1\nt3 t4\nt1 t3\nt1 t0\nt7 t6\nt6 t5\nt5 t0\n");
}

Digraph directed_path(int k) { return make_path(std::vector<bool>(static_cast<size_t>(k), true)); }

}  // namespace

TEST_SUITE_BEGIN("gadget");

TEST_CASE("plank") {
    Digraph t = proper8();
    int t1 = t.index_of("t1");

    SUBCASE("a leaf to itself is the single vertex") {
        int t4 = t.index_of("t4");
        Digraph p = plank(t, t4, {t4});
        CHECK(p.vertex_count() == 1);
        CHECK(p.name(0) == "t4");
    }

    SUBCASE("whole vertex set gives the tree back") {
        std::vector<int> all;
        for (int v = 0; v < t.vertex_count(); ++v) all.push_back(v);
        CHECK(plank(t, t1, all) == induced_subgraph(t, all));
    }

    SUBCASE("branch through a leaf neighbour") {
        Digraph star = parse_digraph("u x\nw x\nx v");
        Digraph p = plank(star, star.index_of("x"), {star.index_of("v")});
        CHECK(p.vertex_count() == 2);
        CHECK(p.has_vertex("x"));
        CHECK(p.has_vertex("v"));
    }

    SUBCASE("path vertices between base and target are included") {
        int t7 = t.index_of("t7");
        Digraph p = plank(t, t1, {t7});
        // t1 .. t0 .. t5 .. t6 .. t7
        CHECK(p.vertex_count() == 5);
        CHECK(p.has_vertex("t0"));
        CHECK(p.has_vertex("t6"));
    }

    SUBCASE("rejects foreign vertices") {
        CHECK_THROWS_AS(plank(t, 100, {0}), Error);
        CHECK_THROWS_AS(plank(t, 0, {100}), Error);
    }
}

TEST_CASE("decompose") {
    SUBCASE("paths are rejected") {
        CHECK_THROWS_AS(decompose(directed_path(4)), Error);
        CHECK_THROWS_AS(decompose(make_path({true, false, true})), Error);
    }

    SUBCASE("the first proper tree decomposes through the flip") {
        Decomposition dec = decompose(proper8());
        CHECK(dec.flipped);
        CHECK(dec.base.name(dec.x) == "t1");
        CHECK(dec.base.name(dec.u) == "t3");
        CHECK(dec.base.name(dec.w) == "t0");
        CHECK(dec.plank_u.vertex_count() == 2);
        CHECK(dec.plank_x.vertex_count() == 2);
        CHECK(dec.plank_w.vertex_count() == 4);
        CHECK(dec.x_prime.size() == 1);
        CHECK(reassembles(dec));
        // Normalization gives both chosen neighbours arcs into x.
        CHECK(dec.base.has_arc(dec.u, dec.x));
        CHECK(dec.base.has_arc(dec.w, dec.x));
    }

    SUBCASE("the reversed tree needs no flip") {
        Decomposition dec = decompose(reverse(proper8()));
        CHECK_FALSE(dec.flipped);
        CHECK(reassembles(dec));
        CHECK(dec.base.has_arc(dec.u, dec.x));
        CHECK(dec.base.has_arc(dec.w, dec.x));
    }

    SUBCASE("reassembly holds for every proper tree with 8 vertices") {
        for (const std::string& enc : oriented_tree_encodings(8)) {
            Digraph t = decode_tree_encoding(enc);
            if (!is_proper_tree(t)) continue;
            CHECK(reassembles(decompose(t)));
        }
    }
}

TEST_CASE("build_dn") {
    Decomposition dec = decompose(proper8());

    SUBCASE("inventory and labels") {
        LabelledGadget d1 = build_d1(dec);
        CHECK(d1.labels.size() == 6);
        CHECK(d1.tree.vertex_count() ==
              2 * dec.plank_w.vertex_count() + dec.plank_u.vertex_count() +
                  2 * dec.plank_x.vertex_count() + 2);
        CHECK(classify(d1.tree).is_tree);
        CHECK(d1.roles[0] == "w1");
        CHECK(d1.roles[5] == "x'1");
        CHECK(build_dn(dec, 1).tree == d1.tree);
    }

    SUBCASE("sharing arithmetic") {
        LabelledGadget d1 = build_d1(dec);
        for (int n = 2; n <= 4; ++n) {
            LabelledGadget dn = build_dn(dec, n);
            CHECK(dn.tree.vertex_count() ==
                  n * d1.tree.vertex_count() - (n - 1) * dec.plank_w.vertex_count());
            CHECK(dn.labels.size() == static_cast<size_t>(6 * n));
            CHECK(classify(dn.tree).is_tree);
        }
    }

    SUBCASE("labelled vertices are pairwise distinct and consecutive ones adjacent") {
        LabelledGadget d3 = build_dn(dec, 3);
        for (size_t i = 0; i < d3.labels.size(); ++i)
            for (size_t j = i + 1; j < d3.labels.size(); ++j)
                CHECK(d3.labels[i] != d3.labels[j]);
        for (size_t i = 1; i < d3.labels.size(); ++i) {
            int a = d3.labels[i - 1], b = d3.labels[i];
            CHECK((d3.tree.has_arc(a, b) || d3.tree.has_arc(b, a)));
        }
    }

    SUBCASE("maps onto the base but never back") {
        for (int n = 1; n <= 3; ++n) {
            LabelledGadget dn = gadget_over_core(core(proper8()), n);
            CHECK(hom_exists(dn.tree, dn.base));
            CHECK_FALSE(hom_exists(dn.base, dn.tree));
        }
    }

    SUBCASE("n must be positive") { CHECK_THROWS_AS(build_dn(dec, 0), Error); }
}

TEST_CASE("labelled-vertex lemma") {
    Digraph t2c = core(proper8());
    LabelledGadget d1 = gadget_over_core(t2c, 1);
    LabelledGadget d2 = gadget_over_core(t2c, 2);
    LabelledGadget d3 = gadget_over_core(t2c, 3);

    SUBCASE("block shifts are the only homomorphisms, all label-injective") {
        LemmaReport rep = check_labelled_lemma(d1, d2.tree);
        CHECK(rep.hypothesis_ok);
        CHECK(rep.hom_count == 2);
        CHECK(rep.all_injective);

        rep = check_labelled_lemma(d1, d3.tree);
        CHECK(rep.hom_count == 3);
        CHECK(rep.all_injective);

        rep = check_labelled_lemma(d2, d3.tree);
        CHECK(rep.hom_count == 2);
        CHECK(rep.all_injective);
    }

    SUBCASE("counting corollary: more labels than target vertices means no hom") {
        LemmaReport rep = check_labelled_lemma(d2, parse_digraph("a b"));
        CHECK(rep.hypothesis_ok);
        CHECK(rep.counting_applies);
        CHECK(rep.hom_count == 0);
        CHECK(rep.counting_consistent);
    }

    SUBCASE("hypothesis violation is reported, not thrown") {
        LemmaReport rep = check_labelled_lemma(d1, d1.base);
        CHECK_FALSE(rep.hypothesis_ok);
    }

    SUBCASE("enumeration caps are honoured") {
        EnumLimits tight;
        tight.max_nodes = 3;
        CHECK_THROWS_AS(check_labelled_lemma(d1, d2.tree, tight), Error);
    }
}

TEST_CASE("zigzag") {
    Digraph z1 = build_zigzag(1, true);
    CHECK(z1.vertex_count() == 2);
    CHECK(z1.has_arc(0, 1));

    for (int k = 1; k <= 8; ++k) {
        for (bool fwd : {true, false}) {
            Digraph z = build_zigzag(k, fwd);
            CHECK(z.vertex_count() == k + 1);
            CHECK(z.arc_count() == k);
            LevelMap lm = level_map(z);
            CHECK(lm.height == 1);
            bool same_level = lm.level.front() == lm.level.back();
            CHECK(same_level == (k % 2 == 0));
        }
    }
    CHECK_THROWS_AS(build_zigzag(0, true), Error);
}

TEST_CASE("join_by_zigzag") {
    Digraph arc = parse_digraph("a b");
    Digraph k1 = parse_digraph("v");

    SUBCASE("first certified candidate, frozen") {
        JoinResult j = join_by_zigzag(arc, std::nullopt, arc, std::nullopt, arc, k1, 20);
        CHECK(j.length == 1);
        CHECK(j.start_forward);
        CHECK(j.attach_a == "a");
        CHECK(j.attach_b == "g2.b");
        CHECK(j.tree.vertex_count() == 4);
        CHECK(classify(j.tree).is_tree);
        CHECK(hom_exists(j.tree, arc));
        CHECK_FALSE(hom_exists(j.tree, k1));
    }

    SUBCASE("vertex count arithmetic") {
        Digraph p3 = directed_path(3);
        JoinResult j = join_by_zigzag(arc, 0, p3, 0, p3, k1, 30);
        CHECK(j.tree.vertex_count() == arc.vertex_count() + p3.vertex_count() + j.length - 1);
    }

    SUBCASE("exhaustion is an explicit failure") {
        CHECK_THROWS_AS(join_by_zigzag(arc, std::nullopt, arc, std::nullopt, k1, arc, 5), Error);
        try {
            join_by_zigzag(arc, std::nullopt, arc, std::nullopt, k1, arc, 5);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::search_failed);
        }
    }
}

TEST_CASE("density witness") {
    Digraph arc = parse_digraph("a b");
    Digraph t2 = proper8();

    SUBCASE("precondition failures") {
        CHECK_THROWS_AS(density_witness(arc, arc), Error);               // not strictly below
        CHECK_THROWS_AS(density_witness(arc, directed_path(5)), Error);  // t2 not proper
        CHECK_THROWS_AS(density_witness(t2, arc), Error);                // wrong way round
    }

    SUBCASE("arc below the first proper tree") {
        DensityResult res = density_witness(arc, t2);
        CHECK(res.joined);
        const DensityCertificate& cert = res.cert;
        CHECK(cert.witness_is_tree);
        CHECK(classify(cert.witness).is_tree);
        CHECK(cert.n == 3);
        CHECK(cert.zigzag_length == 1);
        CHECK(cert.witness.vertex_count() == 42);
        CHECK(cert.flipped);

        // The four facts, re-derived by solver and oracle.
        CHECK(verify_certificate(cert));
        CHECK(verify_certificate(cert, 2'000'000));

        // Facts restated directly.
        CHECK(hom_exists(cert.t1, cert.witness));
        CHECK_FALSE(hom_exists(cert.witness, cert.t1));
        CHECK(hom_exists(cert.witness, cert.t2));
        CHECK_FALSE(hom_exists(cert.t2, cert.witness));
    }

    SUBCASE("deterministic output") {
        std::string a = certificate_text(density_witness(arc, t2).cert);
        std::string b = certificate_text(density_witness(arc, t2).cert);
        CHECK(a == b);
        CHECK(a.find("density certificate v1") == 0);
        CHECK(a.find("witness_kind tree") != std::string::npos);
        CHECK(a.find("section hom t1 -> witness") != std::string::npos);
        CHECK(a.find("fact t2 -/-> witness") != std::string::npos);
    }

    SUBCASE("a tampered certificate fails verification") {
        DensityCertificate cert = density_witness(arc, t2).cert;
        cert.hom_witness_to_t2[0] = (cert.hom_witness_to_t2[0] + 1) % cert.t2.vertex_count();
        CHECK_FALSE(verify_certificate(cert));
    }
}

TEST_SUITE_END();
