#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "digraph.hpp"
#include "enumerate.hpp"
#include "hom.hpp"

using namespace treehom;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("oriented tree counts per size") {
    // Regression constants from the exhaustive canonical-form enumeration.
    const size_t expected[] = {1, 1, 3, 8, 27, 91, 350, 1376};
    for (int n = 1; n <= 8; ++n)
        CHECK(oriented_tree_encodings(n).size() == expected[n - 1]);
}

TEST_CASE("canonical tree encodings") {
    SUBCASE("decode then encode is the identity") {
        for (int n = 1; n <= 6; ++n)
            for (const std::string& enc : oriented_tree_encodings(n))
                CHECK(canonical_tree_encoding(decode_tree_encoding(enc)) == enc);
    }

    SUBCASE("invariant under relabeling and arc order") {
        std::mt19937_64 eng(13);
        for (int i = 0; i < 60; ++i) {
            Digraph t = random_tree(2 + static_cast<int>(eng() % 8), eng);
            // Rebuild with shuffled arc insertion order and fresh names.
            std::vector<std::pair<int, int>> arcs = t.arcs();
            std::shuffle(arcs.begin(), arcs.end(), eng);
            Digraph shuffled;
            for (auto [u, v] : arcs)
                shuffled.add_arc("x" + std::to_string(u), "x" + std::to_string(v));
            CHECK(canonical_tree_encoding(shuffled) == canonical_tree_encoding(t));
        }
    }

    SUBCASE("distinct classes get distinct encodings") {
        // Guaranteed by construction, but check the two 3-vertex stars.
        Digraph in2 = parse_digraph("a c\nb c");
        Digraph out2 = parse_digraph("c a\nc b");
        CHECK(canonical_tree_encoding(in2) != canonical_tree_encoding(out2));
    }
}

TEST_CASE("path cores") {
    SUBCASE("counts per arc bound") {
        const size_t expected[] = {1, 2, 3, 4, 5, 7, 9, 13, 19};
        for (int k = 0; k <= 8; ++k) CHECK(enumerate_path_cores(k).size() == expected[k]);
    }

    SUBCASE("bound 1 gives the single vertex and the single arc") {
        auto cores = enumerate_path_cores(1);
        REQUIRE(cores.size() == 2);
        CHECK(cores[0].vertex_count() == 1);
        CHECK(cores[1].vertex_count() == 2);
        CHECK(cores[1].arc_count() == 1);
    }

    SUBCASE("every member is a core and canonical") {
        for (const Digraph& p : enumerate_path_cores(6)) {
            CHECK(classify(p).is_oriented_path);
            CHECK(is_core(p));
        }
    }

    SUBCASE("no two members are equivalent") {
        auto cores = enumerate_path_cores(5);
        for (size_t i = 0; i < cores.size(); ++i)
            for (size_t j = i + 1; j < cores.size(); ++j)
                CHECK(compare(cores[i], cores[j]) != OrderRelation::equivalent);
    }
}

TEST_CASE("canonical path patterns") {
    std::mt19937_64 eng(99);
    for (int i = 0; i < 200; ++i) {
        int len = 1 + static_cast<int>(eng() % 8);
        std::vector<bool> s(static_cast<size_t>(len));
        for (int j = 0; j < len; ++j) s[static_cast<size_t>(j)] = eng() & 1;
        std::vector<bool> c = canonical_path_pattern(s);
        CHECK(canonical_path_pattern(c) == c);  // idempotent
        CHECK(c <= s);
        // Reversal lands in the same class.
        std::vector<bool> flipped = s;
        flipped.flip();
        CHECK(canonical_path_pattern(flipped) == c);
    }
}

TEST_CASE("random generation is seed-deterministic") {
    auto a = random_paths(10, 8, 7);
    auto b = random_paths(10, 8, 7);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(to_edge_list(a[i]) == to_edge_list(b[i]));
    auto c = random_paths(10, 8, 8);
    bool any_diff = false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == c[i])) any_diff = true;
    CHECK(any_diff);

    SUBCASE("random trees too") {
        std::mt19937_64 e1(42), e2(42);
        for (int i = 0; i < 20; ++i) {
            Digraph t1 = random_tree(1 + static_cast<int>(e1() % 9), e1);
            Digraph t2 = random_tree(1 + static_cast<int>(e2() % 9), e2);
            CHECK(t1 == t2);
        }
    }
}

TEST_CASE("small digraph catalogue") {
    CHECK(enumerate_small_digraphs(1).size() == 1);
    CHECK(enumerate_small_digraphs(2).size() == 4);
    CHECK(enumerate_small_digraphs(3).size() == 20);

    SUBCASE("no two members are isomorphic") {
        // Distinctness certified by brute-force bijective-hom search both ways.
        auto all = enumerate_small_digraphs(3);
        for (size_t i = 0; i < all.size(); ++i) {
            for (size_t j = i + 1; j < all.size(); ++j) {
                if (all[i].vertex_count() != all[j].vertex_count()) continue;
                if (all[i].arc_count() != all[j].arc_count()) continue;
                bool iso = false;
                enumerate_homs(all[i], all[j], [&](const VertexMap& f) {
                    std::set<int> image(f.begin(), f.end());
                    if (static_cast<int>(image.size()) == all[j].vertex_count() &&
                        all[i].arc_count() == all[j].arc_count()) {
                        // bijective arc-preserving map between equal arc
                        // counts is an isomorphism
                        iso = true;
                        return false;
                    }
                    return true;
                });
                CHECK_FALSE(iso);
            }
        }
    }
}

TEST_SUITE_END();
