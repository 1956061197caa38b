#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "digraph.hpp"
#include "enumerate.hpp"
#include "hom.hpp"

using namespace treehom;

TEST_SUITE_BEGIN("digraph");

TEST_CASE("parse edge lists") {
    Digraph d = parse_digraph("a b\nb c");
    CHECK(d.vertex_count() == 3);
    CHECK(d.arc_count() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 2));
    CHECK(d.name(0) == "a");

    SUBCASE("comments, blanks and isolated vertices") {
        Digraph e = parse_digraph("# header\n\n  \nx\na b\n");
        CHECK(e.vertex_count() == 3);
        CHECK(e.arc_count() == 1);
        CHECK(e.name(0) == "x");
    }

    SUBCASE("loop rejected") {
        CHECK_THROWS_WITH_AS(parse_digraph("a a"), doctest::Contains("irreflexive"), Error);
    }

    SUBCASE("duplicate arc rejected") {
        CHECK_THROWS_WITH_AS(parse_digraph("a b\na b"), doctest::Contains("line 2"), Error);
    }

    SUBCASE("malformed line rejected with its number") {
        CHECK_THROWS_WITH_AS(parse_digraph("a b\nx y z"), doctest::Contains("line 2"), Error);
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 eng(11);
    for (int i = 0; i < 50; ++i) {
        Digraph t = random_tree(1 + static_cast<int>(eng() % 9), eng);
        Digraph back = parse_digraph(to_edge_list(t));
        CHECK(back == t);
    }
    Digraph with_isolated = parse_digraph("solo\na b");
    CHECK(parse_digraph(to_edge_list(with_isolated)) == with_isolated);
}

TEST_CASE("classify") {
    CHECK(classify(parse_digraph("a b")).is_tree);
    CHECK(classify(parse_digraph("a b")).is_oriented_path);

    Digraph cycle3 = parse_digraph("a b\nb c\nc a");
    StructureClass sc = classify(cycle3);
    CHECK(sc.connected);
    CHECK(sc.has_cycle);
    CHECK_FALSE(sc.is_tree);

    Digraph star = parse_digraph("u x\nw x\nx v");
    sc = classify(star);
    CHECK(sc.is_tree);
    CHECK_FALSE(sc.is_oriented_path);

    SUBCASE("two opposite arcs form a cycle") {
        CHECK(classify(parse_digraph("a b\nb a")).has_cycle);
    }

    SUBCASE("single vertex") {
        StructureClass one = classify(parse_digraph("v"));
        CHECK(one.connected);
        CHECK(one.is_tree);
        CHECK(one.is_oriented_path);
    }

    SUBCASE("disconnected") {
        CHECK_FALSE(classify(parse_digraph("a b\nc d")).connected);
    }

    SUBCASE("invariant under renaming") {
        std::mt19937_64 eng(7);
        for (int i = 0; i < 30; ++i) {
            Digraph t = random_tree(2 + static_cast<int>(eng() % 7), eng);
            std::unordered_map<std::string, std::string> ren;
            for (int v = 0; v < t.vertex_count(); ++v)
                ren[t.name(v)] = "k" + std::to_string(eng() % 1000) + "_" + std::to_string(v);
            StructureClass a = classify(t), b = classify(rename_vertices(t, ren));
            CHECK(a.connected == b.connected);
            CHECK(a.is_tree == b.is_tree);
            CHECK(a.is_oriented_path == b.is_oriented_path);
            CHECK(a.has_cycle == b.has_cycle);
        }
    }
}

TEST_CASE("level map") {
    SUBCASE("directed path has height k") {
        for (int k = 1; k <= 6; ++k) {
            LevelMap lm = level_map(make_path(std::vector<bool>(static_cast<size_t>(k), true)));
            CHECK(lm.height == k);
            CHECK(lm.level.front() == 0);
            CHECK(lm.level.back() == k);
        }
    }

    SUBCASE("zig-zags have height 1") {
        for (int k = 1; k <= 7; ++k) {
            std::vector<bool> pattern(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) pattern[static_cast<size_t>(i)] = i % 2 == 0;
            CHECK(level_map(make_path(pattern)).height == 1);
        }
    }

    SUBCASE("star levels are forced by the arcs") {
        Digraph star = parse_digraph("u x\nw x\nx v");
        LevelMap lm = level_map(star);
        CHECK(lm.level[0] == 0);  // u
        CHECK(lm.level[1] == 1);  // x
        CHECK(lm.level[2] == 0);  // w
        CHECK(lm.level[3] == 2);  // v
        CHECK(lm.height == 2);
    }

    SUBCASE("arc relation holds everywhere") {
        std::mt19937_64 eng(23);
        for (int i = 0; i < 40; ++i) {
            Digraph t = random_tree(2 + static_cast<int>(eng() % 8), eng);
            LevelMap lm = level_map(t);
            for (auto [u, v] : t.arcs())
                CHECK(lm.level[static_cast<size_t>(v)] - lm.level[static_cast<size_t>(u)] == 1);
        }
    }

    SUBCASE("height equals the max forward-minus-backward over subpaths") {
        // The subpath formulation, computed directly over all vertex pairs.
        std::mt19937_64 eng(29);
        for (int i = 0; i < 25; ++i) {
            Digraph t = random_tree(2 + static_cast<int>(eng() % 7), eng);
            LevelMap lm = level_map(t);
            int best = 0;
            for (int a = 0; a < t.vertex_count(); ++a)
                for (int b = 0; b < t.vertex_count(); ++b)
                    best = std::max(best, lm.level[static_cast<size_t>(b)] -
                                              lm.level[static_cast<size_t>(a)]);
            CHECK(lm.height == best);
        }
    }

    SUBCASE("rejects non-trees") {
        CHECK_THROWS_AS(level_map(parse_digraph("a b\nb c\nc a")), Error);
    }

    SUBCASE("level map is a homomorphism onto the directed path") {
        std::mt19937_64 eng(31);
        for (int i = 0; i < 25; ++i) {
            Digraph t = random_tree(2 + static_cast<int>(eng() % 7), eng);
            LevelMap lm = level_map(t);
            Digraph path = make_path(std::vector<bool>(static_cast<size_t>(std::max(lm.height, 1)), true));
            VertexMap f(lm.level.begin(), lm.level.end());
            CHECK(is_valid_hom(t, path, f));
        }
    }
}

TEST_CASE("reverse") {
    Digraph arc = parse_digraph("a b");
    Digraph rev = reverse(arc);
    CHECK(rev.has_arc(1, 0));
    CHECK_FALSE(rev.has_arc(0, 1));

    std::mt19937_64 eng(41);
    for (int i = 0; i < 30; ++i) {
        Digraph t = random_tree(2 + static_cast<int>(eng() % 8), eng);
        CHECK(reverse(reverse(t)) == t);
        CHECK(level_map(reverse(t)).height == level_map(t).height);
    }
}

TEST_CASE("disjoint union") {
    Digraph a = parse_digraph("a b");
    Digraph u = disjoint_union(a, a);
    CHECK(u.vertex_count() == 4);
    CHECK(u.arc_count() == 2);
    CHECK_FALSE(classify(u).connected);

    SUBCASE("union with the empty digraph") {
        Digraph empty;
        CHECK(disjoint_union(a, empty) == a);
    }

    SUBCASE("renaming avoids collisions") {
        Digraph tricky = parse_digraph("g2.a g2.b");
        Digraph v = disjoint_union(tricky, tricky);
        CHECK(v.vertex_count() == 4);
        for (int i = 0; i < v.vertex_count(); ++i)
            for (int j = i + 1; j < v.vertex_count(); ++j) CHECK(v.name(i) != v.name(j));
    }
}

TEST_CASE("dot output") {
    Digraph arc = parse_digraph("a b");
    std::string dot = to_dot(arc);
    CHECK(dot.find("a -> b") != std::string::npos);
    CHECK(to_dot(Digraph{}) == "digraph G {\n}\n");

    SUBCASE("odd names get quoted") {
        Digraph odd = parse_digraph("blk1.x' n0");
        std::string text = to_dot(odd);
        CHECK(text.find("\"blk1.x'\"") != std::string::npos);
    }

    SUBCASE("labels show up") {
        std::string text = to_dot(arc, {{"a", "w1"}});
        CHECK(text.find("label=w1") != std::string::npos);
    }

    SUBCASE("deterministic") {
        Digraph t = parse_digraph("u x\nw x\nx v");
        CHECK(to_dot(t) == to_dot(t));
    }
}

TEST_CASE("merge vertices") {
    Digraph path = parse_digraph("a b\nb c");
    Digraph merged = merge_vertices(path, 0, 2);  // identify a and c
    CHECK(merged.vertex_count() == 2);
    CHECK(merged.arc_count() == 2);
    CHECK(classify(merged).has_cycle);
    CHECK_THROWS_AS(merge_vertices(parse_digraph("a b"), 0, 1), Error);
}

TEST_SUITE_END();
