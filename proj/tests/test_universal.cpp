#include <doctest.h>

#include "labelforest/generate.hpp"
#include "labelforest/universal.hpp"

using namespace labelforest;

TEST_CASE("tiny universal graphs") {
    UniversalGraph u1 = build_universal(1, Scheme::tree);
    CHECK(u1.vertices.size() == 1);
    CHECK(u1.edges().empty());

    UniversalGraph u2 = build_universal(2, Scheme::tree);
    CHECK(u2.vertices.size() >= 2);
    CHECK(!u2.edges().empty());

    CHECK_THROWS(build_universal(0, Scheme::tree));
    CHECK_THROWS(build_universal(11, Scheme::tree));
}

TEST_CASE("universal output is deterministic") {
    UniversalGraph a = build_universal(4, Scheme::tree);
    UniversalGraph b = build_universal(4, Scheme::tree);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (size_t i = 0; i < a.vertices.size(); ++i) CHECK(a.vertices[i] == b.vertices[i]);
}

TEST_CASE("P3 embeds induced: the two ends stay non-adjacent") {
    UniversalGraph u = build_universal(4, Scheme::tree);
    RootedTree t;
    t.n = 3;
    t.parent = {-1, 0, 1};
    t.root = 0;
    t.real.assign(3, 1);
    CHECK(embed_check(u, t).ok());
}

TEST_CASE("every tree n <= 6 embeds into U6") {
    UniversalGraph u = build_universal(6, Scheme::tree);
    for (uint32_t n = 1; n <= 6; ++n) {
        ParentArrayEnumerator en(n);
        RootedTree t;
        while (en.next(t)) CHECK(embed_check(u, t).ok());
    }
}

TEST_CASE("SimpleGraph validation") {
    CHECK_NOTHROW(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}));  // cycles allowed
    CHECK_THROWS(SimpleGraph(3, {{0, 0}}));
    CHECK_THROWS(SimpleGraph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(SimpleGraph(2, {{0, 2}}));
}

TEST_CASE("peel_forests: tree is one part, K4 is <= 3 greedy parts") {
    Forest f = gen_tree({Family::uniform_prufer, 40, 2});
    SimpleGraph t(40, f.edges());
    ForestPartition pt = peel_forests(t);
    CHECK(pt.parts == 1);
    CHECK_NOTHROW(validate_partition(t, pt));

    SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ForestPartition pk = peel_forests(k4);
    CHECK(pk.parts == 3);  // spanning tree, 2-edge forest, final edge
    CHECK_NOTHROW(validate_partition(k4, pk));
}

TEST_CASE("validate_partition rejects cycles and bad covers") {
    SimpleGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    ForestPartition all_one{1, {0, 0, 0}};
    CHECK_THROWS(validate_partition(tri, all_one));
    ForestPartition split{2, {0, 0, 1}};
    CHECK_NOTHROW(validate_partition(tri, split));
    ForestPartition short_cover{2, {0, 0}};
    CHECK_THROWS(validate_partition(tri, short_cover));
}

TEST_CASE("composite k=1 wraps the tree scheme") {
    Forest f = gen_tree({Family::uniform_prufer, 30, 5});
    SimpleGraph g(30, f.edges());
    ForestPartition p = peel_forests(g);
    auto lab = composite_encode(g, p);
    for (uint32_t u = 0; u < 30; ++u)
        for (uint32_t v = 0; v < 30; ++v)
            CHECK(composite_decode(lab[u], lab[v]) == (u != v && g.adjacent(u, v)));
}

TEST_CASE("K4 with the optimal 2-forest partition") {
    SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ForestPartition p;
    p.parts = 2;
    for (auto [u, v] : k4.edges) {
        bool path1 = (u == 0 && v == 1) || (u == 1 && v == 2) || (u == 2 && v == 3);
        p.part.push_back(path1 ? 0 : 1);
    }
    CHECK_NOTHROW(validate_partition(k4, p));
    auto lab = composite_encode(k4, p);
    for (uint32_t u = 0; u < 4; ++u)
        for (uint32_t v = 0; v < 4; ++v)
            CHECK(composite_decode(lab[u], lab[v]) == (u != v));
    CHECK(!composite_decode(lab[2], lab[2]));
}

TEST_CASE("absent flags: isolated-in-part nodes never match") {
    // two disjoint edges in one part; nodes 4 is globally isolated
    SimpleGraph g(5, {{0, 1}, {2, 3}});
    ForestPartition p{1, {0, 0}};
    auto lab = composite_encode(g, p);
    CHECK(composite_decode(lab[0], lab[1]));
    CHECK(!composite_decode(lab[0], lab[2]));
    CHECK(!composite_decode(lab[4], lab[0]));
    CHECK(!composite_decode(lab[4], lab[4]));
}
