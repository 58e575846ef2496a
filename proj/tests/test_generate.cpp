#include <doctest.h>

#include <set>

#include "labelforest/generate.hpp"

using namespace labelforest;

TEST_CASE("family names round-trip") {
    for (Family f : {Family::path, Family::star, Family::caterpillar, Family::binary,
                     Family::uniform_prufer, Family::random_recursive, Family::broom})
        CHECK(family_from_string(family_to_string(f)) == f);
    CHECK_THROWS(family_from_string("nope"));
}

TEST_CASE("generation is deterministic in the spec") {
    for (Family fam : {Family::caterpillar, Family::uniform_prufer, Family::random_recursive}) {
        Forest a = gen_tree({fam, 500, 42});
        Forest b = gen_tree({fam, 500, 42});
        Forest c = gen_tree({fam, 500, 43});
        CHECK(a.edges() == b.edges());
        CHECK(a.edges() != c.edges());
    }
}

TEST_CASE("family shapes") {
    Forest path = gen_tree({Family::path, 10, 0});
    int deg1 = 0;
    for (uint32_t u = 0; u < 10; ++u) {
        CHECK(path.degree(u) <= 2);
        deg1 += path.degree(u) == 1;
    }
    CHECK(deg1 == 2);

    Forest star = gen_tree({Family::star, 10, 0});
    uint32_t center = 0;
    for (uint32_t u = 0; u < 10; ++u)
        if (star.degree(u) == 9) center = u;
    CHECK(star.degree(center) == 9);

    Forest bin = gen_tree({Family::binary, 15, 0});
    for (uint32_t u = 1; u < 15; ++u) CHECK(bin.adjacent(u, (u - 1) / 2));

    Forest broom = gen_tree({Family::broom, 20, 1});
    CHECK(broom.node_count() == 20);
    CHECK(broom.edges().size() == 19);  // a tree by construction
}

TEST_CASE("prufer trees are valid trees") {
    // Forest construction itself rejects cycles, so surviving construction at
    // n-1 edges means connected.
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Forest f = gen_tree({Family::uniform_prufer, 200, seed});
        CHECK(f.edges().size() == 199);
    }
}

TEST_CASE("enumerator counts (n-1)! rooted trees, all distinct") {
    const uint64_t fact[] = {1, 1, 1, 2, 6, 24, 120, 720};
    for (uint32_t n = 1; n <= 7; ++n) {
        ParentArrayEnumerator en(n);
        RootedTree t;
        std::set<std::vector<int32_t>> seen;
        while (en.next(t)) {
            CHECK(t.n == n);
            CHECK(t.parent[0] == -1);
            for (uint32_t v = 1; v < n; ++v) {
                CHECK(t.parent[v] >= 0);
                CHECK(static_cast<uint32_t>(t.parent[v]) < v);
            }
            seen.insert(t.parent);
        }
        CHECK(seen.size() == fact[n]);
    }
    CHECK_THROWS(ParentArrayEnumerator(0));
    CHECK_THROWS(ParentArrayEnumerator(11));
}
