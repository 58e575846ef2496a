#include <doctest.h>

#include "labelforest/generate.hpp"
#include "labelforest/hld.hpp"

using namespace labelforest;

namespace {

RootedTree from_parents(std::vector<int32_t> parent) {
    RootedTree t;
    t.n = static_cast<uint32_t>(parent.size());
    t.parent = std::move(parent);
    t.root = 0;
    t.real.assign(t.n, 1);
    return t;
}

// Definition 2 evaluated literally: climb while every node on the path keeps
// weight class <= wc(u).
void brute_rld(const RootedTree& t, const HldInfo& h, uint32_t u, uint32_t& top,
               uint32_t& rld) {
    top = u;
    rld = 0;
    uint32_t lights = 0;
    uint32_t cur = u;
    while (t.parent[cur] >= 0) {
        uint32_t p = static_cast<uint32_t>(t.parent[cur]);
        if (h.wc[p] > h.wc[u]) break;
        if (h.heavy_child[p] != static_cast<int32_t>(cur)) ++lights;
        top = p;
        rld = lights;
        cur = p;
    }
}

}  // namespace

TEST_CASE("path P5 rooted at an end") {
    HldInfo h = decompose(from_parents({-1, 0, 1, 2, 3}));
    CHECK(h.size == std::vector<uint32_t>{5, 4, 3, 2, 1});
    for (uint32_t u = 0; u < 5; ++u) {
        CHECK(h.apex[u] == (u == 0));
        CHECK(h.light_size[u] == 1);
        CHECK(h.wc[u] == 1);
        CHECK(h.rld[u] == 0);
        CHECK(h.light_height[u] == 0);
    }
    CHECK(h.gamma == std::vector<uint32_t>{2, 1, 1, 1, 1});
    CHECK(h.heavy_child[0] == 1);
    CHECK(h.heavy_child[4] == -1);
}

TEST_CASE("star S5 rooted at the center") {
    HldInfo h = decompose(from_parents({-1, 0, 0, 0, 0}));
    CHECK(h.gamma[0] == 2);
    CHECK(h.wc[0] == 1);
    CHECK(h.heavy_child[0] == 1);  // tie broken to the lowest index
    CHECK(h.rld[1] == 0);
    for (uint32_t v = 2; v <= 4; ++v) {
        CHECK(h.apex[v]);
        CHECK(h.rld[v] == 1);
    }
    CHECK(h.light_children(0).size() == 3);
    CHECK(h.light_height[0] == 1);
}

TEST_CASE("single node") {
    HldInfo h = decompose(from_parents({-1}));
    CHECK(h.size[0] == 1);
    CHECK(h.apex[0]);
    CHECK(h.light_height[0] == 0);
    CHECK(h.gamma[0] == 1);
    CHECK(h.wc[0] == 1);
    CHECK(h.rld[0] == 0);
}

TEST_CASE("heavy tie-break takes the lowest index") {
    // node 0 with two children, each heading a 2-node chain
    HldInfo h = decompose(from_parents({-1, 0, 0, 1, 2}));
    CHECK(h.heavy_child[0] == 1);
    CHECK(h.apex[2]);
    CHECK(!h.apex[1]);
}

TEST_CASE("sorted light children: descending size, index ties") {
    // children of 0: 1 (size 1), 2 (size 3), 3 (size 1); heavy = 2
    HldInfo h = decompose(from_parents({-1, 0, 0, 0, 2, 2}));
    CHECK(h.heavy_child[0] == 2);
    auto kids = h.light_children(0);
    REQUIRE(kids.size() == 2);
    CHECK(kids[0] == 1);
    CHECK(kids[1] == 3);

    HldInfo g = decompose(from_parents({-1, 0, 0, 0, 3, 3}));
    auto gk = g.light_children(0);
    REQUIRE(gk.size() == 2);
    CHECK(gk[0] == 1);  // sizes 1,1 -> index order
    CHECK(gk[1] == 2);
}

TEST_CASE("rld matches the brute-force definition") {
    for (Family fam : {Family::uniform_prufer, Family::caterpillar, Family::binary,
                       Family::random_recursive}) {
        Forest f = gen_tree({fam, 700, 9});
        RootedTree t = attach_imaginary_root(f);
        HldInfo h = decompose(t);
        for (uint32_t u = 0; u < t.n; ++u) {
            uint32_t top, rld;
            brute_rld(t, h, u, top, rld);
            CHECK(h.wtop[u] == top);
            CHECK(h.rld[u] == rld);
        }
    }
}

TEST_CASE("deep path does not overflow the stack") {
    std::vector<int32_t> parent(200000);
    parent[0] = -1;
    for (uint32_t i = 1; i < parent.size(); ++i) parent[i] = static_cast<int32_t>(i - 1);
    HldInfo h = decompose(from_parents(std::move(parent)));
    CHECK(h.size[0] == 200000);
    CHECK(h.light_height[0] == 0);
}
