#include <doctest.h>

#include "labelforest/caterpillar.hpp"
#include "labelforest/generate.hpp"
#include "labelforest/verify.hpp"

using namespace labelforest;

TEST_CASE("cat_check accepts paths and stars") {
    Forest p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto path = cat_check(p4);
    REQUIRE(path);
    CHECK(*path == std::vector<uint32_t>{0, 1, 2, 3});

    Forest s5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto sp = cat_check(s5);
    REQUIRE(sp);
    CHECK(sp->size() == 3);
    CHECK((*sp)[1] == 0);  // center in the middle
}

TEST_CASE("cat_check rejects the three-legged spider") {
    // center 0, legs 1-2, 3-4, 5-6
    Forest spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(!cat_check(spider));
    CHECK_THROWS(cat_check(Forest(3, {{0, 1}})));  // disconnected
}

TEST_CASE("P2 encodes, decodes, and respects Lemma 3") {
    Forest p2(2, {{0, 1}});
    CatLabels cat = cat_encode(p2);
    CHECK(cat.path.size() == 2);
    CHECK(cat.max_id <= 24);
    CHECK(cat_decode(cat.label[0], cat.label[1]));
    CHECK(cat_decode(cat.label[1], cat.label[0]));
    CHECK(!cat_decode(cat.label[0], cat.label[0]));
}

TEST_CASE("single node emits one decodable label") {
    CatLabels cat = cat_encode(Forest(1, {}));
    CHECK(cat.label.size() == 1);
    CHECK(!cat_decode(cat.label[0], cat.label[0]));
}

TEST_CASE("S5 pair semantics") {
    Forest s5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CatLabels cat = cat_encode(s5);
    for (uint32_t v = 1; v <= 4; ++v) {
        CHECK(cat_decode(cat.label[0], cat.label[v]));
        for (uint32_t w = v + 1; w <= 4; ++w)
            CHECK(!cat_decode(cat.label[v], cat.label[w]));
    }
    Forest spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK_THROWS_AS(cat_encode(spider), std::invalid_argument);
}

TEST_CASE("exhaustive caterpillars n <= 7 match the oracle") {
    for (uint32_t n = 1; n <= 7; ++n) {
        ParentArrayEnumerator en(n);
        RootedTree t;
        while (en.next(t)) {
            Forest f = forest_from_tree(t);
            verify::CheckSet cs;
            verify::check_caterpillar_scheme(cs, f, true);
            for (const auto& [name, c] : cs.checks) {
                INFO(name);
                CHECK(c.violations == 0);
            }
        }
    }
}

TEST_CASE("random large caterpillars") {
    for (uint64_t seed : {1, 2}) {
        Forest f = gen_tree({Family::caterpillar, 100000, seed});
        verify::CheckSet cs;
        verify::check_caterpillar_scheme(cs, f, false);
        REQUIRE(cs.checks.count("cat.decode_vs_oracle") == 1);
        for (const auto& [name, c] : cs.checks) {
            INFO(name);
            CHECK(c.violations == 0);
        }
    }
}

TEST_CASE("decode is total on junk") {
    CHECK(!cat_decode(BitString{}, BitString{}));
    CHECK(!cat_decode(BitString::from_string("1"), BitString::from_string("1")));
    CHECK(!cat_decode(BitString::from_string("11"), BitString::from_string("10")));
    CHECK(!cat_decode(BitString::from_string("0000000"), BitString::from_string("1111111")));
}
