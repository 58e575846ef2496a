#include <doctest.h>

#include <sstream>

#include "labelforest/forest.hpp"

using namespace labelforest;

TEST_CASE("forest construction validates") {
    CHECK_NOTHROW(Forest(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS(Forest(3, {{0, 0}}));           // self-loop
    CHECK_THROWS(Forest(3, {{0, 3}}));           // out of range
    CHECK_THROWS(Forest(3, {{0, 1}, {1, 0}}));   // duplicate
    CHECK_THROWS(Forest(3, {{0, 1}, {1, 2}, {0, 2}}));  // cycle
}

TEST_CASE("adjacency oracle") {
    Forest f(4, {{2, 1}, {0, 3}});
    CHECK(f.adjacent(1, 2));
    CHECK(f.adjacent(2, 1));
    CHECK(f.adjacent(0, 3));
    CHECK(!f.adjacent(0, 1));
    CHECK(!f.adjacent(1, 1));
    CHECK(oracle_adjacent(f, 3, 0));
    CHECK_THROWS_AS(oracle_adjacent(f, 0, 4), std::out_of_range);
    CHECK(f.degree(1) == 1);
    CHECK(f.neighbors(2).size() == 1);
}

TEST_CASE("parse accepts comments and reports line numbers") {
    std::istringstream ok("3\n# comment\n0 1\n\n1 2\n");
    Forest f = parse_forest(ok);
    CHECK(f.node_count() == 3);
    CHECK(f.edges().size() == 2);

    auto fails_at = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_forest(in);
            return false;
        } catch (const ParseError& e) {
            return e.line == line;
        }
    };
    CHECK(fails_at("x\n", 1));
    CHECK(fails_at("2\n0 1 junk\n", 2));
    CHECK(fails_at("2\n0 2\n", 2));
    CHECK(fails_at("3\n0 1\n1 0\n", 3));
    CHECK(fails_at("3\n0 1\n1 2\n0 2\n", 4));
}

TEST_CASE("serialize round-trips in canonical order") {
    Forest f(5, {{3, 1}, {0, 4}, {1, 0}});
    std::ostringstream out;
    serialize_forest(f, out);
    CHECK(out.str() == "5\n0 1\n0 4\n1 3\n");
    std::istringstream in(out.str());
    Forest g = parse_forest(in);
    CHECK(g.edges() == f.edges());
}

TEST_CASE("imaginary root spans components by smallest index") {
    Forest f(5, {{1, 2}, {3, 4}});  // components {0}, {1,2}, {3,4}
    RootedTree t = attach_imaginary_root(f);
    CHECK(t.n == 6);
    CHECK(t.root == 5);
    CHECK(!t.real[5]);
    CHECK(t.parent[5] == -1);
    CHECK(t.parent[0] == 5);
    CHECK(t.parent[1] == 5);
    CHECK(t.parent[3] == 5);
    CHECK(t.parent[2] == 1);
    CHECK(t.parent[4] == 3);
}

TEST_CASE("forest_from_tree inverts a real tree") {
    RootedTree t;
    t.n = 4;
    t.parent = {-1, 0, 0, 2};
    t.root = 0;
    t.real.assign(4, 1);
    Forest f = forest_from_tree(t);
    CHECK(f.edges() == std::vector<Forest::Edge>{{0, 1}, {0, 2}, {2, 3}});
}
