#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace labelforest {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Undirected forest over dense node indices 0..n-1. Construction validates
// simplicity and acyclicity; the value is immutable afterwards.
class Forest {
public:
    using Edge = std::pair<uint32_t, uint32_t>;

    Forest(uint32_t n, std::vector<Edge> edges);

    uint32_t node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const uint32_t> neighbors(uint32_t u) const {
        return {adj_.data() + adj_off_[u], adj_off_[u + 1] - adj_off_[u]};
    }
    uint32_t degree(uint32_t u) const { return adj_off_[u + 1] - adj_off_[u]; }

    // Ground-truth adjacency; adjacent(u, u) is false.
    bool adjacent(uint32_t u, uint32_t v) const;

private:
    uint32_t n_;
    std::vector<Edge> edges_;           // normalized u < v, sorted
    std::vector<uint32_t> adj_off_;
    std::vector<uint32_t> adj_;         // sorted per node
};

inline bool oracle_adjacent(const Forest& f, uint32_t u, uint32_t v) {
    if (u >= f.node_count() || v >= f.node_count())
        throw std::out_of_range("oracle_adjacent: node index out of range");
    return f.adjacent(u, v);
}

// Rooted tree as a parent array; parent[root] = -1. `real` is false only for
// an imaginary root added on top of a forest.
struct RootedTree {
    uint32_t n = 0;
    std::vector<int32_t> parent;
    uint32_t root = 0;
    std::vector<uint8_t> real;

    uint32_t real_count() const {
        uint32_t c = 0;
        for (uint8_t r : real) c += r;
        return c;
    }
};

// Line 1 = n; following nonempty lines "u v"; '#' starts a comment line.
Forest parse_forest(std::istream& in);

// Canonical form: edges sorted lexicographically.
void serialize_forest(const Forest& f, std::ostream& out);

// Adds node n as an unlabeled root above every component root (component
// roots are the smallest-index nodes of their components).
RootedTree attach_imaginary_root(const Forest& f);

// Edges (i, parent[i]) over the real nodes of t. Requires all nodes real.
Forest forest_from_tree(const RootedTree& t);

}  // namespace labelforest
