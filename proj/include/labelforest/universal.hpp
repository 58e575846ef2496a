#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labelforest/bits.hpp"
#include "labelforest/forest.hpp"

namespace labelforest {

enum class Scheme { tree, caterpillar };

Scheme scheme_from_string(std::string_view s);
std::string scheme_to_string(Scheme s);

// Vertex set = all labels emitted over the enumerated trees of size <= n;
// adjacency is the decoder, so the edge set is exactly the decoder-true
// pairs.
struct UniversalGraph {
    std::vector<BitString> vertices;  // sorted, deduplicated
    Scheme scheme = Scheme::tree;
    uint32_t n = 0;

    bool adjacent(const BitString& x, const BitString& y) const;
    // Materialized edge list as vertex-index pairs (quadratic scan).
    std::vector<std::pair<size_t, size_t>> edges() const;
};

// Exhaustive regime: n <= 10.
UniversalGraph build_universal(uint32_t n, Scheme scheme);

struct EmbedReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies that t embeds into u as a node-induced subgraph: label map
// injective, labels present in U, and adjacency equivalent in both
// directions.
EmbedReport embed_check(const UniversalGraph& u, const RootedTree& t);

// Simple undirected graph (not necessarily acyclic).
struct SimpleGraph {
    uint32_t n = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;  // validated, u < v

    SimpleGraph(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);
    bool adjacent(uint32_t u, uint32_t v) const;
};

// Edge partition into forests; part[i] is the part index of edges[i].
struct ForestPartition {
    uint32_t parts = 0;
    std::vector<uint32_t> part;
};

// Greedy heuristic: repeatedly extract a maximal spanning forest. Part count
// can exceed the true arboricity.
ForestPartition peel_forests(const SimpleGraph& g);

// Throws if some part is not a forest or the assignment does not cover g.
void validate_partition(const SimpleGraph& g, const ForestPartition& p);

// One tree-scheme label per forest part, each length-prefixed, absent flag
// for nodes isolated in a part.
std::vector<BitString> composite_encode(const SimpleGraph& g, const ForestPartition& p);

// True iff some part has both nodes present and tree-adjacent. Total.
bool composite_decode(const BitString& c1, const BitString& c2);

}  // namespace labelforest
