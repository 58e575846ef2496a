#include "labelforest/universal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "labelforest/caterpillar.hpp"
#include "labelforest/generate.hpp"
#include "labelforest/tree_scheme.hpp"

namespace labelforest {

Scheme scheme_from_string(std::string_view s) {
    if (s == "tree") return Scheme::tree;
    if (s == "caterpillar") return Scheme::caterpillar;
    throw std::invalid_argument("unknown scheme: " + std::string(s));
}

std::string scheme_to_string(Scheme s) {
    return s == Scheme::tree ? "tree" : "caterpillar";
}

namespace {

std::vector<BitString> labels_for(const Forest& f, Scheme scheme) {
    if (scheme == Scheme::tree) {
        RootedTree t = attach_imaginary_root(f);
        auto all = encode_labels(t);
        all.resize(f.node_count());  // drop the imaginary root slot
        return all;
    }
    return cat_encode(f).label;
}

}  // namespace

bool UniversalGraph::adjacent(const BitString& x, const BitString& y) const {
    return scheme == Scheme::tree ? decode_adjacent(x, y) : cat_decode(x, y);
}

std::vector<std::pair<size_t, size_t>> UniversalGraph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) out.emplace_back(i, j);
    return out;
}

UniversalGraph build_universal(uint32_t n, Scheme scheme) {
    if (n < 1 || n > 10) throw std::out_of_range("build_universal: n must be in [1, 10]");
    UniversalGraph u;
    u.scheme = scheme;
    u.n = n;
    std::unordered_set<BitString, BitStringHash> seen;
    RootedTree t;
    for (uint32_t m = 1; m <= n; ++m) {
        ParentArrayEnumerator en(m);
        while (en.next(t)) {
            Forest f = forest_from_tree(t);
            if (scheme == Scheme::caterpillar && !cat_check(f)) continue;
            for (const BitString& l : labels_for(f, scheme)) seen.insert(l);
        }
    }
    u.vertices.assign(seen.begin(), seen.end());
    std::sort(u.vertices.begin(), u.vertices.end());
    return u;
}

EmbedReport embed_check(const UniversalGraph& u, const RootedTree& t) {
    EmbedReport rep;
    Forest f = forest_from_tree(t);
    auto labels = labels_for(f, u.scheme);

    std::unordered_set<BitString, BitStringHash> distinct;
    for (uint32_t v = 0; v < f.node_count(); ++v) {
        if (!distinct.insert(labels[v]).second)
            rep.violations.push_back("duplicate label for node " + std::to_string(v));
        if (!std::binary_search(u.vertices.begin(), u.vertices.end(), labels[v]))
            rep.violations.push_back("label of node " + std::to_string(v) +
                                     " missing from universal graph");
    }
    for (uint32_t a = 0; a < f.node_count(); ++a) {
        for (uint32_t b = a + 1; b < f.node_count(); ++b) {
            bool in_tree = f.adjacent(a, b);
            bool in_u = u.adjacent(labels[a], labels[b]);
            if (in_tree != in_u)
                rep.violations.push_back("induced mismatch on pair (" + std::to_string(a) +
                                         ", " + std::to_string(b) + ")");
        }
    }
    return rep;
}

SimpleGraph::SimpleGraph(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> e)
    : n(n), edges(std::move(e)) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("SimpleGraph: endpoint out of range");
        if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
        if (u > v) std::swap(u, v);
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("SimpleGraph: duplicate edge");
}

bool SimpleGraph::adjacent(uint32_t u, uint32_t v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

namespace {

struct Dsu {
    std::vector<uint32_t> parent;
    explicit Dsu(uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(uint32_t x, uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

ForestPartition peel_forests(const SimpleGraph& g) {
    ForestPartition p;
    p.part.assign(g.edges.size(), UINT32_MAX);
    size_t remaining = g.edges.size();
    while (remaining > 0) {
        Dsu dsu(g.n);
        for (size_t i = 0; i < g.edges.size(); ++i) {
            if (p.part[i] != UINT32_MAX) continue;
            if (dsu.unite(g.edges[i].first, g.edges[i].second)) {
                p.part[i] = p.parts;
                --remaining;
            }
        }
        ++p.parts;
    }
    return p;
}

void validate_partition(const SimpleGraph& g, const ForestPartition& p) {
    if (p.part.size() != g.edges.size())
        throw std::invalid_argument("partition does not cover the edge set");
    for (uint32_t i = 0; i < p.parts; ++i) {
        Dsu dsu(g.n);
        for (size_t e = 0; e < g.edges.size(); ++e) {
            if (p.part[e] != i) continue;
            if (!dsu.unite(g.edges[e].first, g.edges[e].second))
                throw std::invalid_argument("part " + std::to_string(i) + " contains a cycle");
        }
    }
    for (uint32_t x : p.part)
        if (x >= p.parts) throw std::invalid_argument("edge assigned to unknown part");
}

std::vector<BitString> composite_encode(const SimpleGraph& g, const ForestPartition& p) {
    validate_partition(g, p);
    std::vector<BitString> out(g.n);
    for (uint32_t i = 0; i < p.parts; ++i) {
        std::vector<Forest::Edge> part_edges;
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (p.part[e] == i) part_edges.push_back(g.edges[e]);
        Forest f(g.n, part_edges);
        RootedTree t = attach_imaginary_root(f);
        auto labels = encode_labels(t);
        for (uint32_t v = 0; v < g.n; ++v) {
            bool present = f.degree(v) > 0;
            out[v].push_back(present);
            if (present) {
                gamma_encode(out[v], labels[v].size());
                out[v].append(labels[v]);
            }
        }
    }
    return out;
}

namespace {

// Splits a composite into per-part sub-labels; nullopt on malformed input.
std::optional<std::vector<std::optional<BitString>>> composite_parse(const BitString& c) {
    std::vector<std::optional<BitString>> parts;
    uint32_t pos = 0;
    while (pos < c.size()) {
        bool present = c.bit(pos);
        ++pos;
        if (!present) {
            parts.emplace_back(std::nullopt);
            continue;
        }
        auto g = gamma_decode(c, pos);
        if (!g || g->value == 0 || g->next + g->value > c.size()) return std::nullopt;
        BitString sub;
        for (uint64_t i = 0; i < g->value; ++i)
            sub.push_back(c.bit(g->next + static_cast<uint32_t>(i)));
        parts.emplace_back(std::move(sub));
        pos = g->next + static_cast<uint32_t>(g->value);
    }
    return parts;
}

}  // namespace

bool composite_decode(const BitString& c1, const BitString& c2) {
    if (c1 == c2) return false;
    auto a = composite_parse(c1);
    auto b = composite_parse(c2);
    if (!a || !b) return false;
    size_t parts = std::min(a->size(), b->size());
    for (size_t i = 0; i < parts; ++i) {
        const auto& x = (*a)[i];
        const auto& y = (*b)[i];
        if (x && y && decode_adjacent(*x, *y)) return true;
    }
    return false;
}

}  // namespace labelforest
