#include "labelforest/forest.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace labelforest {

namespace {

struct Dsu {
    std::vector<uint32_t> parent;
    explicit Dsu(uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if x and y were already connected
    bool unite(uint32_t x, uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

Forest::Forest(uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) throw std::invalid_argument("Forest: endpoint out of range");
        if (u == v) throw std::invalid_argument("Forest: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Forest: duplicate edge");
    Dsu dsu(n_);
    for (const auto& [u, v] : edges_)
        if (!dsu.unite(u, v)) throw std::invalid_argument("Forest: cycle");

    adj_off_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++adj_off_[u + 1];
        ++adj_off_[v + 1];
    }
    for (uint32_t i = 0; i < n_; ++i) adj_off_[i + 1] += adj_off_[i];
    adj_.resize(edges_.size() * 2);
    std::vector<uint32_t> cursor(adj_off_.begin(), adj_off_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (uint32_t u = 0; u < n_; ++u)
        std::sort(adj_.begin() + adj_off_[u], adj_.begin() + adj_off_[u + 1]);
}

bool Forest::adjacent(uint32_t u, uint32_t v) const {
    if (u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Forest parse_forest(std::istream& in) {
    std::string line;
    int lineno = 0;
    uint32_t n = 0;
    bool have_n = false;
    std::vector<Forest::Edge> edges;
    Dsu dsu(0);
    std::vector<std::vector<uint32_t>> seen;  // per-node sorted neighbor lists

    auto is_blank = [](const std::string& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (is_blank(line)) continue;
        std::istringstream ls(line);
        if (!have_n) {
            long long v = -1;
            if (!(ls >> v) || v < 1) throw ParseError(lineno, "malformed header");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "malformed header");
            n = static_cast<uint32_t>(v);
            have_n = true;
            dsu = Dsu(n);
            seen.resize(n);
            continue;
        }
        long long a = -1, b = -1;
        if (!(ls >> a >> b) || a < 0 || b < 0) throw ParseError(lineno, "malformed edge");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "malformed edge");
        if (a >= n || b >= n) throw ParseError(lineno, "endpoint out of range");
        auto u = static_cast<uint32_t>(std::min(a, b));
        auto v = static_cast<uint32_t>(std::max(a, b));
        if (std::binary_search(seen[u].begin(), seen[u].end(), v))
            throw ParseError(lineno, "duplicate edge");
        if (u == v || !dsu.unite(u, v)) throw ParseError(lineno, "cycle detected");
        seen[u].insert(std::lower_bound(seen[u].begin(), seen[u].end(), v), v);
        edges.emplace_back(u, v);
    }
    if (!have_n) throw ParseError(lineno, "malformed header");
    return Forest(n, std::move(edges));
}

void serialize_forest(const Forest& f, std::ostream& out) {
    out << f.node_count() << '\n';
    for (const auto& [u, v] : f.edges()) out << u << ' ' << v << '\n';
}

RootedTree attach_imaginary_root(const Forest& f) {
    uint32_t n = f.node_count();
    RootedTree t;
    t.n = n + 1;
    t.root = n;
    t.parent.assign(n + 1, -1);
    t.real.assign(n + 1, 1);
    t.real[n] = 0;

    std::vector<uint8_t> visited(n, 0);
    std::vector<uint32_t> queue;
    for (uint32_t s = 0; s < n; ++s) {
        if (visited[s]) continue;
        t.parent[s] = static_cast<int32_t>(n);
        visited[s] = 1;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t u = queue[qi];
            for (uint32_t v : f.neighbors(u)) {
                if (visited[v]) continue;
                visited[v] = 1;
                t.parent[v] = static_cast<int32_t>(u);
                queue.push_back(v);
            }
        }
    }
    return t;
}

Forest forest_from_tree(const RootedTree& t) {
    std::vector<Forest::Edge> edges;
    edges.reserve(t.n - 1);
    for (uint32_t u = 0; u < t.n; ++u) {
        if (!t.real[u]) throw std::invalid_argument("forest_from_tree: imaginary node");
        if (t.parent[u] >= 0) edges.emplace_back(u, static_cast<uint32_t>(t.parent[u]));
    }
    return Forest(t.n, std::move(edges));
}

}  // namespace labelforest
