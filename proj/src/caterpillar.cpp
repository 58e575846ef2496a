#include "labelforest/caterpillar.hpp"

#include <algorithm>
#include <stdexcept>

namespace labelforest {

namespace {

// BFS from src; returns (dist, parent). Neighbor lists are sorted, so the
// parent choice (first discoverer) is deterministic and lexicographically
// smallest.
void bfs(const Forest& f, uint32_t src, std::vector<uint32_t>& dist,
         std::vector<int32_t>& parent) {
    uint32_t n = f.node_count();
    dist.assign(n, UINT32_MAX);
    parent.assign(n, -1);
    std::vector<uint32_t> queue{src};
    dist[src] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        uint32_t u = queue[qi];
        for (uint32_t v : f.neighbors(u)) {
            if (dist[v] != UINT32_MAX) continue;
            dist[v] = dist[u] + 1;
            parent[v] = static_cast<int32_t>(u);
            queue.push_back(v);
        }
    }
    for (uint32_t u = 0; u < n; ++u)
        if (dist[u] == UINT32_MAX) throw std::invalid_argument("cat_check: forest not connected");
}

uint32_t farthest(const std::vector<uint32_t>& dist) {
    uint32_t best = 0;
    for (uint32_t u = 1; u < dist.size(); ++u)
        if (dist[u] > dist[best]) best = u;
    return best;  // ties resolve to the lowest index
}

}  // namespace

std::optional<std::vector<uint32_t>> cat_check(const Forest& f) {
    uint32_t n = f.node_count();
    std::vector<uint32_t> dist;
    std::vector<int32_t> parent;
    bfs(f, 0, dist, parent);
    uint32_t a = farthest(dist);
    bfs(f, a, dist, parent);
    uint32_t b = farthest(dist);

    std::vector<uint32_t> path;
    for (int32_t u = static_cast<int32_t>(b); u >= 0; u = parent[u])
        path.push_back(static_cast<uint32_t>(u));
    std::reverse(path.begin(), path.end());  // now a..b
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());

    std::vector<uint8_t> on_path(n, 0);
    for (uint32_t u : path) on_path[u] = 1;
    for (uint32_t v = 0; v < n; ++v) {
        if (on_path[v]) continue;
        if (f.degree(v) != 1 || !on_path[f.neighbors(v)[0]]) return std::nullopt;
    }
    return path;
}

CatLabels cat_encode(const Forest& f) {
    auto path_opt = cat_check(f);
    if (!path_opt) throw std::invalid_argument("cat_encode: not a caterpillar");
    const std::vector<uint32_t>& path = *path_opt;
    const uint32_t n = f.node_count();
    const size_t m = path.size();

    CatLabels out;
    out.path = path;
    out.on_path.assign(n, 0);
    for (uint32_t u : path) out.on_path[u] = 1;

    // light children of u_i: off-path neighbors (always leaves here)
    std::vector<std::vector<uint32_t>> kids(m);
    for (size_t i = 0; i < m; ++i)
        for (uint32_t v : f.neighbors(path[i]))
            if (!out.on_path[v]) kids[i].push_back(v);

    // interval sizes: gamma_i = ceil-lg of |T^l(u_i)|, then the two-sweep
    // realization of k_i = max_j (gamma_j - |i - j|)
    std::vector<uint32_t>& k = out.k;
    k.resize(m);
    for (size_t i = 0; i < m; ++i)
        k[i] = ceil_lg(1 + kids[i].size());
    for (size_t i = 1; i < m; ++i) k[i] = std::max(k[i], k[i - 1] - 1);
    for (size_t i = m - 1; i-- > 0;) k[i] = std::max(k[i], k[i + 1] - 1);

    // id assignment: path ids aligned to k_i trailing zeros, children packed
    // immediately after their path node
    out.id.assign(n, 0);
    uint64_t prev_end = 0;
    for (size_t i = 0; i < m; ++i) {
        uint64_t id = i == 0 ? 0 : align_up(prev_end, k[i]);
        out.id[path[i]] = id;
        prev_end = id + (uint64_t(1) << k[i]);
        for (size_t j = 0; j < kids[i].size(); ++j) out.id[kids[i][j]] = id + 1 + j;
        out.max_id = std::max(out.max_id, id + kids[i].size());
    }

    // labels
    out.label.assign(n, BitString{});
    for (size_t i = 0; i < m; ++i) {
        BitString& l = out.label[path[i]];
        l.push_back(false);
        if (i + 1 == m) {
            l.append_bits(0b00, 2);
        } else if (k[i + 1] == k[i] + 1) {
            l.append_bits(0b01, 2);
        } else if (k[i + 1] == k[i]) {
            l.append_bits(0b10, 2);
        } else {
            l.append_bits(0b11, 2);
        }
        gamma_encode(l, k[i]);
        l.append(wlsb(out.id[path[i]], k[i]));
    }
    for (uint32_t v = 0; v < n; ++v) {
        if (out.on_path[v]) continue;
        BitString& l = out.label[v];
        l.push_back(true);
        gamma_encode(l, out.id[v] + 1);
    }
    return out;
}

namespace {

struct CatParsed {
    bool on_path;
    uint64_t id;
    uint32_t k = 0;        // path nodes only
    uint32_t type = 0;     // 2-bit case, path nodes only
};

std::optional<CatParsed> cat_parse(const BitString& l) {
    if (l.empty()) return std::nullopt;
    CatParsed p{};
    if (l.bit(0)) {
        p.on_path = false;
        auto g = gamma_decode(l, 1);
        if (!g || g->next != l.size() || g->value == 0) return std::nullopt;
        p.id = g->value - 1;
        return p;
    }
    if (l.size() < 3) return std::nullopt;
    p.on_path = true;
    p.type = static_cast<uint32_t>(l.read_bits(1, 2));
    auto g = gamma_decode(l, 3);
    if (!g || g->value == 0 || g->value > 62) return std::nullopt;
    p.k = static_cast<uint32_t>(g->value);
    uint32_t id_bits = l.size() - g->next;
    if (id_bits + p.k > 63) return std::nullopt;
    p.id = l.read_bits(g->next, id_bits) << p.k;
    return p;
}

}  // namespace

bool cat_decode(const BitString& l1, const BitString& l2) {
    auto a = cat_parse(l1);
    auto b = cat_parse(l2);
    if (!a || !b || l1 == l2) return false;
    if (!a->on_path && !b->on_path) return false;

    if (a->on_path != b->on_path) {
        const CatParsed& u = a->on_path ? *a : *b;
        const CatParsed& v = a->on_path ? *b : *a;
        return v.id >= u.id && v.id < u.id + (uint64_t(1) << u.k);
    }

    // both on the spine: the smaller id's type bits announce the next k
    const CatParsed& lo = a->id < b->id ? *a : *b;
    const CatParsed& hi = a->id < b->id ? *b : *a;
    if (lo.type == 0b00) return false;  // last path node
    uint32_t k_next = lo.type == 0b01 ? lo.k + 1 : lo.type == 0b10 ? lo.k : lo.k - 1;
    uint64_t x = align_up(lo.id + (uint64_t(1) << lo.k), k_next);
    return x == hi.id;
}

}  // namespace labelforest
