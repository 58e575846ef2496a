#include "labelforest/hld.hpp"

#include <algorithm>
#include <stdexcept>

#include "labelforest/bits.hpp"

namespace labelforest {

HldInfo decompose(const RootedTree& t) {
    const uint32_t n = t.n;
    HldInfo h;
    h.size.assign(n, 1);
    h.light_size.assign(n, 1);
    h.heavy_child.assign(n, -1);
    h.apex.assign(n, 0);
    h.light_height.assign(n, 0);
    h.light_depth.assign(n, 0);
    h.gamma.assign(n, 1);
    h.wc.assign(n, 1);
    h.rld.assign(n, 0);
    h.wtop.assign(n, 0);

    // children CSR from the parent array
    std::vector<uint32_t> child_off(n + 1, 0);
    for (uint32_t u = 0; u < n; ++u)
        if (t.parent[u] >= 0) ++child_off[t.parent[u] + 1];
    for (uint32_t i = 0; i < n; ++i) child_off[i + 1] += child_off[i];
    std::vector<uint32_t> children(n ? n - 1 : 0);
    {
        std::vector<uint32_t> cursor(child_off.begin(), child_off.end() - 1);
        for (uint32_t u = 0; u < n; ++u)
            if (t.parent[u] >= 0) children[cursor[t.parent[u]]++] = u;
    }

    // BFS order: parents strictly before children
    h.bfs_order.clear();
    h.bfs_order.reserve(n);
    h.bfs_order.push_back(t.root);
    for (size_t qi = 0; qi < h.bfs_order.size(); ++qi) {
        uint32_t u = h.bfs_order[qi];
        for (uint32_t c = child_off[u]; c < child_off[u + 1]; ++c)
            h.bfs_order.push_back(children[c]);
    }
    if (h.bfs_order.size() != n) throw std::invalid_argument("decompose: parent cycle");

    // subtree sizes and heavy children, bottom-up
    for (auto it = h.bfs_order.rbegin(); it != h.bfs_order.rend(); ++it) {
        uint32_t u = *it;
        uint32_t best = 0;
        int32_t heavy = -1;
        for (uint32_t c = child_off[u]; c < child_off[u + 1]; ++c) {
            uint32_t v = children[c];
            h.size[u] += h.size[v];
            if (h.size[v] > best || (h.size[v] == best && heavy >= 0 && v < uint32_t(heavy))) {
                best = h.size[v];
                heavy = static_cast<int32_t>(v);
            }
        }
        h.heavy_child[u] = heavy;
        h.light_size[u] = h.size[u] - (heavy >= 0 ? h.size[heavy] : 0);
        uint32_t lh = 0;
        for (uint32_t c = child_off[u]; c < child_off[u + 1]; ++c) {
            uint32_t v = children[c];
            uint32_t hv = h.light_height[v] + (int32_t(v) == heavy ? 0 : 1);
            lh = std::max(lh, hv);
        }
        h.light_height[u] = lh;
    }

    // apex flags, light depth, gamma, wc, top-down
    for (uint32_t u : h.bfs_order) {
        int32_t p = t.parent[u];
        bool apex = p < 0 || h.heavy_child[p] != static_cast<int32_t>(u);
        h.apex[u] = apex;
        h.light_depth[u] = p < 0 ? 0 : h.light_depth[p] + (apex ? 1 : 0);
        h.gamma[u] = floor_lg(apex ? h.size[u] : h.light_size[u]);
        h.wc[u] = floor_lg(h.gamma[u]);
    }

    // restricted light depth by jumping over stored wtop segments; successive
    // jump candidates have strictly increasing weight class, so each node does
    // O(lg lg n) work
    for (uint32_t u : h.bfs_order) {
        if (t.parent[u] < 0) {
            h.wtop[u] = u;
            continue;
        }
        uint32_t top = u;
        int32_t cand = t.parent[u];
        while (cand >= 0 && h.wc[cand] <= h.wc[u]) {
            top = h.wtop[cand];
            cand = t.parent[top];
        }
        h.wtop[u] = top;
        h.rld[u] = h.light_depth[u] - h.light_depth[top];
    }

    // light children sorted by descending subtree size, ties by node index:
    // one global counting sort (key = n - size keeps it stable in that order)
    h.light_off.assign(n + 1, 0);
    for (uint32_t u : h.bfs_order) {
        int32_t p = t.parent[u];
        if (p >= 0 && h.apex[u]) ++h.light_off[p + 1];
    }
    for (uint32_t i = 0; i < n; ++i) h.light_off[i + 1] += h.light_off[i];
    h.light_kids.resize(h.light_off[n]);
    {
        std::vector<uint32_t> count(n + 1, 0);
        for (uint32_t u = 0; u < n; ++u) ++count[n - h.size[u]];
        uint32_t acc = 0;
        for (uint32_t k = 0; k <= n; ++k) {
            uint32_t c = count[k];
            count[k] = acc;
            acc += c;
        }
        std::vector<uint32_t> by_size_desc(n);
        for (uint32_t u = 0; u < n; ++u) by_size_desc[count[n - h.size[u]]++] = u;
        std::vector<uint32_t> cursor(h.light_off.begin(), h.light_off.end() - 1);
        for (uint32_t u : by_size_desc) {
            int32_t p = t.parent[u];
            if (p >= 0 && h.apex[u]) h.light_kids[cursor[p]++] = u;
        }
    }

    return h;
}

}  // namespace labelforest
