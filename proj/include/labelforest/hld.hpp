#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "labelforest/forest.hpp"

namespace labelforest {

// Per-node heavy-light decomposition facts. All arrays are indexed by node.
struct HldInfo {
    std::vector<uint32_t> size;         // |T_u|
    std::vector<uint32_t> light_size;   // |T_u^l| = |T_u| - |T_heavy(u)|
    std::vector<int32_t> heavy_child;   // -1 for leaves
    std::vector<uint8_t> apex;          // parent edge light, or root
    std::vector<uint32_t> light_height;
    std::vector<uint32_t> light_depth;
    std::vector<uint32_t> gamma;        // floor-lg of size (apex) or light_size
    std::vector<uint32_t> wc;           // weight class, floor-lg of gamma
    std::vector<uint32_t> rld;          // restricted light depth
    std::vector<uint32_t> wtop;         // top of the rld path

    std::vector<uint32_t> bfs_order;    // parents before children

    // Light children, descending subtree size, ties by lowest node index.
    std::span<const uint32_t> light_children(uint32_t u) const {
        return {light_kids.data() + light_off[u], light_off[u + 1] - light_off[u]};
    }

    std::vector<uint32_t> light_off;
    std::vector<uint32_t> light_kids;
};

// O(n); iterative throughout, so path-deep trees are fine.
HldInfo decompose(const RootedTree& t);

}  // namespace labelforest
