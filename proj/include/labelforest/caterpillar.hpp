#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "labelforest/bits.hpp"
#include "labelforest/forest.hpp"

namespace labelforest {

// Per-tree output of the caterpillar encoder.
struct CatLabels {
    std::vector<BitString> label;   // per node
    std::vector<uint32_t> path;     // spine u_1..u_|p|
    std::vector<uint8_t> on_path;   // per node
    std::vector<uint64_t> id;       // per node
    std::vector<uint32_t> k;        // per path position
    uint64_t max_id = 0;            // N
};

// Longest path of a connected tree by double BFS (ties: lowest endpoint
// index, then lexicographically smallest sequence; the path is oriented to
// start at its lower-index endpoint). nullopt if f is not a caterpillar.
// Throws if f is not connected.
std::optional<std::vector<uint32_t>> cat_check(const Forest& f);

// Throws std::invalid_argument if f is not a connected caterpillar.
CatLabels cat_encode(const Forest& f);

// Total on arbitrary bit strings; malformed labels decode to false.
bool cat_decode(const BitString& l1, const BitString& l2);

}  // namespace labelforest
