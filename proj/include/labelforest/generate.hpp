#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "labelforest/forest.hpp"

namespace labelforest {

enum class Family {
    path,
    star,
    caterpillar,
    binary,
    uniform_prufer,
    random_recursive,
    broom,
};

Family family_from_string(std::string_view s);
std::string family_to_string(Family f);

struct GenSpec {
    Family family = Family::path;
    uint32_t n = 1;
    uint64_t seed = 0;
};

// Deterministic in the spec: identical GenSpec yields an identical Forest.
Forest gen_tree(const GenSpec& spec);

// Streams every parent array with parent[i] in {0..i-1} for i >= 1 and node 0
// as root: exactly (n-1)! rooted labeled trees. Valid for 1 <= n <= 10.
class ParentArrayEnumerator {
public:
    explicit ParentArrayEnumerator(uint32_t n);
    // Fills out with the next tree; false when exhausted.
    bool next(RootedTree& out);

private:
    uint32_t n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<uint32_t> parent_;
};

}  // namespace labelforest
