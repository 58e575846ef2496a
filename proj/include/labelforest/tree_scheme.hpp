#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "labelforest/bits.hpp"
#include "labelforest/forest.hpp"
#include "labelforest/hld.hpp"

namespace labelforest {

// Output of Assign-Weight across the whole tree. The a_i table of node u
// lives in a_codes/a_values[a_off[u] .. a_off[u] + wc(u)); a_0 = 0 is
// implicit.
struct WeightMap {
    std::vector<uint64_t> lw;       // 1 + a_wc(u)
    std::vector<uint32_t> k;        // alignment exponent along heavy paths
    std::vector<uint64_t> pw;       // path weight, meaningful at apex nodes
    std::vector<uint32_t> a_off;    // size n + 1
    std::vector<ApproxCode> a_codes;
    std::vector<uint64_t> a_values;

    // Light children regrouped by ascending weight class, descending subtree
    // size within a class; shared by id assignment.
    std::vector<uint32_t> class_off;
    std::vector<uint32_t> class_kids;

    uint64_t a_value(uint32_t u, uint32_t i) const {
        return i == 0 ? 0 : a_values[a_off[u] + i - 1];
    }
};

WeightMap assign_weights(const RootedTree& t, const HldInfo& h);

// Ids per node; root is assigned from start 0.
std::vector<uint64_t> assign_ids(const RootedTree& t, const HldInfo& h, const WeightMap& w);

// Everything the encoder produced, kept for stats and invariant checks.
struct TreeLabeling {
    HldInfo h;
    WeightMap w;
    std::vector<uint64_t> id;
    std::vector<BitString> label;   // empty BitString for the imaginary root
};

TreeLabeling encode_tree(const RootedTree& t);

// Labels of the real nodes (empty entry for an imaginary root).
std::vector<BitString> encode_labels(const RootedTree& t);

// Parsed view of a label. Invalid inputs yield valid == false; table entries
// are unpacked on demand.
struct TreeLabel {
    bool valid = false;
    uint32_t k = 0;
    uint32_t wc = 0;
    uint32_t rld = 0;
    uint32_t gamma = 0;
    bool apex = false;
    bool leaf = false;
    int next = 0;
    uint32_t entry_width = 0;   // M
    uint32_t table_start = 0;   // bit offset of r_1
    uint64_t id = 0;
    BitString bits;

    // a_i(u); nullopt for malformed entries or i > wc
    std::optional<uint64_t> a(uint32_t i) const;
};

TreeLabel parse_label(const BitString& s);

// Total function; invalid or equal labels answer false.
bool decode_adjacent(const BitString& l1, const BitString& l2);

struct SchemeStats {
    uint32_t n = 0;                  // real nodes
    uint32_t max_label_bits = 0;
    double mean_label_bits = 0.0;
    int32_t excess = 0;              // max_label_bits - ceil(lg n)
    uint64_t max_id = 0;
    uint64_t root_pw = 0;
    double max_pw_ratio = 0.0;       // max over apex u of pw(u) / |T_u|
    std::map<uint32_t, uint64_t> wc_census;
};

SchemeStats scheme_stats(const RootedTree& t, const TreeLabeling& enc);

}  // namespace labelforest
