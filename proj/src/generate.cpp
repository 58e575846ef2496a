#include "labelforest/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace labelforest {

Family family_from_string(std::string_view s) {
    if (s == "path") return Family::path;
    if (s == "star") return Family::star;
    if (s == "caterpillar") return Family::caterpillar;
    if (s == "binary") return Family::binary;
    if (s == "uniform-prufer") return Family::uniform_prufer;
    if (s == "random-recursive") return Family::random_recursive;
    if (s == "broom") return Family::broom;
    throw std::invalid_argument("unknown family: " + std::string(s));
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::star: return "star";
        case Family::caterpillar: return "caterpillar";
        case Family::binary: return "binary";
        case Family::uniform_prufer: return "uniform-prufer";
        case Family::random_recursive: return "random-recursive";
        case Family::broom: return "broom";
    }
    throw std::logic_error("bad family");
}

namespace {

std::vector<Forest::Edge> prufer_decode(const std::vector<uint32_t>& seq, uint32_t n) {
    std::vector<uint32_t> degree(n, 1);
    for (uint32_t x : seq) ++degree[x];
    std::vector<Forest::Edge> edges;
    edges.reserve(n - 1);
    uint32_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    uint32_t leaf = ptr;
    for (uint32_t x : seq) {
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

}  // namespace

Forest gen_tree(const GenSpec& spec) {
    uint32_t n = spec.n;
    if (n == 0) throw std::invalid_argument("gen_tree: n must be positive");
    std::mt19937_64 rng(spec.seed);
    std::vector<Forest::Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);

    switch (spec.family) {
        case Family::path:
            for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::star:
            for (uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case Family::caterpillar: {
            // random spine length, remaining nodes as leaves on random spine nodes
            uint32_t spine = n == 1 ? 1 : 1 + rng() % n;
            for (uint32_t i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
            for (uint32_t i = spine; i < n; ++i)
                edges.emplace_back(static_cast<uint32_t>(rng() % spine), i);
            break;
        }
        case Family::binary:
            for (uint32_t i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
            break;
        case Family::uniform_prufer: {
            if (n == 1) break;
            if (n == 2) {
                edges.emplace_back(0u, 1u);
                break;
            }
            std::vector<uint32_t> seq(n - 2);
            for (auto& x : seq) x = static_cast<uint32_t>(rng() % n);
            edges = prufer_decode(seq, n);
            break;
        }
        case Family::random_recursive:
            for (uint32_t i = 1; i < n; ++i)
                edges.emplace_back(static_cast<uint32_t>(rng() % i), i);
            break;
        case Family::broom: {
            // path on the first half, remaining leaves at its far end
            uint32_t handle = std::max<uint32_t>(1, n / 2);
            for (uint32_t i = 0; i + 1 < handle; ++i) edges.emplace_back(i, i + 1);
            for (uint32_t i = handle; i < n; ++i) edges.emplace_back(handle - 1, i);
            break;
        }
    }
    return Forest(n, std::move(edges));
}

ParentArrayEnumerator::ParentArrayEnumerator(uint32_t n) : n_(n) {
    if (n < 1 || n > 10)
        throw std::out_of_range("ParentArrayEnumerator: n must be in [1, 10]");
    parent_.assign(n, 0);
}

bool ParentArrayEnumerator::next(RootedTree& out) {
    if (done_) return false;
    if (!first_) {
        // odometer step: parent[i] < i for i >= 1
        uint32_t i = n_ - 1;
        while (i >= 1) {
            if (parent_[i] + 1 < i) {
                ++parent_[i];
                break;
            }
            parent_[i] = 0;
            --i;
        }
        if (i == 0) {
            done_ = true;
            return false;
        }
    }
    first_ = false;
    if (n_ == 1) done_ = true;

    out.n = n_;
    out.root = 0;
    out.parent.assign(n_, -1);
    for (uint32_t i = 1; i < n_; ++i) out.parent[i] = static_cast<int32_t>(parent_[i]);
    out.real.assign(n_, 1);
    return true;
}

}  // namespace labelforest
