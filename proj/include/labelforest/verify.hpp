#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "labelforest/forest.hpp"
#include "labelforest/generate.hpp"
#include "labelforest/universal.hpp"

namespace labelforest::verify {

struct Check {
    uint64_t checked = 0;
    uint64_t violations = 0;
    std::vector<std::string> sample;  // first few violation messages

    void tally(uint64_t n = 1) { checked += n; }
    void fail(std::string msg) {
        ++checked;
        ++violations;
        if (sample.size() < 8) sample.push_back(std::move(msg));
    }
    void merge(const Check& o) {
        checked += o.checked;
        violations += o.violations;
        for (const auto& m : o.sample)
            if (sample.size() < 8) sample.push_back(m);
    }
};

struct CheckSet {
    std::map<std::string, Check> checks;

    Check& at(const std::string& name) { return checks[name]; }
    void merge(const CheckSet& o) {
        for (const auto& [name, c] : o.checks) checks[name].merge(c);
    }
    uint64_t total_violations() const {
        uint64_t v = 0;
        for (const auto& [name, c] : checks) v += c.violations;
        return v;
    }
};

// Runs chunks of [0, count) across worker threads; the thread count is capped
// by the LABELFOREST_THREADS environment variable. Results merge in chunk
// order, so the aggregate is deterministic.
uint32_t thread_cap();

// Tree-scheme checks for one forest: decode/oracle equivalence, all
// decomposition and weight lemma assertions, id/interval invariants, label
// invariants. Exhaustive pair scan when exhaustive_pairs is set; otherwise
// all edges plus non_edge_samples sampled non-edges.
void check_tree_scheme(CheckSet& cs, const Forest& f, bool exhaustive_pairs,
                       uint64_t non_edge_samples, uint64_t seed);

// Caterpillar-scheme checks (oracle equivalence, Lemma-3 style bounds);
// a no-op if f is not a connected caterpillar.
void check_caterpillar_scheme(CheckSet& cs, const Forest& f, bool exhaustive_pairs);

// Every parent-array tree with size <= max_n, both schemes, in parallel.
CheckSet run_exhaustive(uint32_t max_n);

// Randomized suite on one generated instance.
CheckSet run_random_instance(Family family, uint32_t n, uint64_t seed,
                             uint64_t non_edge_factor);

// Approximation codec: contract inequalities, monotonicity, pack round-trip.
CheckSet run_approx(uint64_t samples, uint64_t seed);

// decode_adjacent totality on random bit-string pairs.
CheckSet run_fuzz(uint64_t samples, uint64_t seed);

// Universal-graph embedding of every tree with <= 8 nodes, plus the
// vertex-growth ratio between n = 5 and n = 10.
CheckSet run_universal();

// K4 with its optimal 2-forest partition plus random arboricity-2 graphs.
CheckSet run_arboricity(uint32_t instances, uint64_t seed);

// Label-size growth: excess(n = 2^20) <= excess(n = 2^10) + 4 per family.
CheckSet run_label_growth();

struct PerfReport {
    double encode_seconds_1e6 = 0;
    std::vector<double> encode_seconds;   // per doubling size
    std::vector<uint32_t> encode_sizes;
    double decode_ns_small = 0;           // n = 10^3
    double decode_ns_large = 0;           // n = 10^6
};

CheckSet run_perf(PerfReport& report);

struct VerifyConfig {
    Scheme scheme = Scheme::tree;
    uint32_t exhaustive_max_n = 9;
    std::vector<uint32_t> random_sizes = {1000, 10000, 100000};
    std::vector<Family> families = {Family::path,           Family::star,
                                    Family::caterpillar,    Family::binary,
                                    Family::uniform_prufer, Family::random_recursive};
    std::vector<uint64_t> seeds = {1, 2, 3};
    uint64_t non_edge_sample_factor = 10;
};

VerifyConfig parse_config(std::istream& in);
void serialize_config(const VerifyConfig& cfg, std::ostream& out);

// Full verification per config; report is TSV with '#' comment headers.
CheckSet run_verify(const VerifyConfig& cfg, std::ostream& report);

}  // namespace labelforest::verify
