// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "labelforest/generate.hpp"
#include "labelforest/verify.hpp"

using namespace labelforest;
using verify::CheckSet;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
}

// violations across the named checks; requires every named check to have run
bool clean(const CheckSet& cs, const std::vector<std::string>& names, std::string& detail) {
    uint64_t checked = 0, bad = 0;
    for (const auto& name : names) {
        auto it = cs.checks.find(name);
        if (it == cs.checks.end() || it->second.checked == 0) {
            detail = "check never ran: " + name;
            return false;
        }
        checked += it->second.checked;
        bad += it->second.violations;
        if (it->second.violations && detail.empty())
            detail = name + ": " + it->second.sample.front();
    }
    if (bad == 0) detail = "checked " + std::to_string(checked);
    return bad == 0;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::string d;

    // 1. Exhaustive decoder/oracle equivalence, n <= 9, under 60 s.
    auto t0 = std::chrono::steady_clock::now();
    CheckSet ex = verify::run_exhaustive(9);
    double ex_sec = seconds_since(t0);
    bool c1 = clean(ex, {"tree.decode_vs_oracle"}, d) && ex_sec < 60.0;
    report(1, c1, "exhaustive decode vs oracle, n <= 9",
           d + ", " + std::to_string(ex_sec) + " s");

    // 2. Randomized correctness: 6 families x {1e3,1e4,1e5} x 3 seeds.
    CheckSet rnd;
    for (Family fam : {Family::path, Family::star, Family::caterpillar, Family::binary,
                       Family::uniform_prufer, Family::random_recursive})
        for (uint32_t n : {1000u, 10000u, 100000u})
            for (uint64_t seed : {1, 2, 3})
                rnd.merge(verify::run_random_instance(fam, n, seed, 10));
    d.clear();
    report(2, clean(rnd, {"tree.decode_vs_oracle"}, d),
           "randomized decode vs oracle, all families/sizes/seeds", d);

    CheckSet both = ex;
    both.merge(rnd);

    // 3. Caterpillar Lemma 3: N <= 12n, exact.
    d.clear();
    report(3, clean(both, {"cat.lemma3.max_id", "cat.decode_vs_oracle"}, d),
           "caterpillar max id N <= 12n", d);

    // 4. Weight bounds: Corollary 1, Lemma 7 product, max id < pw(root).
    d.clear();
    report(4, clean(both, {"weights.pw", "weights.lw", "ids.max_below_root_pw"}, d),
           "pw/lw bounds and max id < pw(root)", d);

    // 5. Label size: uniqueness, excess <= 256, excess(2^20) <= excess(2^10)+4.
    CheckSet growth = verify::run_label_growth();
    growth.merge(both);
    d.clear();
    report(5,
           clean(growth,
                 {"labels.unique", "labels.excess", "labels.excess_bound",
                  "labels.excess_growth"},
                 d),
           "unique labels, bounded excess across families", d);

    // 6. Structural lemmas 1, 4 (relaxed), 5, 6, 9 on every decomposed tree.
    d.clear();
    report(6,
           clean(both,
                 {"hld.lemma1.light_height", "hld.lemma4.rld_bound",
                  "hld.lemma5.apex_ancestor", "hld.lemma6.apex_child",
                  "hld.lemma9.census"},
                 d),
           "structural lemma assertions", d);

    // 7. Approximation codec on 1e6 random (a, t) pairs.
    d.clear();
    report(7,
           clean(verify::run_approx(1000000, 2026),
                 {"approx.contract", "approx.pack_roundtrip", "approx.size_bound"}, d),
           "approximation codec contract and round-trip", d);

    // 8. Universal graph: U8 embeddings plus bounded vertex growth.
    d.clear();
    report(8,
           clean(verify::run_universal(),
                 {"universal.embed_tree", "universal.embed_caterpillar",
                  "universal.growth_ratio"},
                 d),
           "universal graph embeddings and growth", d);

    // 9. Arboricity-2 composite: K4 optimal partition + 10 random graphs.
    d.clear();
    report(9,
           clean(verify::run_arboricity(10, 77),
                 {"arbor.decode_vs_matrix", "arbor.label_length", "arbor.peel_valid",
                  "arbor.peel_tree_single_part"},
                 d),
           "arboricity-2 composite decode and length", d);

    // 10. Performance: encode 1e6 <= 5 s, linear doubling, constant decode.
    verify::PerfReport perf;
    CheckSet pf = verify::run_perf(perf);
    d.clear();
    bool c10 = clean(pf, {"perf.encode_1e6_wall", "perf.encode_linear", "perf.decode_constant"}, d);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "encode(1e6)=%.2fs, doubling %.3f/%.3f/%.3fs, decode %.0f/%.0f ns",
                  perf.encode_seconds_1e6, perf.encode_seconds[0], perf.encode_seconds[1],
                  perf.encode_seconds[2], perf.decode_ns_small, perf.decode_ns_large);
    report(10, c10, "performance", std::string(buf) + (c10 ? "" : "; " + d));

    // 11. Totality: 1e6 random bit-string pairs, no crash, always a boolean.
    d.clear();
    report(11, clean(verify::run_fuzz(1000000, 2026), {"fuzz.decode_total"}, d),
           "decoder totality fuzz", d);

    return failures == 0 ? 0 : 1;
}
