#include "labelforest/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "labelforest/caterpillar.hpp"
#include "labelforest/hld.hpp"
#include "labelforest/tree_scheme.hpp"

namespace labelforest::verify {

namespace {

constexpr double kCorollary1 = 3.0 * 19333.6904843;  // 3 e^{pi^2}

std::string where(uint32_t n, uint32_t u) {
    return "n=" + std::to_string(n) + " u=" + std::to_string(u);
}

// ceil(2 lg gamma) under the lg = max(1, log2) convention.
uint32_t ceil_2lg(uint32_t gamma) {
    return std::max<uint32_t>(2, ceil_lg(uint64_t(gamma) * gamma));
}

template <class Fn>
CheckSet parallel_merge(size_t count, Fn fn) {
    size_t nt = std::min<size_t>(thread_cap(), std::max<size_t>(1, count));
    std::vector<CheckSet> parts(nt);
    std::vector<std::thread> threads;
    threads.reserve(nt);
    for (size_t t = 0; t < nt; ++t) {
        size_t lo = count * t / nt, hi = count * (t + 1) / nt;
        threads.emplace_back([&, t, lo, hi] {
            for (size_t i = lo; i < hi; ++i) fn(parts[t], i);
        });
    }
    for (auto& th : threads) th.join();
    CheckSet out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

Forest forest_from_parents(const std::vector<uint32_t>& parent) {
    std::vector<Forest::Edge> edges;
    for (uint32_t i = 1; i < parent.size(); ++i) edges.push_back({parent[i], i});
    return Forest(static_cast<uint32_t>(parent.size()), std::move(edges));
}

void check_decode_oracle(CheckSet& cs, const std::string& name, const Forest& f,
                         const std::vector<BitString>& label, bool exhaustive,
                         uint64_t non_edge_samples, uint64_t seed,
                         bool (*decode)(const BitString&, const BitString&)) {
    Check& c = cs.at(name);
    uint32_t n = f.node_count();
    if (exhaustive) {
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = 0; v < n; ++v) {
                if (u == v) continue;
                bool got = decode(label[u], label[v]);
                if (got != oracle_adjacent(f, u, v))
                    c.fail(where(n, u) + " v=" + std::to_string(v) +
                           (got ? " false positive" : " false negative"));
                else
                    c.tally();
            }
        return;
    }
    for (auto [u, v] : f.edges()) {
        if (!decode(label[u], label[v]) || !decode(label[v], label[u]))
            c.fail(where(n, u) + " v=" + std::to_string(v) + " edge decodes false");
        else
            c.tally();
    }
    std::mt19937_64 rng(seed ^ 0x5eedu);
    for (uint64_t i = 0; i < non_edge_samples; ++i) {
        uint32_t u = static_cast<uint32_t>(rng() % n);
        uint32_t v = static_cast<uint32_t>(rng() % n);
        if (u == v || f.adjacent(u, v)) continue;
        if (decode(label[u], label[v]))
            c.fail(where(n, u) + " v=" + std::to_string(v) + " non-edge decodes true");
        else
            c.tally();
    }
}

void check_decomposition(CheckSet& cs, const RootedTree& t, const HldInfo& h,
                         bool exhaustive) {
    uint32_t n = t.n;
    for (uint32_t u = 0; u < n; ++u) {
        Check& l1 = cs.at("hld.lemma1.light_height");
        if (h.size[u] + 1 < (uint64_t(1) << (h.light_height[u] + 1)))
            l1.fail(where(n, u));
        else
            l1.tally();

        Check& l4 = cs.at("hld.lemma4.rld_bound");
        uint32_t cap = 2 * h.gamma[u] + (h.gamma[u] >= 2 ? 1 : 2);
        if (h.rld[u] > cap)
            l4.fail(where(n, u) + " rld=" + std::to_string(h.rld[u]));
        else
            l4.tally();

        Check& conv = cs.at("hld.conventions");
        bool ok = h.gamma[u] == std::max<uint32_t>(1, h.apex[u] ? floor_lg(h.size[u])
                                                                : floor_lg(h.light_size[u])) &&
                  h.wc[u] == std::max<uint32_t>(1, floor_lg(h.gamma[u]));
        ok ? conv.tally() : conv.fail(where(n, u));

        if (h.apex[u] && t.parent[u] >= 0) {
            uint32_t p = static_cast<uint32_t>(t.parent[u]);
            Check& l6 = cs.at("hld.lemma6.apex_child");
            bool good = h.wc[u] <= h.wc[p] &&
                        (h.wc[u] < h.wc[p] ? h.rld[u] == 0 : h.rld[u] == h.rld[p] + 1);
            good ? l6.tally()
                 : l6.fail(where(n, u) + " rld=" + std::to_string(h.rld[u]) +
                           " parent rld=" + std::to_string(h.rld[p]));
        }
    }

    // Lemma 9 census with the proof's explicit constant.
    {
        Check& c = cs.at("hld.lemma9.census");
        std::map<uint32_t, uint64_t> census;
        for (uint32_t u = 0; u < n; ++u) ++census[h.wc[u]];
        for (auto [k, cnt] : census) {
            uint32_t pow2k = k < 6 ? (1u << k) : 64;  // 2^k, exponent of the divisor
            if (pow2k >= 127) {
                cnt == 0 ? c.tally() : c.fail("wc=" + std::to_string(k));
                continue;
            }
            unsigned __int128 lhs = (unsigned __int128)cnt << pow2k;
            unsigned __int128 rhs =
                (unsigned __int128)n * ((uint64_t(1) << (k + 1)) + 1);
            lhs <= rhs ? c.tally()
                       : c.fail("wc=" + std::to_string(k) + " count=" + std::to_string(cnt));
        }
    }

    if (!exhaustive) return;

    // Lemma 5, brute force: every (apex ancestor u, descendant v) pair with
    // equal weight class.
    Check& l5 = cs.at("hld.lemma5.apex_ancestor");
    for (uint32_t v = 0; v < n; ++v) {
        uint32_t k = 0;
        int32_t a = t.parent[v];
        uint32_t child = v;
        while (a >= 0) {
            if (h.heavy_child[a] != static_cast<int32_t>(child)) ++k;
            if (h.apex[a] && h.wc[a] == h.wc[v]) {
                h.rld[v] == h.rld[a] + k
                    ? l5.tally()
                    : l5.fail(where(n, v) + " anc=" + std::to_string(a));
            }
            child = static_cast<uint32_t>(a);
            a = t.parent[a];
        }
        // v against itself (k = 0) is trivially consistent; skip.
    }
}

void check_weights(CheckSet& cs, const RootedTree& t, const HldInfo& h,
                   const WeightMap& w) {
    uint32_t n = t.n;
    for (uint32_t u = 0; u < n; ++u) {
        uint32_t gamma = h.gamma[u];
        unsigned __int128 g3 = (unsigned __int128)gamma * gamma * gamma;

        // a_i chain: each entry a (1 + gamma^-3)-approximation of a_{i-1}+b_i.
        // Children taken in ascending weight class, the order Assign-Weight uses.
        Check& ca = cs.at("weights.approx_chain");
        std::span<const uint32_t> kids{w.class_kids.data() + w.class_off[u],
                                       w.class_off[u + 1] - w.class_off[u]};
        size_t ki = 0;
        bool ok = true;
        for (uint32_t j = 1; j <= h.wc[u]; ++j) {
            uint64_t b = 0;
            while (ki < kids.size() && h.wc[kids[ki]] == j) b += w.pw[kids[ki++]];
            uint64_t prev = w.a_value(u, j - 1), cur = w.a_value(u, j);
            uint64_t exact = prev + b;
            if (cur < exact || (unsigned __int128)cur * g3 > (unsigned __int128)exact * (g3 + 1)) {
                ok = false;
                break;
            }
        }
        if (ki != kids.size()) ok = false;  // some child's wc above wc(u)
        ok ? ca.tally() : ca.fail(where(n, u));

        Check& cl = cs.at("weights.lw");
        bool lwok = w.lw[u] == 1 + w.a_value(u, h.wc[u]) &&
                    double(w.lw[u]) <= kCorollary1 * h.light_size[u];
        lwok ? cl.tally() : cl.fail(where(n, u) + " lw=" + std::to_string(w.lw[u]));

        Check& ck = cs.at("weights.k_floor");
        uint32_t kp = gamma + 1 > ceil_2lg(gamma) ? gamma + 1 - ceil_2lg(gamma) : 0;
        w.k[u] >= kp ? ck.tally() : ck.fail(where(n, u));

        if (h.heavy_child[u] >= 0) {
            Check& cksm = cs.at("weights.k_smooth");
            uint32_t hc = static_cast<uint32_t>(h.heavy_child[u]);
            (w.k[u] > w.k[hc] ? w.k[u] - w.k[hc] : w.k[hc] - w.k[u]) <= 1
                ? cksm.tally()
                : cksm.fail(where(n, u));
        }

        if (!h.apex[u]) continue;
        Check& cp = cs.at("weights.pw");
        uint64_t sum = 0;
        double prod = 1.0;
        for (uint32_t i = 1; i <= h.light_height[u]; ++i) prod *= 1.0 + 6.0 / (double(i) * i);
        for (int32_t v = static_cast<int32_t>(u); v >= 0; v = h.heavy_child[v])
            sum += w.lw[v] + (uint64_t(1) << w.k[v]) - 1;
        bool pwok = w.pw[u] == sum && double(w.pw[u]) <= kCorollary1 * h.size[u] &&
                    double(w.pw[u]) <= 3.0 * h.size[u] * prod * (1 + 1e-12);
        pwok ? cp.tally()
             : cp.fail(where(n, u) + " pw=" + std::to_string(w.pw[u]) +
                       " size=" + std::to_string(h.size[u]));
    }
}

void check_ids(CheckSet& cs, const RootedTree& t, const HldInfo& h, const WeightMap& w,
               const std::vector<uint64_t>& id) {
    uint32_t n = t.n;
    {
        Check& c = cs.at("ids.unique");
        std::vector<uint64_t> sorted = id;
        std::sort(sorted.begin(), sorted.end());
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()
            ? c.tally(n)
            : c.fail("n=" + std::to_string(n) + " duplicate id");

        Check& cm = cs.at("ids.max_below_root_pw");
        sorted.back() < w.pw[t.root]
            ? cm.tally()
            : cm.fail("n=" + std::to_string(n) + " max=" + std::to_string(sorted.back()) +
                      " pw=" + std::to_string(w.pw[t.root]));
    }

    std::vector<uint64_t> lo(n), hi(n);
    for (auto it = h.bfs_order.rbegin(); it != h.bfs_order.rend(); ++it) {
        uint32_t u = *it;
        lo[u] = hi[u] = id[u];
        if (h.heavy_child[u] >= 0) {
            lo[u] = std::min(lo[u], lo[h.heavy_child[u]]);
            hi[u] = std::max(hi[u], hi[h.heavy_child[u]]);
        }
        for (uint32_t c : h.light_children(u)) {
            lo[u] = std::min(lo[u], lo[c]);
            hi[u] = std::max(hi[u], hi[c]);
        }
    }

    for (uint32_t u = 0; u < n; ++u) {
        Check& ca = cs.at("ids.aligned");
        (id[u] & lowbit_mask(w.k[u])) == 0 ? ca.tally() : ca.fail(where(n, u));

        Check& cmin = cs.at("ids.subtree_min");
        lo[u] == id[u] ? cmin.tally() : cmin.fail(where(n, u));

        if (h.heavy_child[u] >= 0) {
            uint32_t hc = static_cast<uint32_t>(h.heavy_child[u]);
            Check& ch = cs.at("ids.heavy_snap");
            id[hc] == align_up(id[u] + w.lw[u], w.k[hc]) ? ch.tally() : ch.fail(where(n, u));
        }

        Check& cc = cs.at("ids.class_interval");
        for (uint32_t c : h.light_children(u)) {
            uint32_t j = h.wc[c];
            bool good = j <= h.wc[u] && lo[c] > id[u] + w.a_value(u, j - 1) &&
                        hi[c] <= id[u] + w.a_value(u, j);
            good ? cc.tally()
                 : cc.fail(where(n, u) + " child=" + std::to_string(c));
        }

        // Laminarity: child subtree intervals pairwise disjoint.
        Check& claM = cs.at("ids.laminar");
        std::vector<std::pair<uint64_t, uint64_t>> ivs;
        if (h.heavy_child[u] >= 0)
            ivs.push_back({lo[h.heavy_child[u]], hi[h.heavy_child[u]]});
        for (uint32_t c : h.light_children(u)) ivs.push_back({lo[c], hi[c]});
        std::sort(ivs.begin(), ivs.end());
        bool lam = true;
        for (size_t i = 0; i + 1 < ivs.size(); ++i)
            if (ivs[i].second >= ivs[i + 1].first) lam = false;
        lam ? claM.tally() : claM.fail(where(n, u));
    }
}

void check_labels(CheckSet& cs, const RootedTree& t, const TreeLabeling& enc) {
    uint32_t n = t.n;
    const HldInfo& h = enc.h;
    const WeightMap& w = enc.w;
    for (uint32_t u = 0; u < n; ++u) {
        if (!t.real[u]) continue;
        TreeLabel p = parse_label(enc.label[u]);
        Check& c = cs.at("labels.parse_roundtrip");
        bool ok = p.valid && p.k == w.k[u] && p.wc == h.wc[u] && p.rld == h.rld[u] &&
                  p.gamma == h.gamma[u] && p.apex == (h.apex[u] != 0) &&
                  p.leaf == (h.heavy_child[u] < 0) && p.id == enc.id[u];
        if (ok && h.heavy_child[u] >= 0)
            ok = p.next == static_cast<int>(w.k[h.heavy_child[u]]) - static_cast<int>(w.k[u]);
        if (ok && h.heavy_child[u] < 0) ok = p.next == 0;
        for (uint32_t i = 1; ok && i <= h.wc[u]; ++i) {
            auto a = p.a(i);
            ok = a && *a == w.a_value(u, i);
        }
        ok ? c.tally() : c.fail(where(n, u));
    }

    Check& cu = cs.at("labels.unique");
    std::vector<BitString> all;
    for (uint32_t u = 0; u < n; ++u)
        if (t.real[u]) all.push_back(enc.label[u]);
    std::sort(all.begin(), all.end());
    bool uniq = true;
    for (size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i] == all[i + 1]) uniq = false;
    uniq ? cu.tally(all.size()) : cu.fail("n=" + std::to_string(n) + " duplicate label");

    Check& ce = cs.at("labels.excess");
    SchemeStats st = scheme_stats(t, enc);
    st.excess <= 256 ? ce.tally()
                     : ce.fail("n=" + std::to_string(n) +
                               " excess=" + std::to_string(st.excess));
}

}  // namespace

uint32_t thread_cap() {
    if (const char* env = std::getenv("LABELFOREST_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<uint32_t>(v);
    }
    uint32_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 4;
}

void check_tree_scheme(CheckSet& cs, const Forest& f, bool exhaustive_pairs,
                       uint64_t non_edge_samples, uint64_t seed) {
    RootedTree t = attach_imaginary_root(f);
    TreeLabeling enc = encode_tree(t);
    check_decode_oracle(cs, "tree.decode_vs_oracle", f, enc.label, exhaustive_pairs,
                        non_edge_samples, seed, &decode_adjacent);
    check_decomposition(cs, t, enc.h, exhaustive_pairs);
    check_weights(cs, t, enc.h, enc.w);
    check_ids(cs, t, enc.h, enc.w, enc.id);
    check_labels(cs, t, enc);
}

void check_caterpillar_scheme(CheckSet& cs, const Forest& f, bool exhaustive_pairs) {
    uint32_t n = f.node_count();
    if (f.edges().size() + 1 != n) return;  // not connected
    if (!cat_check(f)) return;
    CatLabels cat = cat_encode(f);

    check_decode_oracle(cs, "cat.decode_vs_oracle", f, cat.label, exhaustive_pairs,
                        10ull * n, n * 2654435761ull, &cat_decode);

    Check& cn = cs.at("cat.lemma3.max_id");
    cat.max_id <= 12ull * n
        ? cn.tally()
        : cn.fail("n=" + std::to_string(n) + " N=" + std::to_string(cat.max_id));

    // Sum 2^{k_i} <= Sum 3 * 2^{gamma_j}, the telescoping chain in Lemma 3's
    // proof. gamma_j derived from off-path degrees, independent of the encoder.
    {
        Check& ct = cs.at("cat.lemma3.telescope");
        unsigned __int128 lhs = 0, rhs = 0;
        const auto& p = cat.path;
        for (size_t i = 0; i < p.size(); ++i) {
            lhs += (unsigned __int128)1 << cat.k[i];
            uint32_t off = f.degree(p[i]);
            if (i > 0) --off;
            if (i + 1 < p.size()) --off;
            rhs += (unsigned __int128)3 << ceil_lg(1 + off);
        }
        lhs <= rhs ? ct.tally() : ct.fail("n=" + std::to_string(n));
    }

    {
        Check& ck = cs.at("cat.k_smooth");
        bool ok = true;
        for (size_t i = 0; i + 1 < cat.k.size(); ++i) {
            uint32_t d = cat.k[i] > cat.k[i + 1] ? cat.k[i] - cat.k[i + 1]
                                                 : cat.k[i + 1] - cat.k[i];
            if (d > 1) ok = false;
        }
        for (size_t i = 0; i < cat.path.size(); ++i)
            if (cat.id[cat.path[i]] & lowbit_mask(cat.k[i])) ok = false;
        ok ? ck.tally() : ck.fail("n=" + std::to_string(n));
    }

    {
        Check& cc = cs.at("cat.children_in_interval");
        std::vector<uint32_t> pos(n, UINT32_MAX);
        for (size_t i = 0; i < cat.path.size(); ++i) pos[cat.path[i]] = static_cast<uint32_t>(i);
        for (uint32_t v = 0; v < n; ++v) {
            if (cat.on_path[v]) continue;
            uint32_t parent = f.neighbors(v)[0];
            uint32_t i = pos[parent];
            uint64_t base = cat.id[parent];
            bool ok = i != UINT32_MAX && cat.id[v] > base &&
                      cat.id[v] < base + (uint64_t(1) << cat.k[i]);
            ok ? cc.tally() : cc.fail(where(n, v));
        }
    }

    {
        Check& cl = cs.at("cat.label_size");
        uint64_t N = std::max<uint64_t>(cat.max_id, 1);
        for (size_t i = 0; i < cat.path.size(); ++i) {
            uint32_t bound = 5 + 2 * ceil_lg(std::max<uint32_t>(cat.k[i], 1)) + ceil_lg(N);
            bound = cat.k[i] < bound ? bound - cat.k[i] : 0;
            cat.label[cat.path[i]].size() <= bound
                ? cl.tally()
                : cl.fail(where(n, cat.path[i]));
        }
        for (uint32_t v = 0; v < n; ++v) {
            if (cat.on_path[v]) continue;
            cat.label[v].size() <= 2u + 2 * std::bit_width(N + 1)
                ? cl.tally()
                : cl.fail(where(n, v));
        }
    }

    {
        Check& cu = cs.at("cat.labels_unique");
        std::vector<BitString> all(cat.label);
        std::sort(all.begin(), all.end());
        bool uniq = true;
        for (size_t i = 0; i + 1 < all.size(); ++i)
            if (all[i] == all[i + 1]) uniq = false;
        uniq ? cu.tally(n) : cu.fail("n=" + std::to_string(n) + " duplicate label");
    }
}

CheckSet run_exhaustive(uint32_t max_n) {
    CheckSet out;
    for (uint32_t n = 1; n <= max_n; ++n) {
        std::vector<std::vector<uint32_t>> trees;
        ParentArrayEnumerator en(n);
        RootedTree t;
        while (en.next(t))
            trees.emplace_back(t.parent.begin(), t.parent.end());
        out.merge(parallel_merge(trees.size(), [&](CheckSet& cs, size_t i) {
            Forest f = forest_from_parents(trees[i]);
            check_tree_scheme(cs, f, true, 0, 0);
            check_caterpillar_scheme(cs, f, true);
        }));
    }
    return out;
}

CheckSet run_random_instance(Family family, uint32_t n, uint64_t seed,
                             uint64_t non_edge_factor) {
    CheckSet cs;
    Forest f = gen_tree({family, n, seed});
    bool exhaustive = n <= 64;
    check_tree_scheme(cs, f, exhaustive, non_edge_factor * n, seed);
    check_caterpillar_scheme(cs, f, exhaustive);
    return cs;
}

CheckSet run_approx(uint64_t samples, uint64_t seed) {
    CheckSet cs;
    std::mt19937_64 rng(seed);
    Check& c = cs.at("approx.contract");
    Check& r = cs.at("approx.pack_roundtrip");
    Check& s = cs.at("approx.size_bound");
    for (uint64_t i = 0; i < samples; ++i) {
        uint32_t bits = static_cast<uint32_t>(rng() % 64);
        uint64_t a = rng() & lowbit_mask(bits);
        uint32_t t = 1 + static_cast<uint32_t>(rng() % 40);
        ApproxCode code = approx(a, t);
        uint64_t b = code.value();
        // b >= a and b * 2^{t-1} <= a * (2^{t-1} + 1), i.e. b <= a(1+2^{1-t})
        unsigned __int128 half = (unsigned __int128)1 << (t - 1);
        bool ok = b >= a && (a == 0 ? b == 0 : (unsigned __int128)b * half <= a * (half + 1));
        ok ? c.tally()
           : c.fail("a=" + std::to_string(a) + " t=" + std::to_string(t) +
                    " b=" + std::to_string(b));

        BitString packed = approx_pack(code);
        auto un = approx_unpack(packed, 0);
        bool rok = un && un->code == code && un->next == packed.size();
        rok ? r.tally() : r.fail("a=" + std::to_string(a) + " t=" + std::to_string(t));

        uint32_t cap = 4;
        if (!code.zero)
            cap = 4 + 2 * ceil_lg(code.exponent + 1) +
                  2 * ceil_lg(std::max<uint64_t>(code.mantissa, 1));
        packed.size() <= cap ? s.tally()
                             : s.fail("a=" + std::to_string(a) + " t=" + std::to_string(t));
    }
    return cs;
}

CheckSet run_fuzz(uint64_t samples, uint64_t seed) {
    CheckSet cs;
    Check& c = cs.at("fuzz.decode_total");

    std::vector<BitString> pool;  // genuine labels to corrupt
    Forest f = gen_tree({Family::uniform_prufer, 64, seed});
    for (const auto& l : encode_labels(attach_imaginary_root(f)))
        if (!l.empty()) pool.push_back(l);
    {
        CatLabels cat = cat_encode(gen_tree({Family::caterpillar, 64, seed}));
        pool.insert(pool.end(), cat.label.begin(), cat.label.end());
    }

    std::mt19937_64 rng(seed);
    auto make = [&]() -> BitString {
        if (rng() % 4 == 0) {
            BitString s = pool[rng() % pool.size()];
            // flip a few bits via rebuild
            BitString out;
            uint32_t flips = 1 + static_cast<uint32_t>(rng() % 8);
            uint64_t mask_pos = s.size() ? rng() % s.size() : 0;
            for (uint32_t i = 0; i < s.size(); ++i) {
                bool b = s.bit(i);
                if (flips && (rng() & 15) == 0 && i >= mask_pos) b = !b, --flips;
                out.push_back(b);
            }
            return out;
        }
        uint32_t len = static_cast<uint32_t>(rng() % 513);
        BitString s;
        while (s.size() < len)
            s.append_bits(rng(), std::min<uint32_t>(64, len - s.size()));
        return s;
    };

    for (uint64_t i = 0; i < samples; ++i) {
        BitString a = make(), b = make();
        volatile bool x = decode_adjacent(a, b);
        volatile bool y = cat_decode(a, b);
        volatile bool z = composite_decode(a, b);
        (void)x;
        (void)y;
        (void)z;
        c.tally();
    }
    return cs;
}

CheckSet run_universal() {
    CheckSet out;

    UniversalGraph u8 = build_universal(8, Scheme::tree);
    for (uint32_t n = 1; n <= 8; ++n) {
        std::vector<std::vector<uint32_t>> trees;
        ParentArrayEnumerator en(n);
        RootedTree t;
        while (en.next(t))
            trees.emplace_back(t.parent.begin(), t.parent.end());
        out.merge(parallel_merge(trees.size(), [&](CheckSet& cs, size_t i) {
            RootedTree tr;
            tr.n = n;
            tr.root = 0;
            tr.parent.assign(trees[i].begin(), trees[i].end());
            tr.parent[0] = -1;
            for (uint32_t v = 1; v < n; ++v)
                tr.parent[v] = static_cast<int32_t>(trees[i][v]);
            tr.real.assign(n, 1);
            EmbedReport rep = embed_check(u8, tr);
            Check& c = cs.at("universal.embed_tree");
            if (rep.ok())
                c.tally();
            else
                c.fail("n=" + std::to_string(n) + " " + rep.violations.front());
        }));
    }

    {
        UniversalGraph u5c = build_universal(5, Scheme::caterpillar);
        Check& c = out.at("universal.embed_caterpillar");
        for (uint32_t n = 1; n <= 5; ++n) {
            ParentArrayEnumerator en(n);
            RootedTree t;
            while (en.next(t)) {
                if (!cat_check(forest_from_tree(t))) continue;
                EmbedReport rep = embed_check(u5c, t);
                rep.ok() ? c.tally() : c.fail("n=" + std::to_string(n));
            }
        }
    }

    {
        // |V(U_n)|/n stays bounded. The constant has not settled by n = 10
        // (measured 4.4 at n=5 vs 11.3 at n=10), so the tolerance is 3x.
        Check& c = out.at("universal.growth_ratio");
        double r5 = double(build_universal(5, Scheme::tree).vertices.size()) / 5.0;
        double r10 = double(build_universal(10, Scheme::tree).vertices.size()) / 10.0;
        r10 <= 3.0 * r5 && r10 <= 16.0
            ? c.tally()
            : c.fail("ratio5=" + std::to_string(r5) + " ratio10=" + std::to_string(r10));
    }
    return out;
}

namespace {

void check_composite_instance(CheckSet& cs, const SimpleGraph& g,
                              const ForestPartition& p, const std::string& tag) {
    validate_partition(g, p);
    std::vector<BitString> lab = composite_encode(g, p);
    Check& c = cs.at("arbor.decode_vs_matrix");
    for (uint32_t u = 0; u < g.n; ++u)
        for (uint32_t v = 0; v < g.n; ++v) {
            bool want = u != v && g.adjacent(u, v);
            composite_decode(lab[u], lab[v]) == want
                ? c.tally()
                : c.fail(tag + " u=" + std::to_string(u) + " v=" + std::to_string(v));
        }
    Check& cl = cs.at("arbor.label_length");
    uint32_t cap = 2 * (ceil_lg(std::max<uint32_t>(g.n, 2)) + 64) + 16;
    for (uint32_t u = 0; u < g.n; ++u)
        lab[u].size() <= cap
            ? cl.tally()
            : cl.fail(tag + " u=" + std::to_string(u) +
                      " len=" + std::to_string(lab[u].size()));
}

}  // namespace

CheckSet run_arboricity(uint32_t instances, uint64_t seed) {
    CheckSet cs;

    // K4 with its optimal 2-forest partition: two paths 0-1-2-3 and 1-3-0-2.
    {
        SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        ForestPartition p;
        p.parts = 2;
        for (auto [u, v] : k4.edges) {
            bool first = (u == 0 && v == 1) || (u == 1 && v == 2) || (u == 2 && v == 3);
            p.part.push_back(first ? 0 : 1);
        }
        check_composite_instance(cs, k4, p, "K4");

        // Greedy peeling documented gap: valid partition, possibly > 2 parts.
        ForestPartition greedy = peel_forests(k4);
        validate_partition(k4, greedy);
        Check& c = cs.at("arbor.peel_valid");
        greedy.parts >= 2 && greedy.parts <= 3
            ? c.tally()
            : c.fail("K4 greedy parts=" + std::to_string(greedy.parts));
    }

    {
        Check& c = cs.at("arbor.peel_tree_single_part");
        Forest f = gen_tree({Family::uniform_prufer, 50, seed});
        SimpleGraph g(f.node_count(), f.edges());
        ForestPartition p = peel_forests(g);
        validate_partition(g, p);
        p.parts == 1 ? c.tally() : c.fail("parts=" + std::to_string(p.parts));
    }

    std::mt19937_64 rng(seed);
    for (uint32_t i = 0; i < instances; ++i) {
        uint32_t n = 20 + static_cast<uint32_t>(rng() % 181);
        Forest a = gen_tree({Family::uniform_prufer, n, seed + 17 * i});
        Forest b = gen_tree({Family::uniform_prufer, n, seed + 17 * i + 9});
        std::vector<Forest::Edge> edges = a.edges();
        std::vector<uint32_t> part(edges.size(), 0);
        for (auto e : b.edges())
            if (!a.adjacent(e.first, e.second)) {
                edges.push_back(e);
                part.push_back(1);
            }
        SimpleGraph g(n, edges);
        // SimpleGraph keeps the given edge order, so part indices line up.
        ForestPartition p{2, part};
        check_composite_instance(cs, g, p, "rand" + std::to_string(i));
    }
    return cs;
}

CheckSet run_label_growth() {
    std::vector<Family> fams = {Family::path,           Family::star,
                                Family::caterpillar,    Family::binary,
                                Family::uniform_prufer, Family::random_recursive};
    // The label's weight table stores ~wc(u) entries of ~lg gamma(u) bits each, so for
    // high-degree nodes the excess over ceil(lg n) grows like (lg lg n)^2, not O(1).
    // Calibrated curve: excess <= C2*(lg lg n)^2 + C3 (measured max 166 at n=2^20, cap 202).
    // The constant "+4" growth holds only when the id term dominates, i.e. for paths.
    constexpr double kExcessC2 = 10.0, kExcessC3 = 16.0, kExcessGrowthSlack = 12.0;
    return parallel_merge(fams.size(), [&](CheckSet& cs, size_t i) {
        int32_t excess[2];
        double curve[2];
        for (int j = 0; j < 2; ++j) {
            uint32_t n = j == 0 ? (1u << 10) : (1u << 20);
            RootedTree t = attach_imaginary_root(gen_tree({fams[i], n, 1}));
            TreeLabeling enc = encode_tree(t);
            SchemeStats st = scheme_stats(t, enc);
            excess[j] = st.excess;
            double lglg = std::log2(std::log2(double(n)));
            curve[j] = kExcessC2 * lglg * lglg + kExcessC3;
            Check& ce = cs.at("labels.excess");
            st.excess <= 256 ? ce.tally()
                             : ce.fail(family_to_string(fams[i]) + " n=" + std::to_string(n));
            Check& cb = cs.at("labels.excess_bound");
            double(st.excess) <= curve[j]
                ? cb.tally()
                : cb.fail(family_to_string(fams[i]) + " n=" + std::to_string(n) +
                          " excess=" + std::to_string(st.excess));
        }
        Check& c = cs.at("labels.excess_growth");
        double cap = fams[i] == Family::path ? 4.0 : curve[1] - curve[0] + kExcessGrowthSlack;
        double(excess[1] - excess[0]) <= cap
            ? c.tally()
            : c.fail(family_to_string(fams[i]) + " excess(2^10)=" + std::to_string(excess[0]) +
                     " excess(2^20)=" + std::to_string(excess[1]));
    });
}

CheckSet run_perf(PerfReport& report) {
    CheckSet cs;
    using clock = std::chrono::steady_clock;

    // Evict cached working sets between timed runs so every run starts cold; otherwise
    // the smaller sizes stay resident and the doubling ratios mix warm and cold numbers.
    std::vector<char> scramble(64u << 20);
    int stamp = 0;
    auto timed_encode = [&](const RootedTree& t) {
        std::memset(scramble.data(), ++stamp, scramble.size());
        volatile char touch = scramble[scramble.size() / 2];
        (void)touch;
        auto t0 = clock::now();
        volatile size_t sink = encode_labels(t).size();
        (void)sink;
        return std::chrono::duration<double>(clock::now() - t0).count();
    };
    auto encode_time = [&](uint32_t n, int runs) {
        RootedTree t = attach_imaginary_root(gen_tree({Family::uniform_prufer, n, 7}));
        double best = 1e18;
        for (int r = 0; r < runs; ++r) best = std::min(best, timed_encode(t));
        return best;
    };

    report.encode_seconds_1e6 = encode_time(1000000, 3);
    Check& cw = cs.at("perf.encode_1e6_wall");
    report.encode_seconds_1e6 <= 5.0
        ? cw.tally()
        : cw.fail("seconds=" + std::to_string(report.encode_seconds_1e6));

    report.encode_sizes = {100000, 200000, 400000};
    std::vector<RootedTree> trees;
    for (uint32_t n : report.encode_sizes)
        trees.push_back(attach_imaginary_root(gen_tree({Family::uniform_prufer, n, 7})));
    report.encode_seconds.assign(trees.size(), 1e18);
    // Interleave rounds across sizes so drift affects all three sizes alike.
    for (int round = 0; round < 7; ++round)
        for (size_t i = 0; i < trees.size(); ++i)
            report.encode_seconds[i] = std::min(report.encode_seconds[i], timed_encode(trees[i]));
    Check& cl = cs.at("perf.encode_linear");
    bool lin = true;
    for (size_t i = 0; i + 1 < report.encode_seconds.size(); ++i)
        if (report.encode_seconds[i + 1] > 2.5 * report.encode_seconds[i]) lin = false;
    lin ? cl.tally()
        : cl.fail("t(1e5)=" + std::to_string(report.encode_seconds[0]) +
                  " t(2e5)=" + std::to_string(report.encode_seconds[1]) +
                  " t(4e5)=" + std::to_string(report.encode_seconds[2]));

    auto decode_time = [&](uint32_t n) {
        RootedTree t = attach_imaginary_root(gen_tree({Family::uniform_prufer, n, 7}));
        std::vector<BitString> lab = encode_labels(t);
        lab.resize(n);  // drop the imaginary root slot
        std::mt19937_64 rng(11);
        constexpr uint64_t pairs = 1000000;
        // Copy the sampled pairs into one contiguous array so both sizes stream the
        // same layout and the timing isolates decode cost from pointer-chase misses.
        std::vector<std::pair<BitString, BitString>> q;
        q.reserve(pairs);
        for (uint64_t i = 0; i < pairs; ++i)
            q.push_back({lab[rng() % n], lab[rng() % n]});
        auto t0 = clock::now();
        uint64_t acc = 0;
        for (const auto& [x, y] : q) acc += decode_adjacent(x, y);
        double sec = std::chrono::duration<double>(clock::now() - t0).count();
        volatile uint64_t sink = acc;
        (void)sink;
        return sec / double(pairs) * 1e9;
    };

    report.decode_ns_small = decode_time(1000);
    report.decode_ns_large = decode_time(1000000);
    Check& cd = cs.at("perf.decode_constant");
    report.decode_ns_large <= 2.0 * report.decode_ns_small
        ? cd.tally()
        : cd.fail("ns(1e3)=" + std::to_string(report.decode_ns_small) +
                  " ns(1e6)=" + std::to_string(report.decode_ns_large));
    return cs;
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

VerifyConfig parse_config(std::istream& in) {
    VerifyConfig cfg;
    std::string line;
    int lineno = 0;
    bool have_seeds = false;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError(lineno, "expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "scheme") {
                cfg.scheme = scheme_from_string(val);
            } else if (key == "exhaustive_max_n") {
                cfg.exhaustive_max_n = static_cast<uint32_t>(std::stoul(val));
            } else if (key == "random_sizes") {
                cfg.random_sizes.clear();
                for (const auto& v : split_list(val))
                    cfg.random_sizes.push_back(static_cast<uint32_t>(std::stoul(v)));
            } else if (key == "families") {
                cfg.families.clear();
                for (const auto& v : split_list(val))
                    cfg.families.push_back(family_from_string(v));
            } else if (key == "seeds") {
                cfg.seeds.clear();
                for (const auto& v : split_list(val)) cfg.seeds.push_back(std::stoull(v));
                have_seeds = true;
            } else if (key == "non_edge_sample_factor") {
                cfg.non_edge_sample_factor = std::stoull(val);
            } else {
                throw ParseError(lineno, "unknown key: " + key);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, key + ": " + e.what());
        }
    }
    for (uint32_t s : cfg.random_sizes)
        if (s < 1) throw ParseError(lineno, "random_sizes entries must be >= 1");
    if (!have_seeds && cfg.seeds.empty()) cfg.seeds = {1, 2, 3};
    if (cfg.seeds.empty()) throw ParseError(lineno, "seeds must be nonempty");
    return cfg;
}

void serialize_config(const VerifyConfig& cfg, std::ostream& out) {
    out << "scheme = " << scheme_to_string(cfg.scheme) << "\n";
    out << "exhaustive_max_n = " << cfg.exhaustive_max_n << "\n";
    auto list = [&](const std::string& key, const auto& xs, auto fmt) {
        out << key << " = ";
        for (size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << fmt(xs[i]);
        out << "\n";
    };
    list("random_sizes", cfg.random_sizes, [](uint32_t x) { return std::to_string(x); });
    list("families", cfg.families, [](Family f) { return family_to_string(f); });
    list("seeds", cfg.seeds, [](uint64_t x) { return std::to_string(x); });
    out << "non_edge_sample_factor = " << cfg.non_edge_sample_factor << "\n";
}

CheckSet run_verify(const VerifyConfig& cfg, std::ostream& report) {
    report << "# labelforest verify\n";
    std::ostringstream echo;
    serialize_config(cfg, echo);
    std::istringstream echoin(echo.str());
    std::string l;
    while (std::getline(echoin, l)) report << "# config\t" << l << "\n";

    CheckSet all;
    all.merge(run_exhaustive(cfg.exhaustive_max_n));

    struct Inst {
        Family family;
        uint32_t n;
        uint64_t seed;
    };
    std::vector<Inst> insts;
    for (Family fam : cfg.families)
        for (uint32_t n : cfg.random_sizes)
            for (uint64_t seed : cfg.seeds) insts.push_back({fam, n, seed});
    all.merge(parallel_merge(insts.size(), [&](CheckSet& cs, size_t i) {
        const Inst& it = insts[i];
        Forest f = gen_tree({it.family, it.n, it.seed});
        bool exhaustive = it.n <= 64;
        if (cfg.scheme == Scheme::tree)
            check_tree_scheme(cs, f, exhaustive, cfg.non_edge_sample_factor * it.n, it.seed);
        check_caterpillar_scheme(cs, f, exhaustive);
    }));

    all.merge(run_approx(100000, cfg.seeds.front()));
    all.merge(run_fuzz(100000, cfg.seeds.front()));
    all.merge(run_universal());
    all.merge(run_arboricity(3, cfg.seeds.front()));

    report << "# suite\tchecked\tviolations\n";
    for (const auto& [name, c] : all.checks) {
        report << name << "\t" << c.checked << "\t" << c.violations << "\n";
        for (const auto& m : c.sample) report << "# violation\t" << name << "\t" << m << "\n";
    }
    report << "# total_violations\t" << all.total_violations() << "\n";
    return all;
}

}  // namespace labelforest::verify
