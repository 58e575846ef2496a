#include "labelforest/tree_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace labelforest {

WeightMap assign_weights(const RootedTree& t, const HldInfo& h) {
    const uint32_t n = t.n;
    WeightMap w;
    w.lw.assign(n, 1);
    w.k.assign(n, 0);
    w.pw.assign(n, 0);
    w.a_off.assign(n + 1, 0);
    for (uint32_t u = 0; u < n; ++u) w.a_off[u + 1] = w.a_off[u] + h.wc[u];
    w.a_codes.assign(w.a_off[n], ApproxCode{});
    w.a_values.assign(w.a_off[n], 0);

    // regroup light children by ascending weight class, keeping the
    // descending-size order within a class (stable counting sort per node)
    w.class_off = h.light_off;
    w.class_kids.assign(h.light_kids.size(), 0);
    {
        std::vector<uint32_t> count;
        for (uint32_t u = 0; u < n; ++u) {
            auto kids = h.light_children(u);
            if (kids.empty()) continue;
            uint32_t maxc = 0;
            for (uint32_t v : kids) maxc = std::max(maxc, h.wc[v]);
            count.assign(maxc + 2, 0);
            for (uint32_t v : kids) ++count[h.wc[v] + 1];
            for (uint32_t c = 1; c <= maxc + 1; ++c) count[c] += count[c - 1];
            uint32_t base = w.class_off[u];
            for (uint32_t v : kids) w.class_kids[base + count[h.wc[v]]++] = v;
        }
    }

    auto class_children = [&](uint32_t u) {
        return std::span<const uint32_t>(w.class_kids.data() + w.class_off[u],
                                         w.class_off[u + 1] - w.class_off[u]);
    };

    // Assign-Weight on the heavy path headed by `apex`; recursion only
    // crosses light edges, so the depth is the light height
    auto assign_path = [&](auto&& self, uint32_t apex) -> uint64_t {
        std::vector<uint32_t> path;
        for (int32_t u = static_cast<int32_t>(apex); u >= 0; u = h.heavy_child[u])
            path.push_back(static_cast<uint32_t>(u));

        for (uint32_t u : path) {
            auto kids = class_children(u);
            size_t c = 0;
            uint64_t prev = 0;  // a_0
            uint32_t prec = approx_precision_for(h.gamma[u]);
            for (uint32_t j = 1; j <= h.wc[u]; ++j) {
                uint64_t b = 0;
                while (c < kids.size() && h.wc[kids[c]] == j) {
                    b += self(self, kids[c]);
                    ++c;
                }
                ApproxCode code = approx(prev + b, prec);
                w.a_codes[w.a_off[u] + j - 1] = code;
                prev = code.value();
                w.a_values[w.a_off[u] + j - 1] = prev;
            }
            w.lw[u] = 1 + prev;
        }

        // k' sweep: k'(u) = gamma(u) - ceil(2 lg gamma(u)) + 1, clamped at 0
        auto k_base = [&](uint32_t u) -> uint32_t {
            uint32_t g = h.gamma[u];
            uint32_t two_lg = static_cast<uint32_t>(std::max<uint64_t>(
                2, ceil_lg(uint64_t(g) * g)));
            return g + 1 > two_lg ? g + 1 - two_lg : 0;
        };
        w.k[path[0]] = k_base(path[0]);
        for (size_t i = 1; i < path.size(); ++i) {
            uint32_t prev_k = w.k[path[i - 1]];
            w.k[path[i]] = std::max(k_base(path[i]), prev_k > 0 ? prev_k - 1 : 0);
        }
        for (size_t i = path.size() - 1; i-- > 0;) {
            uint32_t next_k = w.k[path[i + 1]];
            w.k[path[i]] = std::max(w.k[path[i]], next_k > 0 ? next_k - 1 : 0);
        }

        uint64_t pw = 0;
        for (uint32_t u : path) pw += w.lw[u] + (uint64_t(1) << w.k[u]) - 1;
        w.pw[apex] = pw;
        return pw;
    };
    assign_path(assign_path, t.root);
    return w;
}

std::vector<uint64_t> assign_ids(const RootedTree& t, const HldInfo& h, const WeightMap& w) {
    std::vector<uint64_t> id(t.n, 0);
    auto class_children = [&](uint32_t u) {
        return std::span<const uint32_t>(w.class_kids.data() + w.class_off[u],
                                         w.class_off[u + 1] - w.class_off[u]);
    };
    // iterative along heavy paths, recursive across light edges
    auto assign_path = [&](auto&& self, uint32_t apex, uint64_t s) -> void {
        int32_t u = static_cast<int32_t>(apex);
        while (u >= 0) {
            id[u] = align_up(s, w.k[u]);
            auto kids = class_children(u);
            size_t c = 0;
            while (c < kids.size()) {
                uint32_t j = h.wc[kids[c]];
                uint64_t pos = id[u] + w.a_value(u, j - 1) + 1;
                while (c < kids.size() && h.wc[kids[c]] == j) {
                    self(self, kids[c], pos);
                    pos += w.pw[kids[c]];
                    ++c;
                }
            }
            s = id[u] + w.lw[u];
            u = h.heavy_child[u];
        }
    };
    assign_path(assign_path, t.root, 0);
    return id;
}

namespace {

BitString pack_label(uint32_t u, const HldInfo& h, const WeightMap& w, uint64_t id) {
    BitString l;
    // aux: [k+1] [wc] [rld+1] [gamma] apex leaf next
    gamma_encode(l, uint64_t(w.k[u]) + 1);
    gamma_encode(l, h.wc[u]);
    gamma_encode(l, uint64_t(h.rld[u]) + 1);
    gamma_encode(l, h.gamma[u]);
    l.push_back(h.apex[u] != 0);
    bool leaf = h.heavy_child[u] < 0;
    l.push_back(leaf);
    int next = leaf ? 0 : static_cast<int>(w.k[h.heavy_child[u]]) - static_cast<int>(w.k[u]);
    switch (next) {
        case 0: l.append_bits(0b00, 2); break;
        case 1: l.append_bits(0b01, 2); break;
        case -1: l.append_bits(0b11, 2); break;
        default: throw std::logic_error("pack_label: |next| > 1");
    }

    // table: [M] then wc fixed-width entries, content right-aligned
    std::vector<BitString> entries(h.wc[u]);
    uint32_t m = 0;
    for (uint32_t j = 0; j < h.wc[u]; ++j) {
        approx_pack(entries[j], w.a_codes[w.a_off[u] + j]);
        m = std::max(m, entries[j].size());
    }
    gamma_encode(l, m);
    for (const BitString& e : entries) {
        l.append_bits(0, m - e.size());
        l.append(e);
    }

    l.append(wlsb(id, w.k[u]));
    return l;
}

}  // namespace

TreeLabeling encode_tree(const RootedTree& t) {
    TreeLabeling enc;
    enc.h = decompose(t);
    enc.w = assign_weights(t, enc.h);
    enc.id = assign_ids(t, enc.h, enc.w);
    enc.label.assign(t.n, BitString{});
    for (uint32_t u = 0; u < t.n; ++u)
        if (t.real[u]) enc.label[u] = pack_label(u, enc.h, enc.w, enc.id[u]);
    return enc;
}

std::vector<BitString> encode_labels(const RootedTree& t) {
    return encode_tree(t).label;
}

std::optional<uint64_t> TreeLabel::a(uint32_t i) const {
    if (!valid || i > wc) return std::nullopt;
    if (i == 0) return 0;
    uint32_t start = table_start + entry_width * (i - 1);
    uint32_t end = start + entry_width;
    auto up = approx_unpack(bits, start, end);
    if (!up || up->next != end) return std::nullopt;
    return up->code.value();
}

TreeLabel parse_label(const BitString& s) {
    TreeLabel p;
    p.bits = s;
    auto g = gamma_decode(s, 0);
    if (!g || g->value == 0 || g->value - 1 > 62) return p;
    p.k = static_cast<uint32_t>(g->value - 1);
    g = gamma_decode(s, g->next);
    if (!g || g->value == 0 || g->value > 63) return p;
    p.wc = static_cast<uint32_t>(g->value);
    g = gamma_decode(s, g->next);
    if (!g || g->value == 0) return p;
    p.rld = static_cast<uint32_t>(g->value - 1);
    g = gamma_decode(s, g->next);
    if (!g || g->value == 0 || g->value > 63) return p;
    p.gamma = static_cast<uint32_t>(g->value);
    uint32_t pos = g->next;
    if (pos + 4 > s.size()) return p;
    p.apex = s.bit(pos);
    p.leaf = s.bit(pos + 1);
    uint32_t nb = static_cast<uint32_t>(s.read_bits(pos + 2, 2));
    if (nb == 0b10) return p;  // reserved-invalid
    p.next = nb == 0b00 ? 0 : nb == 0b01 ? 1 : -1;
    pos += 4;
    g = gamma_decode(s, pos);
    if (!g || g->value == 0 || g->value > BitString::capacity) return p;
    p.entry_width = static_cast<uint32_t>(g->value);
    p.table_start = g->next;
    uint64_t table_end = uint64_t(p.table_start) + uint64_t(p.entry_width) * p.wc;
    if (table_end > s.size()) return p;
    uint32_t id_bits = s.size() - static_cast<uint32_t>(table_end);
    if (id_bits + p.k > 63) return p;
    p.id = s.read_bits(static_cast<uint32_t>(table_end), id_bits) << p.k;
    p.valid = true;
    return p;
}

namespace {

// Lemma-8 conditions for "u is the parent of v".
bool is_parent(const TreeLabel& u, const TreeLabel& v) {
    using u128 = unsigned __int128;
    // heavy-child branch
    if (!v.apex && !u.leaf) {
        int kk = static_cast<int>(u.k) + u.next;
        if (kk >= 0) {
            auto a_wc = u.a(u.wc);
            if (a_wc) {
                u128 lw = u128(1) + *a_wc;
                u128 start = u128(u.id) + lw;
                u128 mask = (u128(1) << kk) - 1;
                u128 aligned = start & ~mask;
                if (aligned != start) aligned += u128(1) << kk;
                if (aligned == u128(v.id)) return true;
            }
        }
    }
    // apex branch
    if (v.apex && v.wc <= u.wc) {
        auto lo = u.a(v.wc - 1);
        auto hi = u.a(v.wc);
        if (lo && hi) {
            u128 vid = v.id;
            if (vid > u128(u.id) + *lo && vid <= u128(u.id) + *hi) {
                if (v.wc < u.wc) return v.rld == 0;
                return v.rld == u.rld + 1;
            }
        }
    }
    return false;
}

}  // namespace

bool decode_adjacent(const BitString& l1, const BitString& l2) {
    if (l1 == l2) return false;
    TreeLabel a = parse_label(l1);
    TreeLabel b = parse_label(l2);
    if (!a.valid || !b.valid) return false;
    return is_parent(a, b) || is_parent(b, a);
}

SchemeStats scheme_stats(const RootedTree& t, const TreeLabeling& enc) {
    SchemeStats st;
    uint64_t total_bits = 0;
    for (uint32_t u = 0; u < t.n; ++u) {
        if (!t.real[u]) continue;
        ++st.n;
        uint32_t bits = enc.label[u].size();
        st.max_label_bits = std::max(st.max_label_bits, bits);
        total_bits += bits;
        st.max_id = std::max(st.max_id, enc.id[u]);
        ++st.wc_census[enc.h.wc[u]];
        if (enc.h.apex[u]) {
            double ratio = double(enc.w.pw[u]) / double(enc.h.size[u]);
            st.max_pw_ratio = std::max(st.max_pw_ratio, ratio);
        }
    }
    st.mean_label_bits = st.n ? double(total_bits) / st.n : 0.0;
    st.excess = static_cast<int32_t>(st.max_label_bits) -
                static_cast<int32_t>(st.n ? ceil_lg(st.n) : 0);
    st.root_pw = enc.w.pw[t.root];
    return st;
}

}  // namespace labelforest
