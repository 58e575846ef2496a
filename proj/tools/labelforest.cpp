#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "labelforest/caterpillar.hpp"
#include "labelforest/forest.hpp"
#include "labelforest/generate.hpp"
#include "labelforest/hld.hpp"
#include "labelforest/tree_scheme.hpp"
#include "labelforest/universal.hpp"
#include "labelforest/verify.hpp"

using namespace labelforest;

namespace {

Forest read_forest(const std::string& path) {
    if (path.empty() || path == "-") return parse_forest(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_forest(in);
}

// Connected components as index maps (component-local index -> global node).
std::vector<std::vector<uint32_t>> components(const Forest& f) {
    uint32_t n = f.node_count();
    std::vector<int32_t> comp(n, -1);
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<uint32_t> nodes{s};
        comp[s] = static_cast<int32_t>(out.size());
        for (size_t i = 0; i < nodes.size(); ++i)
            for (uint32_t w : f.neighbors(nodes[i]))
                if (comp[w] < 0) {
                    comp[w] = static_cast<int32_t>(out.size());
                    nodes.push_back(w);
                }
        out.push_back(std::move(nodes));
    }
    return out;
}

int cmd_encode(const std::string& input, Scheme scheme) {
    Forest f = read_forest(input);
    if (scheme == Scheme::tree) {
        RootedTree t = attach_imaginary_root(f);
        TreeLabeling enc = encode_tree(t);
        for (uint32_t u = 0; u < f.node_count(); ++u)
            std::cout << u << "\t" << enc.label[u].to_string() << "\n";
        SchemeStats st = scheme_stats(t, enc);
        std::cout << "# stats:\n"
                  << "# n\t" << st.n << "\n"
                  << "# max_label_bits\t" << st.max_label_bits << "\n"
                  << "# mean_label_bits\t" << st.mean_label_bits << "\n"
                  << "# excess\t" << st.excess << "\n"
                  << "# max_id\t" << st.max_id << "\n"
                  << "# root_pw\t" << st.root_pw << "\n"
                  << "# max_pw_ratio\t" << st.max_pw_ratio << "\n";
        for (auto [wc, cnt] : st.wc_census)
            std::cout << "# wc_census\t" << wc << "\t" << cnt << "\n";
        return 0;
    }
    // Caterpillar forests are labeled tree by tree.
    std::vector<std::string> lines(f.node_count());
    for (const auto& nodes : components(f)) {
        std::vector<uint32_t> back(f.node_count(), 0);
        std::vector<uint32_t> sorted = nodes;
        std::sort(sorted.begin(), sorted.end());
        for (uint32_t i = 0; i < sorted.size(); ++i) back[sorted[i]] = i;
        std::vector<Forest::Edge> edges;
        for (auto [a, b] : f.edges())
            if (std::binary_search(sorted.begin(), sorted.end(), a))
                if (std::binary_search(sorted.begin(), sorted.end(), b))
                    edges.push_back({back[a], back[b]});
        Forest sub(static_cast<uint32_t>(sorted.size()), std::move(edges));
        CatLabels cat = cat_encode(sub);
        for (uint32_t i = 0; i < sorted.size(); ++i)
            lines[sorted[i]] = cat.label[i].to_string();
    }
    for (uint32_t u = 0; u < f.node_count(); ++u) std::cout << u << "\t" << lines[u] << "\n";
    return 0;
}

int cmd_stats(const std::string& input) {
    Forest f = read_forest(input);
    RootedTree t = attach_imaginary_root(f);
    HldInfo h = decompose(t);
    std::cout << "# node\tsize\tlight_size\tapex\tgamma\twc\trld\n";
    for (uint32_t u = 0; u < f.node_count(); ++u)
        std::cout << u << "\t" << h.size[u] << "\t" << h.light_size[u] << "\t"
                  << int(h.apex[u]) << "\t" << h.gamma[u] << "\t" << h.wc[u] << "\t"
                  << h.rld[u] << "\n";
    return 0;
}

int cmd_bench(std::vector<uint32_t> sizes, Family family, uint64_t seed, uint32_t size_cap) {
    std::cout << "# n\tencode_seconds\tdecode_ns_per_pair\tmax_label_bits\tmax_id\t"
                 "approx_label_bytes\n";
    for (uint32_t n : sizes) {
        if (n > size_cap) {
            std::cerr << "size " << n << " exceeds --size-cap " << size_cap << "\n";
            return 2;
        }
        RootedTree t = attach_imaginary_root(gen_tree({family, n, seed}));
        double enc_total = 0;
        TreeLabeling enc;
        constexpr int runs = 3;
        for (int r = 0; r < runs; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            enc = encode_tree(t);
            enc_total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                             .count();
        }
        SchemeStats st = scheme_stats(t, enc);

        std::mt19937_64 rng(seed ^ 0xbe9c);
        constexpr uint64_t pairs = 1000000;
        std::vector<std::pair<const BitString*, const BitString*>> q;
        q.reserve(pairs);
        for (uint64_t i = 0; i < pairs; ++i)
            q.push_back({&enc.label[rng() % n], &enc.label[rng() % n]});
        auto t0 = std::chrono::steady_clock::now();
        uint64_t acc = 0;
        for (auto [x, y] : q) acc += decode_adjacent(*x, *y);
        double dec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        volatile uint64_t sink = acc;
        (void)sink;

        std::cout << n << "\t" << enc_total / runs << "\t" << dec / double(pairs) * 1e9
                  << "\t" << st.max_label_bits << "\t" << st.max_id << "\t"
                  << uint64_t(t.n) * sizeof(BitString) << "\n";
    }
    return 0;
}

int cmd_arbor(const std::string& input, const std::string& parts_path) {
    // Graph edges "u v" (or "u v part" when --parts points at the same data);
    // first line: n.
    std::istream* in = &std::cin;
    std::ifstream file;
    std::string path = !parts_path.empty() ? parts_path : input;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "cannot open " << path << "\n";
            return 2;
        }
        in = &file;
    }
    uint32_t n = 0;
    if (!(*in >> n)) {
        std::cerr << "missing node count\n";
        return 2;
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<uint32_t> part;
    std::string line;
    std::getline(*in, line);
    while (std::getline(*in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        uint32_t u, v, p;
        if (!(ls >> u >> v)) {
            std::cerr << "malformed edge line: " << line << "\n";
            return 2;
        }
        edges.push_back({u, v});
        if (!parts_path.empty()) {
            if (!(ls >> p)) {
                std::cerr << "missing part index: " << line << "\n";
                return 2;
            }
            part.push_back(p);
        }
    }
    SimpleGraph g(n, std::move(edges));
    ForestPartition fp;
    if (!parts_path.empty()) {
        fp.part = std::move(part);
        for (uint32_t p : fp.part) fp.parts = std::max(fp.parts, p + 1);
        validate_partition(g, fp);
    } else {
        fp = peel_forests(g);
    }
    std::cout << "# parts\t" << fp.parts << "\n";
    auto labels = composite_encode(g, fp);
    for (uint32_t u = 0; u < n; ++u) std::cout << u << "\t" << labels[u].to_string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjacency labeling for forests"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a tree instance");
    std::string gen_family = "uniform-prufer";
    uint32_t gen_n = 10;
    uint64_t gen_seed = 1;
    gen->add_option("--family", gen_family, "path|star|caterpillar|binary|uniform-prufer|random-recursive|broom");
    gen->add_option("--n", gen_n, "node count")->required();
    gen->add_option("--seed", gen_seed, "rng seed");

    auto* enc = app.add_subcommand("encode", "label a forest");
    std::string enc_scheme = "tree", enc_input;
    enc->add_option("--scheme", enc_scheme, "tree|caterpillar");
    enc->add_option("input", enc_input, "forest file ('-' = stdin)");

    auto* dec = app.add_subcommand("decode-pair", "decode adjacency from two labels");
    std::string dec_scheme = "tree", dec_a, dec_b;
    dec->add_option("--scheme", dec_scheme, "tree|caterpillar|composite");
    dec->add_option("label1", dec_a)->required();
    dec->add_option("label2", dec_b)->required();

    auto* ver = app.add_subcommand("verify", "run the verification suites");
    std::string ver_config;
    ver->add_option("--config", ver_config, "key=value config file");

    auto* sta = app.add_subcommand("stats", "per-node decomposition stats");
    std::string sta_input;
    sta->add_option("input", sta_input, "forest file ('-' = stdin)");

    auto* uni = app.add_subcommand("universal", "build the induced-universal graph");
    uint32_t uni_n = 8;
    std::string uni_scheme = "tree";
    bool uni_edges = false;
    uni->add_option("--n", uni_n, "max tree size (<= 10)");
    uni->add_option("--scheme", uni_scheme, "tree|caterpillar");
    uni->add_flag("--edges", uni_edges, "also materialize edges (quadratic)");

    auto* arb = app.add_subcommand("arbor", "composite labels for arboricity-k graphs");
    std::string arb_input, arb_parts;
    arb->add_option("input", arb_input, "graph file: n, then 'u v' lines");
    arb->add_option("--parts", arb_parts, "partition file: n, then 'u v part' lines");

    auto* ben = app.add_subcommand("bench", "encode/decode timing");
    std::string ben_sizes = "100000,200000,400000", ben_family = "uniform-prufer";
    uint64_t ben_seed = 1;
    uint32_t ben_cap = 10000000;
    ben->add_option("--sizes", ben_sizes, "comma-separated ascending sizes");
    ben->add_option("--family", ben_family, "tree family");
    ben->add_option("--seed", ben_seed, "rng seed");
    ben->add_option("--size-cap", ben_cap, "refuse sizes above this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            serialize_forest(gen_tree({family_from_string(gen_family), gen_n, gen_seed}),
                             std::cout);
            return 0;
        }
        if (enc->parsed()) return cmd_encode(enc_input, scheme_from_string(enc_scheme));
        if (dec->parsed()) {
            BitString a = BitString::from_string(dec_a);
            BitString b = BitString::from_string(dec_b);
            bool adj = dec_scheme == "composite" ? composite_decode(a, b)
                       : scheme_from_string(dec_scheme) == Scheme::tree
                           ? decode_adjacent(a, b)
                           : cat_decode(a, b);
            std::cout << (adj ? "true" : "false") << "\n";
            return 0;
        }
        if (ver->parsed()) {
            verify::VerifyConfig cfg;
            if (!ver_config.empty()) {
                std::ifstream in(ver_config);
                if (!in) {
                    std::cerr << "cannot open " << ver_config << "\n";
                    return 2;
                }
                cfg = verify::parse_config(in);
            }
            verify::CheckSet cs = verify::run_verify(cfg, std::cout);
            return cs.total_violations() == 0 ? 0 : 1;
        }
        if (sta->parsed()) return cmd_stats(sta_input);
        if (uni->parsed()) {
            UniversalGraph u = build_universal(uni_n, scheme_from_string(uni_scheme));
            std::cout << "# vertices\t" << u.vertices.size() << "\n";
            for (const auto& v : u.vertices) std::cout << v.to_string() << "\n";
            if (uni_edges) {
                auto es = u.edges();
                std::cout << "# edges\t" << es.size() << "\n";
                for (auto [i, j] : es) std::cout << i << "\t" << j << "\n";
            }
            return 0;
        }
        if (arb->parsed()) return cmd_arbor(arb_input, arb_parts);
        if (ben->parsed()) {
            std::vector<uint32_t> sizes;
            std::istringstream ss(ben_sizes);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) sizes.push_back(static_cast<uint32_t>(std::stoul(tok)));
            for (size_t i = 0; i + 1 < sizes.size(); ++i)
                if (sizes[i] > sizes[i + 1]) {
                    std::cerr << "sizes must be ascending\n";
                    return 2;
                }
            return cmd_bench(sizes, family_from_string(ben_family), ben_seed, ben_cap);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
