#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "oriray/arrows.hpp"
#include "oriray/bounds.hpp"
#include "oriray/catalog.hpp"
#include "oriray/chromatic.hpp"
#include "oriray/constructions.hpp"
#include "oriray/embedder.hpp"
#include "oriray/errors.hpp"
#include "oriray/format.hpp"
#include "oriray/rng.hpp"

namespace oriray::cli {

using json = nlohmann::ordered_json;

namespace {

std::string fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Common {
    uint64_t seed = 0;
    int threads = 1;
    int cap_edges = kOrientationEnumCap;
    int cap_vertices = kCanonicalCap;
    std::string format = "text";
    std::map<std::string, std::string> input_digests;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "PRNG seed for randomized runs");
        cmd->add_option("--threads", threads, "worker threads (default: ORIRAY_THREADS or 1)");
        cmd->add_option("--cap-edges", cap_edges, "orientation enumeration cap");
        cmd->add_option("--cap-vertices", cap_vertices, "exact canonicalization cap");
        cmd->add_option("--format", format, "text or json where applicable");
        if (const char* env = std::getenv("ORIRAY_THREADS")) {
            int t = std::atoi(env);
            if (t > 0) threads = t;
        }
    }

    ArrowOptions arrow_options() const {
        ArrowOptions o;
        o.enum_cap = cap_edges;
        o.threads = threads;
        return o;
    }

    json manifest(const std::string& subcommand) const {
        json m;
        m["subcommand"] = subcommand;
        m["inputs"] = json::object();
        for (const auto& [k, v] : input_digests) m["inputs"][k] = v;
        m["seed"] = seed;
        m["caps"] = {{"edges", cap_edges},
                     {"vertices", cap_vertices},
                     {"atlas", kAtlasCap},
                     {"trees", kTreeEnumCap},
                     {"chromatic", kChromaticCap}};
        m["version"] = kVersion;
        return m;
    }
};

bool looks_like_builder(const std::string& tok) {
    if (tok == "petersen") return true;
    if (tok.empty()) return false;
    char c = tok[0];
    if (c != 'K' && c != 'C' && c != 'P') return false;
    return tok.find('.') == std::string::npos;
}

Graph parse_single_builder(const std::string& tok) {
    if (tok == "petersen") {
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        return g;
    }
    char kind = tok[0];
    int m = 0;
    try {
        size_t used = 0;
        m = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("bad graph spec token '" + tok + "'");
    }
    switch (kind) {
    case 'K': return complete_graph(m);
    case 'C': return cycle_graph(m);
    case 'P': return path_graph(m);
    }
    throw ParseError("bad graph spec token '" + tok + "'");
}

/// Accepts builder expressions (K4, C5, P3, petersen, products like C5xK6)
/// or file paths (.g6 graph6, .el edge list; otherwise sniffed).
Graph parse_graph_spec(const std::string& spec, Common& common, const std::string& label) {
    if (looks_like_builder(spec)) {
        common.input_digests[label] = fnv1a64(spec);
        // split on 'x' and fold the rectangular product left to right
        std::vector<std::string> parts;
        std::string cur;
        for (char c : spec) {
            if (c == 'x') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        parts.push_back(cur);
        Graph g = parse_single_builder(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) g = rectangular_product(g, parse_single_builder(parts[i]));
        return g;
    }
    std::string data = read_file(spec);
    common.input_digests[label] = fnv1a64(data);
    if (spec.size() >= 3 && spec.substr(spec.size() - 3) == ".g6") return read_graph6(data);
    if (spec.size() >= 3 && spec.substr(spec.size() - 3) == ".el") return read_edge_list(data);
    try {
        return read_graph6(data);
    } catch (const ParseError&) {
        return read_edge_list(data);
    }
}

/// "I<n>", "T<n>" or an arc-list file holding one digraph.
std::vector<Digraph> parse_family_spec(const std::string& spec, Common& common, const std::string& label) {
    if (spec.size() >= 2 && (spec[0] == 'I' || spec[0] == 'T') && isdigit((unsigned char)spec[1])) {
        common.input_digests[label] = fnv1a64(spec);
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(spec.substr(1), &used);
            if (used != spec.size() - 1) throw std::invalid_argument("");
        } catch (...) {
            throw ParseError("bad family spec token '" + spec + "'");
        }
        if (spec[0] == 'I') return {directed_path(n)};
        return enumerate_oriented_trees(n);
    }
    std::string data = read_file(spec);
    common.input_digests[label] = fnv1a64(data);
    return {read_arc_list(data)};
}

json digraph_to_json(const Digraph& d) {
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    return {{"n", d.vertex_count()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const json& j) {
    Digraph d(j.at("n").get<int>());
    for (const auto& arc : j.at("arcs")) d.add_arc(arc.at(0).get<int>(), arc.at(1).get<int>());
    return d;
}

json certificate_to_json(const EmbeddingCertificate& cert) {
    json j;
    j["pattern"] = digraph_to_json(cert.pattern);
    j["host_graph6"] = write_graph6(cert.host.host);
    j["orientation_bits"] = bits_to_hex(cert.host.bits, cert.host.host.edge_count());
    j["map"] = cert.map;
    j["variant"] = to_string(cert.variant);
    return j;
}

EmbeddingCertificate certificate_from_json(const json& j) {
    EmbeddingCertificate cert;
    cert.pattern = digraph_from_json(j.at("pattern"));
    Graph host = read_graph6(j.at("host_graph6").get<std::string>());
    cert.host = Orientation(host, hex_to_bits(j.at("orientation_bits").get<std::string>(), host.edge_count()));
    cert.map = j.at("map").get<std::vector<int>>();
    cert.variant = variant_from_string(j.at("variant").get<std::string>());
    return cert;
}

json bound_report_to_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    if (!r.log_scale) j["value"] = r.value;
    j["log_value"] = double(r.log_value);
    j["log_scale"] = r.log_scale;
    j["certified"] = r.certified;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json feasibility_to_json(const FeasibilityReport& r, EmbedMode mode) {
    json conds = json::array();
    for (int i = 0; i < 4; ++i) {
        json c;
        c["condition"] = (mode == EmbedMode::plain ? std::to_string(i + 1) + "'" : std::to_string(i + 1));
        c["ok"] = r.cond[i];
        c["lhs_log"] = double(r.lhs_log[i]);
        c["rhs_log"] = double(r.rhs_log[i]);
        conds.push_back(c);
    }
    return {{"all", r.all()}, {"conditions", conds}};
}

json params_to_json(const RandomModelParameters& p) {
    json j;
    j["n"] = p.n;
    j["mode"] = p.mode == EmbedMode::isometric ? "isometric" : "plain";
    j["c"] = p.c;
    j["log_N"] = double(p.log_N);
    if (p.exact_N) j["N"] = *p.exact_N;
    j["log_p"] = double(p.log_p);
    j["log_C"] = double(p.log_C);
    j["log_pN"] = double(p.log_pN);
    return j;
}

std::vector<double> parse_csv_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw ParseError("bad numeric token '" + tok + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// repro bundles: re-derive the paper's concrete values and print a table.

struct ReproRow {
    std::string name;
    std::string expected;
    std::string got;
    bool pass;
};

void repro_remark3(std::vector<ReproRow>& rows, Common& common) {
    auto add_ir = [&](const std::string& name, const std::vector<Digraph>& family, int max_n,
                      int expect_value, const Graph* expect_witness) {
        auto r = ir_search(family, max_n, common.arrow_options());
        bool pass = r.resolved && r.value == expect_value;
        std::string got = r.resolved ? std::to_string(r.value) : "unresolved";
        if (pass && expect_witness) {
            bool same = canonical_form(*r.witness) == canonical_form(*expect_witness);
            pass = same;
            got += same ? " (expected witness)" : " (different witness)";
        }
        rows.push_back({name, std::to_string(expect_value), got, pass});
    };
    add_ir("IR(I_1)=1", {directed_path(1)}, 2, 1, nullptr);
    add_ir("IR(I_2)=2", {directed_path(2)}, 3, 2, nullptr);
    Graph c5 = cycle_graph(5);
    add_ir("IR(I_3)=5=|C_5|", {directed_path(3)}, 5, 5, &c5);
    add_ir("D(T_2)=2", enumerate_oriented_trees(2), 3, 2, nullptr);
    Graph prism = rectangular_product(complete_graph(2), complete_graph(3));
    add_ir("D(T_3)=6", enumerate_oriented_trees(3), 6, 6, nullptr);
    auto prism_check = arrow_check(prism, enumerate_oriented_trees(3), Variant::isometric, common.arrow_options());
    rows.push_back({"K_2xK_3 => T_3 (witness for D(T_3)=6)", "holds over 512",
                    (prism_check.holds ? "holds over " : "fails at ") +
                        std::to_string(prism_check.orientations_checked),
                    prism_check.holds && prism_check.orientations_checked == 512});

    // Monte-Carlo demonstrations of the product upper bounds.
    auto demo = [&](const std::string& name, const Graph& base, int copies,
                    const std::vector<Digraph>& trees) {
        Graph host_g = rectangular_product(base, complete_graph(copies));
        SplitMix64 rng(common.seed ^ 0x9e3779b97f4a7c15ull);
        int ok = 0, total = 0;
        for (int t = 0; t < 50; ++t) {
            Orientation host = random_orientation(host_g, rng);
            for (const Digraph& tree : trees) {
                ++total;
                try {
                    auto cert = pigeonhole_embed(base, copies, exhaustive_sub_embedder(), host, tree);
                    if (verify_certificate(cert).valid) ++ok;
                } catch (const std::exception&) {
                }
            }
        }
        rows.push_back({name, "all certified", std::to_string(ok) + "/" + std::to_string(total), ok == total});
    };
    demo("IR(I_4)<=30=|C_5xK_6| (sampled)", c5, 6, {directed_path(4)});
    demo("D(T_4)<=42=|K_2xK_3xK_7| (sampled)", prism, 7, enumerate_oriented_trees(4));
}

void repro_remark5(std::vector<ReproRow>& rows, Common& common) {
    for (int m : {5, 7, 9}) {
        int di = ddiam(cycle_graph(m), FamilyKind::paths, common.arrow_options());
        int dt = ddiam(cycle_graph(m), FamilyKind::trees, common.arrow_options());
        rows.push_back({"ddiam_I(C_" + std::to_string(m) + ")=3", "3", std::to_string(di), di == 3});
        rows.push_back({"ddiam_T(C_" + std::to_string(m) + ")=2", "2", std::to_string(dt), dt == 2});
    }
}

void repro_tower(std::vector<ReproRow>& rows) {
    TowerFamily fam = tower_family(20);
    std::string sizes;
    for (int i = 0; i < 5; ++i) sizes += (i ? "," : "") + fam.sizes[i].to_decimal_string();
    rows.push_back({"tower sizes", "1,2,6,42,1806", sizes, sizes == "1,2,6,42,1806"});
    bool bound = true;
    for (int k = 1; k <= 20; ++k)
        if (!(fam.sizes[k - 1].plus(1) <= BigUint::pow2(uint64_t{1} << (k - 1)))) bound = false;
    rows.push_back({"a_k+1 <= 2^(2^(k-1)) for k<=20", "true", bound ? "true" : "false", bound});
}

void repro_kconst(std::vector<ReproRow>& rows) {
    auto r = minimize_k();
    bool pk = std::abs(r.k_value - 98.8249) < 1e-3;
    bool px = std::abs(r.x_star - 4.92155) < 1e-3;
    rows.push_back({"K ~ 98.8249", "98.8249+-1e-3", std::to_string(r.k_value), pk});
    rows.push_back({"x* ~ 4.92155", "4.92155+-1e-3", std::to_string(r.x_star), px});
}

void repro_ghrv(std::vector<ReproRow>& rows, Common& common) {
    int checked = 0;
    bool all = true;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto r = ghrv_check(g, common.arrow_options());
            ++checked;
            if (r.chi != r.min_longest_path) all = false;
        }
    rows.push_back({"chi = min longest path (graphs <= 4)", "18/18", std::to_string(checked) + (all ? "/18" : " mismatch"), all && checked == 18});
}

void repro_comparability(std::vector<ReproRow>& rows, Common& common) {
    int checked = 0;
    bool all = true;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            ++checked;
            bool comp = transitive_orientation(g).has_value();
            bool chord = odd_cycle_chord_check(g);
            bool small = ddiam(g, FamilyKind::paths, common.arrow_options()) <= 2;
            if (comp != chord || comp != small) all = false;
        }
    rows.push_back({"ddiam_I<=2 <=> comparability <=> chord check (<=5)", "52 graphs agree",
                    std::to_string(checked) + (all ? " agree" : " disagree"), all});
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"oriray: isometric Ramsey relations for oriented graphs"};
    app.require_subcommand(1);
    Common common;

    // ---- dist
    auto* dist_cmd = app.add_subcommand("dist", "all-pairs hop distances of a graph");
    std::string dist_graph;
    dist_cmd->add_option("--graph", dist_graph, "graph spec")->required();
    common.attach(dist_cmd);

    // ---- product
    auto* product_cmd = app.add_subcommand("product", "rectangular product of two graphs");
    std::string prod_a, prod_b;
    product_cmd->add_option("--left", prod_a)->required();
    product_cmd->add_option("--right", prod_b)->required();
    common.attach(product_cmd);

    // ---- trees
    auto* trees_cmd = app.add_subcommand("trees", "oriented trees on n vertices up to isomorphism");
    int trees_n = 3;
    trees_cmd->add_option("--n", trees_n)->required();
    common.attach(trees_cmd);

    // ---- graphs-atlas
    auto* atlas_cmd = app.add_subcommand("graphs-atlas", "graphs on n vertices up to isomorphism");
    int atlas_n = 4;
    atlas_cmd->add_option("--n", atlas_n)->required();
    common.attach(atlas_cmd);

    // ---- gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "two-layer doubling of an acyclic digraph");
    std::string gamma_spec;
    int gamma_root = 0;
    gamma_cmd->add_option("--digraph", gamma_spec, "I<n> or an arc-list file")->required();
    gamma_cmd->add_option("--root", gamma_root);
    common.attach(gamma_cmd);

    // ---- orient-enum
    auto* orient_cmd = app.add_subcommand("orient-enum", "enumerate orientations of a graph");
    std::string orient_graph;
    std::string orient_prefix;
    uint64_t orient_limit = 0;
    orient_cmd->add_option("--graph", orient_graph)->required();
    orient_cmd->add_option("--prefix", orient_prefix, "fixed leading bits, e.g. 010");
    orient_cmd->add_option("--limit", orient_limit, "emit at most this many");
    common.attach(orient_cmd);

    // ---- arrow
    auto* arrow_cmd = app.add_subcommand("arrow", "exhaustive arrow check G => family");
    std::string arrow_graph, arrow_family, arrow_variant = "isometric";
    arrow_cmd->add_option("--graph", arrow_graph)->required();
    arrow_cmd->add_option("--family", arrow_family, "I<n>, T<n> or arc-list file")->required();
    arrow_cmd->add_option("--variant", arrow_variant, "weak | oriented | isometric");
    common.attach(arrow_cmd);

    // ---- ddiam
    auto* ddiam_cmd = app.add_subcommand("ddiam", "largest n with G => I_n or G => T_n");
    std::string ddiam_graph, ddiam_kind = "paths";
    ddiam_cmd->add_option("--graph", ddiam_graph)->required();
    ddiam_cmd->add_option("--family", ddiam_kind, "paths | trees");
    common.attach(ddiam_cmd);

    // ---- ir-search
    auto* ir_cmd = app.add_subcommand("ir-search", "smallest graph isometrically arrowing a family");
    std::string ir_family;
    int ir_max_n = 5;
    ir_cmd->add_option("--family", ir_family)->required();
    ir_cmd->add_option("--max-n", ir_max_n)->required();
    common.attach(ir_cmd);

    // ---- ghrv
    auto* ghrv_cmd = app.add_subcommand("ghrv", "chi vs min over orientations of longest directed path");
    std::string ghrv_graph;
    ghrv_cmd->add_option("--graph", ghrv_graph)->required();
    common.attach(ghrv_cmd);

    // ---- comparability
    auto* comp_cmd = app.add_subcommand("comparability", "transitive orientation and odd-walk chord check");
    std::string comp_graph;
    comp_cmd->add_option("--graph", comp_graph)->required();
    common.attach(comp_cmd);

    // ---- bfs-orient
    auto* bfs_cmd = app.add_subcommand("bfs-orient", "layer-parity orientation from a root");
    std::string bfs_graph;
    int bfs_root = 0;
    bfs_cmd->add_option("--graph", bfs_graph)->required();
    bfs_cmd->add_option("--root", bfs_root);
    common.attach(bfs_cmd);

    // ---- tower
    auto* tower_cmd = app.add_subcommand("tower", "recursive product family sizes and graphs");
    int tower_n = 4;
    tower_cmd->add_option("--n", tower_n)->required();
    common.attach(tower_cmd);

    // ---- pigeonhole-embed
    auto* pig_cmd = app.add_subcommand("pigeonhole-embed", "product-step embedding of an oriented tree");
    std::string pig_g, pig_bits, pig_tree;
    int pig_copies = 0, pig_tree_n = 4, pig_tree_index = 0;
    pig_cmd->add_option("--g", pig_g, "base graph spec")->required();
    pig_cmd->add_option("--copies", pig_copies, "number of K copies (default |g|+1)");
    pig_cmd->add_option("--tree", pig_tree, "pattern spec like I4 (overrides --tree-n/--tree-index)");
    pig_cmd->add_option("--tree-n", pig_tree_n);
    pig_cmd->add_option("--tree-index", pig_tree_index, "index into the oriented tree catalog");
    pig_cmd->add_option("--bits", pig_bits, "host orientation bits (hex); default: seeded random");
    common.attach(pig_cmd);

    // ---- pikh-check
    auto* pikh_cmd = app.add_subcommand("pikh-check", "embedding-lemma conditions on a concrete graph");
    std::string pikh_graph, pikh_w, pikh_d, pikh_mode = "isometric";
    int pikh_n = 3, pikh_samples = 0;
    pikh_cmd->add_option("--graph", pikh_graph)->required();
    pikh_cmd->add_option("--n", pikh_n, "tree size")->required();
    pikh_cmd->add_option("--w", pikh_w, "comma list w_1..w_{n-1}")->required();
    pikh_cmd->add_option("--d", pikh_d, "comma list d_1..d_{n-1}")->required();
    pikh_cmd->add_option("--mode", pikh_mode, "isometric | plain");
    pikh_cmd->add_option("--samples", pikh_samples, "sampled falsifier trials for condition 2 (0: exact)");
    common.attach(pikh_cmd);

    // ---- greedy-embed
    auto* greedy_cmd = app.add_subcommand("greedy-embed", "inductive tree embedding on one orientation");
    std::string greedy_graph, greedy_bits, greedy_w, greedy_d, greedy_mode = "isometric";
    int greedy_tree_n = 3, greedy_tree_index = 0;
    greedy_cmd->add_option("--graph", greedy_graph)->required();
    greedy_cmd->add_option("--bits", greedy_bits, "orientation bits (hex)")->required();
    greedy_cmd->add_option("--tree-n", greedy_tree_n)->required();
    greedy_cmd->add_option("--tree-index", greedy_tree_index);
    greedy_cmd->add_option("--w", greedy_w)->required();
    greedy_cmd->add_option("--d", greedy_d)->required();
    greedy_cmd->add_option("--mode", greedy_mode);
    common.attach(greedy_cmd);

    // ---- bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "numeric bound calculators");
    bounds_cmd->require_subcommand(1);
    auto* kconst_cmd = bounds_cmd->add_subcommand("k-const", "minimize 16x^2/(1-x+x ln x)");
    common.attach(kconst_cmd);
    auto* bpikh_cmd = bounds_cmd->add_subcommand("pikh", "n^{2n+o(n)} recipe parameters + feasibility");
    int bpikh_n = 1000;
    double bpikh_delta = 0, bpikh_c = 0, bpikh_eps = 0.5;
    int bpikh_scan = 0;
    bpikh_cmd->add_option("--n", bpikh_n)->required();
    bpikh_cmd->add_option("--delta", bpikh_delta);
    bpikh_cmd->add_option("--c", bpikh_c);
    bpikh_cmd->add_option("--eps", bpikh_eps, "used to pick (delta, c) when not given");
    bpikh_cmd->add_option("--scan-max", bpikh_scan, "also scan feasibility thresholds up to this n");
    common.attach(bpikh_cmd);
    auto* bklr_cmd = bounds_cmd->add_subcommand("klr", "n^4 ln n recipe parameters + feasibility");
    long long bklr_n = 100000;
    double bklr_eps = 0.1;
    bklr_cmd->add_option("--n", bklr_n)->required();
    bklr_cmd->add_option("--eps", bklr_eps);
    common.attach(bklr_cmd);
    auto* berdos_cmd = bounds_cmd->add_subcommand("erdos", "chromatic-girth extremal bounds");
    long long berdos_k = 3, berdos_g = 5;
    double berdos_spencer = 0;
    berdos_cmd->add_option("--k", berdos_k)->required();
    berdos_cmd->add_option("--g", berdos_g)->required();
    berdos_cmd->add_option("--spencer-c", berdos_spencer, "also report the uncertified C*k form");
    common.attach(berdos_cmd);
    auto* bir_cmd = bounds_cmd->add_subcommand("ir", "small-n bound table");
    int bir_n = 4;
    bir_cmd->add_option("--n", bir_n)->required();
    common.attach(bir_cmd);

    // ---- verify-cert
    auto* verify_cmd = app.add_subcommand("verify-cert", "re-check a certificate file");
    std::string verify_file;
    verify_cmd->add_option("file", verify_file)->required();
    common.attach(verify_cmd);

    // ---- repro
    auto* repro_cmd = app.add_subcommand("repro", "re-derive the paper's concrete values");
    std::string repro_target = "remark-3";
    repro_cmd->add_option("target", repro_target, "remark-3 | remark-5 | tower | k-const | ghrv | comparability | all");
    common.attach(repro_cmd);

    try {
        std::vector<const char*> argv;
        argv.push_back("oriray");
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(int(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << e.what() << "\n";
            return 1;
        }

        if (*dist_cmd) {
            Graph g = parse_graph_spec(dist_graph, common, "graph");
            auto dm = distance_matrix(g);
            json rows = json::array();
            for (int u = 0; u < g.vertex_count(); ++u) {
                json row = json::array();
                for (int v = 0; v < g.vertex_count(); ++v)
                    row.push_back(is_infinite(dm.at(u, v)) ? json(nullptr) : json(dm.at(u, v)));
                rows.push_back(row);
            }
            json j;
            j["manifest"] = common.manifest("dist");
            j["n"] = g.vertex_count();
            j["distances"] = rows;
            out << j.dump() << "\n";
            return 0;
        }

        if (*product_cmd) {
            Graph a = parse_graph_spec(prod_a, common, "left");
            Graph b = parse_graph_spec(prod_b, common, "right");
            Graph p = rectangular_product(a, b);
            json j;
            j["manifest"] = common.manifest("product");
            j["n"] = p.vertex_count();
            j["m"] = p.edge_count();
            j["graph6"] = write_graph6(p);
            out << j.dump() << "\n";
            return 0;
        }

        if (*trees_cmd) {
            common.input_digests["n"] = fnv1a64(std::to_string(trees_n));
            auto trees = enumerate_oriented_trees(trees_n);
            if (common.format == "json") {
                json members = json::array();
                for (const auto& t : trees) members.push_back(arc_line(t));
                json j;
                j["manifest"] = common.manifest("trees");
                j["n"] = trees_n;
                j["count"] = trees.size();
                j["members"] = members;
                out << j.dump() << "\n";
            } else {
                for (const auto& t : trees) out << arc_line(t) << "\n";
                out << "count " << trees.size() << "\n";
            }
            return 0;
        }

        if (*atlas_cmd) {
            common.input_digests["n"] = fnv1a64(std::to_string(atlas_n));
            auto atlas = enumerate_graphs(atlas_n);
            if (common.format == "json") {
                json members = json::array();
                for (const auto& g : atlas) members.push_back(write_graph6(g));
                json j;
                j["manifest"] = common.manifest("graphs-atlas");
                j["n"] = atlas_n;
                j["count"] = atlas.size();
                j["members"] = members;
                out << j.dump() << "\n";
            } else {
                for (const auto& g : atlas) out << write_graph6(g) << "\n";
                out << "count " << atlas.size() << "\n";
            }
            return 0;
        }

        if (*gamma_cmd) {
            Digraph h;
            if (gamma_spec.size() >= 2 && gamma_spec[0] == 'I' && isdigit((unsigned char)gamma_spec[1])) {
                common.input_digests["digraph"] = fnv1a64(gamma_spec);
                h = directed_path(std::stoi(gamma_spec.substr(1)));
            } else {
                std::string data = read_file(gamma_spec);
                common.input_digests["digraph"] = fnv1a64(data);
                h = read_arc_list(data);
            }
            Digraph g = gamma_construction(h, gamma_root);
            json j;
            j["manifest"] = common.manifest("gamma");
            j["digraph"] = digraph_to_json(g);
            j["acyclic"] = is_acyclic(g);
            j["connected"] = is_connected(g.shadow());
            out << j.dump() << "\n";
            return 0;
        }

        if (*orient_cmd) {
            Graph g = parse_graph_spec(orient_graph, common, "graph");
            std::optional<OrientationPrefix> prefix;
            if (!orient_prefix.empty()) {
                OrientationPrefix p;
                p.length = int(orient_prefix.size());
                for (char c : orient_prefix) {
                    if (c != '0' && c != '1') throw ParseError("bad prefix bit '" + std::string(1, c) + "'");
                    p.bits = (p.bits << 1) | uint64_t(c - '0');
                }
                prefix = p;
            }
            uint64_t count = 0;
            enumerate_orientations(g, [&](const Orientation& o) {
                ++count;
                out << bits_to_hex(o.bits, g.edge_count()) << "\n";
                return orient_limit == 0 || count < orient_limit;
            }, prefix, common.cap_edges);
            out << "count " << count << "\n";
            return 0;
        }

        if (*arrow_cmd) {
            Graph g = parse_graph_spec(arrow_graph, common, "graph");
            auto family = parse_family_spec(arrow_family, common, "family");
            auto verdict = arrow_check(g, family, variant_from_string(arrow_variant), common.arrow_options());
            json j;
            j["manifest"] = common.manifest("arrow");
            j["holds"] = verdict.holds;
            j["orientations_checked"] = verdict.orientations_checked;
            if (verdict.counterexample)
                j["counterexample_bits"] = bits_to_hex(verdict.counterexample->bits, g.edge_count());
            out << j.dump() << "\n";
            return 0;
        }

        if (*ddiam_cmd) {
            Graph g = parse_graph_spec(ddiam_graph, common, "graph");
            FamilyKind kind;
            if (ddiam_kind == "paths")
                kind = FamilyKind::paths;
            else if (ddiam_kind == "trees")
                kind = FamilyKind::trees;
            else
                throw ParseError("bad family kind '" + ddiam_kind + "'");
            json j;
            j["manifest"] = common.manifest("ddiam");
            j["family"] = ddiam_kind;
            j["value"] = ddiam(g, kind, common.arrow_options());
            out << j.dump() << "\n";
            return 0;
        }

        if (*ir_cmd) {
            auto family = parse_family_spec(ir_family, common, "family");
            auto r = ir_search(family, ir_max_n, common.arrow_options());
            json j;
            j["manifest"] = common.manifest("ir-search");
            j["resolved"] = r.resolved;
            if (r.resolved) {
                j["value"] = r.value;
                j["witness_graph6"] = write_graph6(*r.witness);
            }
            out << j.dump() << "\n";
            return 0;
        }

        if (*ghrv_cmd) {
            Graph g = parse_graph_spec(ghrv_graph, common, "graph");
            auto r = ghrv_check(g, common.arrow_options());
            json j;
            j["manifest"] = common.manifest("ghrv");
            j["chi"] = r.chi;
            j["min_longest_path"] = r.min_longest_path;
            j["equal"] = r.chi == r.min_longest_path;
            out << j.dump() << "\n";
            return r.chi == r.min_longest_path ? 0 : 2;
        }

        if (*comp_cmd) {
            Graph g = parse_graph_spec(comp_graph, common, "graph");
            auto orient = transitive_orientation(g, std::max(common.cap_edges, kTransitiveEdgeCap));
            bool chord = odd_cycle_chord_check(g, std::max(common.cap_vertices, kOddWalkVertexCap));
            json j;
            j["manifest"] = common.manifest("comparability");
            j["comparability"] = orient.has_value();
            if (orient) j["orientation_bits"] = bits_to_hex(orient->bits, g.edge_count());
            j["odd_walk_chord_check"] = chord;
            out << j.dump() << "\n";
            return 0;
        }

        if (*bfs_cmd) {
            Graph g = parse_graph_spec(bfs_graph, common, "graph");
            auto r = bfs_parity_orientation(g, bfs_root);
            json j;
            j["manifest"] = common.manifest("bfs-orient");
            j["root"] = bfs_root;
            j["orientation_bits"] = bits_to_hex(r.orientation.bits, g.edge_count());
            j["norms"] = r.norms;
            j["max_norm_span"] = norm_span_check(r);
            out << j.dump() << "\n";
            return 0;
        }

        if (*tower_cmd) {
            common.input_digests["n"] = fnv1a64(std::to_string(tower_n));
            TowerFamily fam = tower_family(tower_n);
            json sizes = json::array();
            for (const auto& s : fam.sizes) sizes.push_back(s.to_decimal_string());
            json levels = json::array();
            for (const auto& g : fam.levels) levels.push_back(write_graph6(g));
            json j;
            j["manifest"] = common.manifest("tower");
            j["sizes"] = sizes;
            j["levels_graph6"] = levels;
            out << j.dump() << "\n";
            return 0;
        }

        if (*pig_cmd) {
            Graph base = parse_graph_spec(pig_g, common, "g");
            int copies = pig_copies > 0 ? pig_copies : base.vertex_count() + 1;
            Graph host_g = rectangular_product(base, complete_graph(copies));
            Orientation host(host_g);
            if (!pig_bits.empty()) {
                common.input_digests["bits"] = fnv1a64(pig_bits);
                host.bits = hex_to_bits(pig_bits, host_g.edge_count());
            } else {
                SplitMix64 rng(common.seed);
                host = random_orientation(host_g, rng);
            }
            Digraph tree;
            if (!pig_tree.empty()) {
                if (pig_tree[0] != 'I') throw ParseError("bad tree spec '" + pig_tree + "'");
                tree = directed_path(std::stoi(pig_tree.substr(1)));
            } else {
                auto trees = enumerate_oriented_trees(pig_tree_n);
                if (pig_tree_index < 0 || pig_tree_index >= int(trees.size()))
                    throw ParseError("tree index '" + std::to_string(pig_tree_index) + "' out of range");
                tree = trees[pig_tree_index];
            }
            auto cert = pigeonhole_embed(base, copies, exhaustive_sub_embedder(), host, tree);
            json j;
            j["manifest"] = common.manifest("pigeonhole-embed");
            j.update(certificate_to_json(cert));
            j["verified"] = verify_certificate(cert).valid;
            out << j.dump() << "\n";
            return 0;
        }

        if (*pikh_cmd) {
            Graph g = parse_graph_spec(pikh_graph, common, "graph");
            auto w = parse_csv_doubles(pikh_w);
            auto d = parse_csv_doubles(pikh_d);
            if (int(w.size()) != pikh_n - 1 || int(d.size()) != pikh_n - 1)
                throw ParseError("sequence length must be n-1");
            EmbedMode mode = pikh_mode == "plain" ? EmbedMode::plain : EmbedMode::isometric;
            json j;
            j["manifest"] = common.manifest("pikh-check");
            j["n"] = pikh_n;
            j["mode"] = pikh_mode;
            json c1 = json::array(), c2 = json::array();
            for (int k = 2; k < pikh_n; ++k) {
                json e1;
                e1["k"] = k;
                auto w1 = check_condition1(g, k, d[k - 1], mode);
                e1["ok"] = !w1.has_value();
                if (w1) e1["witness"] = {{"v", w1->v}, {"s", w1->s}, {"y", w1->y}};
                c1.push_back(e1);
                json e2;
                e2["k"] = k;
                if (pikh_samples > 0) {
                    SplitMix64 rng(common.seed);
                    auto w2 = check_condition2_sampled(g, k, w[k - 1], d[k - 1], pikh_samples, rng);
                    e2["mode"] = "sampled";
                    e2["ok"] = !w2.has_value(); // falsifier only: true means "not falsified"
                    if (w2) e2["witness"] = {{"w_set", w2->w_set}, {"spanned", w2->spanned}};
                } else {
                    auto w2 = check_condition2_exact(g, k, w[k - 1], d[k - 1]);
                    e2["mode"] = "exact";
                    e2["ok"] = !w2.has_value();
                    if (w2) e2["witness"] = {{"w_set", w2->w_set}, {"spanned", w2->spanned}};
                }
                c2.push_back(e2);
            }
            j["condition1"] = c1;
            j["condition2"] = c2;
            j["condition3"] = {{"ok", check_condition3(w, g.vertex_count())}};
            out << j.dump() << "\n";
            return 0;
        }

        if (*greedy_cmd) {
            Graph g = parse_graph_spec(greedy_graph, common, "graph");
            common.input_digests["bits"] = fnv1a64(greedy_bits);
            Orientation host(g, hex_to_bits(greedy_bits, g.edge_count()));
            auto trees = enumerate_oriented_trees(greedy_tree_n);
            if (greedy_tree_index < 0 || greedy_tree_index >= int(trees.size()))
                throw ParseError("tree index '" + std::to_string(greedy_tree_index) + "' out of range");
            PikhParameters params;
            params.n = greedy_tree_n;
            params.w = parse_csv_doubles(greedy_w);
            params.d = parse_csv_doubles(greedy_d);
            params.mode = greedy_mode == "plain" ? EmbedMode::plain : EmbedMode::isometric;
            auto r = greedy_tree_embed(host, trees[greedy_tree_index], params);
            json j;
            j["manifest"] = common.manifest("greedy-embed");
            if (greedy_succeeded(r)) {
                j["embedded"] = true;
                j.update(certificate_to_json(std::get<EmbeddingCertificate>(r)));
            } else {
                const auto& t = std::get<FailureTrace>(r);
                j["embedded"] = false;
                j["failure_trace"] = {{"step_k", t.step_k},
                                      {"tree_vertex", t.tree_vertex},
                                      {"anchor_vertex", t.anchor_vertex},
                                      {"anchor_image", t.anchor_image},
                                      {"out_direction", t.out_direction},
                                      {"u_set", t.u_set},
                                      {"w_set", t.w_set},
                                      {"y_set", t.y_set},
                                      {"s_images", t.s_images}};
            }
            out << j.dump() << "\n";
            return 0;
        }

        if (*bounds_cmd) {
            json j;
            if (*kconst_cmd) {
                auto r = minimize_k();
                j["manifest"] = common.manifest("bounds k-const");
                j["K"] = r.k_value;
                j["x_star"] = r.x_star;
            } else if (*bpikh_cmd) {
                double delta = bpikh_delta, c = bpikh_c;
                if (delta <= 0 || c <= 0) std::tie(delta, c) = pikh_default_choice(bpikh_eps);
                common.input_digests["params"] =
                    fnv1a64(std::to_string(bpikh_n) + "," + std::to_string(delta) + "," + std::to_string(c));
                auto rec = pikh_recipe(bpikh_n, delta, c);
                j["manifest"] = common.manifest("bounds pikh");
                j["delta"] = delta;
                j["c"] = c;
                j["constraint_ok"] = rec.constraint_ok;
                j["params"] = params_to_json(rec.params);
                j["feasibility"] = feasibility_to_json(random_feasibility(rec.params), EmbedMode::isometric);
                if (bpikh_scan > 0) {
                    auto scan = pikh_threshold_scan(delta, c, bpikh_scan);
                    j["threshold_scan"] = {{"n_max", scan.n_max},
                                           {"feasible_count", scan.feasible_count},
                                           {"n0", scan.n0 ? json(*scan.n0) : json(nullptr)}};
                }
            } else if (*bklr_cmd) {
                common.input_digests["params"] = fnv1a64(std::to_string(bklr_n) + "," + std::to_string(bklr_eps));
                auto rec = klr_parameters(bklr_n, bklr_eps);
                j["manifest"] = common.manifest("bounds klr");
                j["K"] = rec.k_value;
                j["C"] = rec.C;
                j["delta"] = rec.delta;
                j["c"] = rec.c;
                j["params"] = params_to_json(rec.params);
                j["feasibility"] = feasibility_to_json(random_feasibility(rec.params), EmbedMode::plain);
            } else if (*berdos_cmd) {
                common.input_digests["params"] = fnv1a64(std::to_string(berdos_k) + "," + std::to_string(berdos_g));
                auto [lo, up] = erdos_bounds(berdos_k, berdos_g);
                j["manifest"] = common.manifest("bounds erdos");
                j["lower"] = bound_report_to_json(lo);
                j["upper"] = bound_report_to_json(up);
                if (berdos_spencer > 0)
                    j["spencer"] = bound_report_to_json(erdos_spencer_form(berdos_k, berdos_g, berdos_spencer));
            } else if (*bir_cmd) {
                common.input_digests["n"] = fnv1a64(std::to_string(bir_n));
                j["manifest"] = common.manifest("bounds ir");
                json rows = json::array();
                for (const auto& r : ir_upper_bounds(bir_n)) rows.push_back(bound_report_to_json(r));
                j["bounds"] = rows;
            }
            out << j.dump() << "\n";
            return 0;
        }

        if (*verify_cmd) {
            std::string data = read_file(verify_file);
            common.input_digests["certificate"] = fnv1a64(data);
            json parsed;
            try {
                parsed = json::parse(data);
            } catch (const json::exception& e) {
                throw ParseError(std::string("certificate JSON: ") + e.what());
            }
            VerifyResult vr;
            try {
                vr = verify_certificate(certificate_from_json(parsed));
            } catch (const json::exception& e) {
                throw ParseError(std::string("certificate fields: ") + e.what());
            }
            json j;
            j["manifest"] = common.manifest("verify-cert");
            j["valid"] = vr.valid;
            if (!vr.valid) j["reason"] = vr.reason;
            out << j.dump() << "\n";
            return vr.valid ? 0 : 2;
        }

        if (*repro_cmd) {
            common.input_digests["target"] = fnv1a64(repro_target);
            std::vector<ReproRow> rows;
            bool known = false;
            if (repro_target == "remark-3" || repro_target == "all") repro_remark3(rows, common), known = true;
            if (repro_target == "remark-5" || repro_target == "all") repro_remark5(rows, common), known = true;
            if (repro_target == "tower" || repro_target == "all") repro_tower(rows), known = true;
            if (repro_target == "k-const" || repro_target == "all") repro_kconst(rows), known = true;
            if (repro_target == "ghrv" || repro_target == "all") repro_ghrv(rows, common), known = true;
            if (repro_target == "comparability" || repro_target == "all") repro_comparability(rows, common), known = true;
            if (!known) throw ParseError("unknown repro target '" + repro_target + "'");
            bool all_pass = true;
            for (const auto& r : rows) {
                out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  expected=" << r.expected
                    << "  got=" << r.got << "\n";
                if (!r.pass) all_pass = false;
            }
            out << (all_pass ? "all passed" : "FAILURES present") << "\n";
            return all_pass ? 0 : 2;
        }

        err << "no subcommand executed\n";
        return 1;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace oriray::cli
