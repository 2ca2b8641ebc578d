#pragma once

// Command-line front end. Kept in a header so the tests can drive `run`
// in-process; tools/sbss.cpp is a thin main().

#include <sbss/sbss.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sbss::cli {

using Json = nlohmann::ordered_json;

/// Bad flag combination discovered after parsing; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failed precondition or unreadable input; exit code 1.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string format = "text";
    std::size_t root = 1;
    std::string alg = "alg1";
    std::size_t cap = default_exact_cap;
    std::uint64_t seed = 0;
    std::string scss_path;
    std::string two_vcss_path;
    bool randomize = false;
    std::string family = "random-sb";
    std::size_t n = 0;
    std::optional<std::size_t> extra;
    std::optional<std::size_t> target_m;
    std::string output;
    std::string dir;
    std::string highlight = "none";
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Digraph load_graph(const std::string& path, std::ostream& err) {
    try {
        auto parsed = parse_edge_list(read_file(path));
        for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << '\n';
        return std::move(parsed.graph);
    } catch (const ParseError& e) {
        throw Failure(path + ": " + e.what());
    }
}

inline Json labels(const std::vector<VertexId>& vs) {
    Json out = Json::array();
    for (VertexId v : vs) out.push_back(v + 1);
    return out;
}

inline Json arc_list(const ArcSubset& s) {
    Json out = Json::array();
    for (const Arc& a : s.arcs()) out.push_back(Json::array({a.tail + 1, a.head + 1}));
    return out;
}

inline Json edge_list(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(Json::array({e.u + 1, e.w + 1}));
    return out;
}

inline void require_strongly_biconnected(const Digraph& g) {
    if (auto why = strong_biconnectivity_failure(g, 1)) throw Failure("input is not strongly biconnected: " + *why);
}

inline VertexId root_id(const Options& o, const Digraph& g) {
    if (o.root < 1 || o.root > g.vertex_count())
        throw UsageError("--root " + std::to_string(o.root) + " out of range [1, " + std::to_string(g.vertex_count()) + "]");
    return o.root - 1;
}

// Reads an arc list that must be a subset of `g`'s arcs.
inline ArcSubset load_arc_subset(const Digraph& g, const std::string& path, std::ostream& err) {
    Digraph sub = load_graph(path, err);
    if (sub.vertex_count() != g.vertex_count()) throw Failure(path + ": vertex count differs from the input graph");
    ArcSubset s(g);
    for (const Arc& a : sub.arcs()) {
        auto idx = g.find_arc(a.tail, a.head);
        if (!idx)
            throw Failure(path + ": arc " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1) +
                          " is not an arc of the input graph");
        s.insert(*idx);
    }
    return s;
}

inline std::string format_ratio(double r) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << r;
    return out.str();
}

// One "key: value" line per field; strings unquoted, everything else as compact JSON.
inline void print(const Json& report, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        out << report.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
}

inline void solve_fields(Json& j, const Digraph& g, const SolveReport& r) {
    j["n"] = g.vertex_count();
    j["m"] = g.arc_count();
    if (r.root_used) j["root"] = *r.root_used + 1;
    j["size"] = r.size;
    j["bound_3n_minus_3"] = g.vertex_count() == 0 ? 0 : 3 * (g.vertex_count() - 1);
    j["bound_3n_minus_3_ok"] = r.bound_3n_minus_3_ok;
    j["strongly_biconnected"] = is_strongly_biconnected(subgraph(g, r.solution));
    j["seed_size"] = r.seed_size;
    if (r.scss_size) j["scss_size"] = *r.scss_size;
    if (r.two_vcss_size) j["two_vcss_size"] = *r.two_vcss_size;
    j["iterations_of_augment"] = r.iterations_of_augment;
    Json added = Json::array();
    for (ArcIndex a : r.added_arcs) added.push_back(Json::array({g.arc(a).tail + 1, g.arc(a).head + 1}));
    j["added_arcs"] = added;
    j["arcs"] = arc_list(r.solution);
}

// Seed SCSS for augment/combine: --scss file, else the exact optimum within
// the cap, else the out-tree/in-tree union at the root.
inline std::pair<ArcSubset, std::string> scss_seed(const Digraph& g, const Options& o, std::ostream& err) {
    if (!o.scss_path.empty()) {
        auto s = load_arc_subset(g, o.scss_path, err);
        if (!is_strongly_connected(subgraph(g, s))) throw Failure(o.scss_path + ": scss is not strongly connected");
        return {s, "file"};
    }
    if (g.arc_count() <= o.cap) return {exact_msccs(g, o.cap).witness, "exact"};
    VertexId v = root_id(o, g);
    ArcSubset s(g);
    for (ArcIndex a : out_tree(g, v).arcs()) s.insert(a);
    for (ArcIndex a : in_tree(g, v).arcs()) s.insert(a);
    return {s, "tree-union"};
}

inline Json cmd_check(const Options& o, std::ostream& err) {
    Digraph g = load_graph(o.input, err);
    auto view = underlying(g);
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.arc_count();
    const bool sc = is_strongly_connected(g);
    const bool bic = is_biconnected(view);
    j["strongly_connected"] = sc;
    j["underlying_biconnected"] = bic;
    j["strongly_biconnected"] = sc && bic;
    try {
        j["articulation_points"] = labels(articulation_points(view).articulation_points);
    } catch (const DisconnectedGraph&) {
        j["articulation_points"] = nullptr;
    }
    j["strong_articulation_points"] = sc ? labels(strong_articulation_points(g)) : Json(nullptr);
    Json parts = Json::array();
    for (const auto& p : sbc_decomposition(g).parts) parts.push_back(labels(p));
    j["sbc_parts"] = parts;
    return j;
}

inline Json cmd_solve(const Options& o, std::ostream& err) {
    Digraph g = load_graph(o.input, err);
    VertexId v = root_id(o, g);
    require_strongly_biconnected(g);
    Json j;
    j["algorithm"] = o.alg;
    if (o.alg == "alg1") {
        solve_fields(j, g, approximate_msbss(g, v));
    } else if (o.alg == "augment") {
        auto [seed, source] = scss_seed(g, o, err);
        j["seed_source"] = source;
        solve_fields(j, g, augment_to_biconnected(g, seed));
    } else {
        auto [seed, source] = scss_seed(g, o, err);
        j["seed_source"] = source;
        std::vector<Edge> two;
        if (!o.two_vcss_path.empty()) {
            auto parsed = parse_undirected_edge_list(read_file(o.two_vcss_path));
            for (const auto& w : parsed.warnings) err << "warning: " << o.two_vcss_path << ": " << w << '\n';
            if (parsed.graph.vertex_count() != g.vertex_count())
                throw Failure(o.two_vcss_path + ": vertex count differs from the input graph");
            two.assign(parsed.graph.edges().begin(), parsed.graph.edges().end());
            j["two_vcss_source"] = "file";
        } else if (auto view = underlying(g); view.edge_count() <= o.cap) {
            two = exact_2vcss(view, o.cap).witness;
            j["two_vcss_source"] = "exact";
        } else {
            two.assign(view.edges().begin(), view.edges().end());
            j["two_vcss_source"] = "underlying";
        }
        solve_fields(j, g, combine_and_augment(g, seed, two));
    }
    return j;
}

inline Json cmd_exact(const Options& o, std::ostream& err) {
    Digraph g = load_graph(o.input, err);
    require_strongly_biconnected(g);
    auto h = exact_msbss(g, o.cap);
    auto i = exact_msccs(g, o.cap);
    auto s = exact_2vcss(underlying(g), o.cap);
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.arc_count();
    j["h"] = h.optimum_size;
    j["i"] = i.optimum_size;
    j["s"] = s.optimum_size;
    j["h_witness"] = arc_list(h.witness);
    j["i_witness"] = arc_list(i.witness);
    j["s_witness"] = edge_list(s.witness);
    j["explored"] = h.instances_explored + i.instances_explored + s.instances_explored;
    return j;
}

inline Json cmd_minimize(const Options& o, std::ostream& err) {
    Digraph g = load_graph(o.input, err);
    require_strongly_biconnected(g);
    auto r = minimalize(g, ArcSubset::all(g), o.randomize ? std::optional<std::uint64_t>(o.seed) : std::nullopt);
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.arc_count();
    j["order"] = o.randomize ? "random" : "descending";
    j["size"] = r.size;
    j["ratio_to_2n"] = std::to_string(r.ratio_numerator()) + "/" + std::to_string(r.ratio_denominator());
    j["ratio_value"] = std::round(r.ratio_to_2n() * 1e6) / 1e6;
    j["arcs"] = arc_list(r.minimal_solution);
    return j;
}

inline Json cmd_gen(const Options& o, std::ostream& out) {
    auto family = parse_family(o.family);
    if (!family) throw UsageError("unknown --family " + o.family);
    GenSpec spec{*family, o.n, 0, o.seed};
    if (*family == Family::RandomSb) {
        if (o.target_m && o.extra) throw UsageError("--m and --extra are mutually exclusive");
        if (o.target_m) {
            if (*o.target_m < o.n) throw UsageError("--m must be at least --n");
            spec.extra_edges = *o.target_m - o.n;
        } else {
            spec.extra_edges = o.extra.value_or(o.n);
        }
    } else if (*family == Family::HamiltonianChords) {
        if (o.target_m) throw UsageError("--m applies to random-sb only; use --extra");
        spec.extra_edges = o.extra.value_or(0);
    }
    Digraph g;
    try {
        g = generate(spec);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    const std::string text = emit_edge_list(g);
    Json j;
    j["family"] = o.family;
    j["n"] = g.vertex_count();
    j["m"] = g.arc_count();
    j["seed"] = o.seed;
    if (o.output.empty()) {
        out << text;
        return nullptr;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw Failure("cannot write " + o.output);
    f << text;
    j["output"] = o.output;
    return j;
}

struct StatsRow {
    std::string instance;
    std::size_t n = 0, m = 0, alg1_size = 0;
    std::optional<std::size_t> exact_h;
};

inline Json cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<StatsRow> rows;
    for (const auto& path : files) {
        Digraph g = load_graph(path.string(), err);
        if (auto why = strong_biconnectivity_failure(g, 1))
            throw Failure(path.filename().string() + ": input is not strongly biconnected: " + *why);
        StatsRow row{path.filename().string(), g.vertex_count(), g.arc_count(), 0, std::nullopt};
        VertexId v = o.root <= g.vertex_count() ? o.root - 1 : 0;
        row.alg1_size = approximate_msbss(g, v).size;
        if (g.arc_count() <= o.cap) row.exact_h = exact_msbss(g, o.cap).optimum_size;
        rows.push_back(std::move(row));
    }

    auto ratio = [](const StatsRow& r) -> std::string {
        if (!r.exact_h || *r.exact_h == 0) return "";
        return format_ratio(static_cast<double>(r.alg1_size) / static_cast<double>(*r.exact_h));
    };
    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["instance"] = r.instance;
            j["n"] = r.n;
            j["m"] = r.m;
            j["alg1_size"] = r.alg1_size;
            j["exact_h"] = r.exact_h ? Json(*r.exact_h) : Json(nullptr);
            j["ratio"] = r.exact_h ? Json(ratio(r)) : Json(nullptr);
            list.push_back(j);
        }
        Json j;
        j["rows"] = list;
        return j;
    }
    out << "instance,n,m,alg1_size,exact_h,ratio\n";
    for (const auto& r : rows)
        out << r.instance << ',' << r.n << ',' << r.m << ',' << r.alg1_size << ','
            << (r.exact_h ? std::to_string(*r.exact_h) : "") << ',' << ratio(r) << '\n';
    return nullptr;
}

inline Json cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
    Digraph g = load_graph(o.input, err);
    std::optional<ArcSubset> highlight;
    if (o.highlight != "none") {
        require_strongly_biconnected(g);
        if (o.highlight == "alg1")
            highlight = approximate_msbss(g, root_id(o, g)).solution;
        else if (o.highlight == "exact")
            highlight = exact_msbss(g, o.cap).witness;
        else
            highlight = minimalize(g, ArcSubset::all(g)).minimal_solution;
    }
    const std::string dot = emit_dot(g, highlight ? &*highlight : nullptr);
    if (o.output.empty()) {
        out << dot;
        return nullptr;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw Failure("cannot write " + o.output);
    f << dot;
    Json j;
    j["output"] = o.output;
    j["highlighted"] = highlight ? highlight->size() : 0;
    return j;
}

}  // namespace detail

/// Runs one command. Exit codes: 0 success, 1 failed precondition or bad input data, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Strongly biconnected spanning subgraph toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Edge-list file")->required()->check(CLI::ExistingFile); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "Arc cap for exact search"); };
    auto add_root = [&](CLI::App* sub) {
        sub->add_option("--root", o.root, "Root vertex label (1-indexed)")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "Report connectivity properties");
    add_input(check);
    add_format(check);

    auto* solve = app.add_subcommand("solve", "Run an approximation construction");
    add_input(solve);
    add_format(solve);
    add_root(solve);
    add_cap(solve);
    solve->add_option("--alg", o.alg, "alg1 | augment | combine")->check(CLI::IsMember({"alg1", "augment", "combine"}));
    solve->add_option("--scss", o.scss_path, "Strongly connected spanning arc list used as the seed")
        ->check(CLI::ExistingFile);
    solve->add_option("--two-vcss", o.two_vcss_path, "Biconnected spanning undirected edge list (combine)")
        ->check(CLI::ExistingFile);

    auto* exact = app.add_subcommand("exact", "Exact optima h, i, s");
    add_input(exact);
    add_format(exact);
    add_cap(exact);

    auto* minimize = app.add_subcommand("minimize", "Greedy 1-minimal strongly biconnected subgraph");
    add_input(minimize);
    add_format(minimize);
    minimize->add_flag("--randomize", o.randomize, "Random deletion order");
    minimize->add_option("--seed", o.seed, "Seed for --randomize");

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    add_format(gen);
    gen->add_option("--family", o.family, "hamiltonian-chords | random-sb | figure1")
        ->check(CLI::IsMember({"hamiltonian-chords", "random-sb", "figure1"}));
    gen->add_option("--n", o.n, "Vertex count");
    gen->add_option("--extra", o.extra, "Arcs beyond the Hamiltonian cycle");
    gen->add_option("--m", o.target_m, "Total arc count (random-sb)");
    gen->add_option("--seed", o.seed, "Generator seed");
    gen->add_option("--output", o.output, "Output path (default: standard output)");

    auto* stats = app.add_subcommand("stats", "CSV summary over a directory of instances");
    stats->add_option("--dir", o.dir, "Instance directory")->required()->check(CLI::ExistingDirectory);
    add_format(stats);
    add_cap(stats);
    add_root(stats);

    auto* exp = app.add_subcommand("export", "Graphviz DOT output");
    add_input(exp);
    add_root(exp);
    add_cap(exp);
    exp->add_option("--highlight", o.highlight, "none | alg1 | exact | minimal")
        ->check(CLI::IsMember({"none", "alg1", "exact", "minimal"}));
    exp->add_option("--output", o.output, "Output path (default: standard output)");

    std::vector<const char*> argv;
    argv.push_back("sbss");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        Json report;
        if (check->parsed())
            report = detail::cmd_check(o, err);
        else if (solve->parsed())
            report = detail::cmd_solve(o, err);
        else if (exact->parsed())
            report = detail::cmd_exact(o, err);
        else if (minimize->parsed())
            report = detail::cmd_minimize(o, err);
        else if (gen->parsed())
            report = detail::cmd_gen(o, out);
        else if (stats->parsed())
            report = detail::cmd_stats(o, out, err);
        else
            report = detail::cmd_export(o, out, err);
        if (!report.is_null()) detail::print(report, o, out);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Failure& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const sbss::Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace sbss::cli
