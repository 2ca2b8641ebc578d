#pragma once

#include <sbss/digraph.hpp>
#include <sbss/error.hpp>
#include <sbss/random.hpp>

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sbss {

/// The 13-vertex, 16-arc example graph, 1-indexed.
inline constexpr std::string_view figure1_edge_list =
    "# Strongly biconnected example digraph: 13 vertices, 16 arcs.\n"
    "13 16\n"
    "5 13\n"
    "13 7\n"
    "7 6\n"
    "6 8\n"
    "8 4\n"
    "4 12\n"
    "12 11\n"
    "11 5\n"
    "5 1\n"
    "1 10\n"
    "10 9\n"
    "9 2\n"
    "2 3\n"
    "3 5\n"
    "12 2\n"
    "7 8\n";

struct ParsedGraph {
    Digraph graph;
    std::vector<std::string> warnings;
};

struct ParsedUndirected {
    UndirectedView graph;
    std::vector<std::string> warnings;
};

namespace detail {

struct RawEdgeList {
    std::size_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;  // 0-indexed
    std::vector<std::size_t> lines;
};

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

inline RawEdgeList read_edge_list(std::string_view text) {
    RawEdgeList raw;
    std::optional<std::size_t> declared;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (tokens.size() != 2) throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) + " fields");
        if (!declared) {
            raw.n = parse_count(tokens[0], line_no, "vertex count");
            declared = parse_count(tokens[1], line_no, "arc count");
        } else {
            if (raw.pairs.size() == *declared)
                throw ParseError(line_no, "more arc lines than the header declares (" + std::to_string(*declared) + ")");
            std::size_t a = parse_count(tokens[0], line_no, "label");
            std::size_t b = parse_count(tokens[1], line_no, "label");
            if (a < 1 || a > raw.n || b < 1 || b > raw.n)
                throw ParseError(line_no, "label out of range [1, " + std::to_string(raw.n) + "]");
            if (a == b) throw ParseError(line_no, "self-loop at label " + std::to_string(a));
            raw.pairs.emplace_back(a - 1, b - 1);
            raw.lines.push_back(line_no);
        }
        if (end == text.size()) break;
    }
    if (!declared) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n m'");
    if (raw.pairs.size() != *declared)
        throw ParseError(line_no, "header declares " + std::to_string(*declared) + " arcs but " +
                                      std::to_string(raw.pairs.size()) + " were listed");
    return raw;
}

}  // namespace detail

/// Reads the "n m" + m lines "u w" format (1-indexed labels, '#' comments).
/// Repeated arcs are collapsed with a warning.
inline ParsedGraph parse_edge_list(std::string_view text) {
    auto raw = detail::read_edge_list(text);
    std::vector<Arc> arcs;
    std::vector<std::string> warnings;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < raw.pairs.size(); ++i) {
        auto [a, b] = raw.pairs[i];
        if (!seen.insert(detail::pair_key(a, b)).second) {
            warnings.push_back("line " + std::to_string(raw.lines[i]) + ": duplicate arc " + std::to_string(a + 1) +
                               " " + std::to_string(b + 1) + " ignored");
            continue;
        }
        arcs.push_back({a, b});
    }
    return {Digraph(raw.n, arcs), std::move(warnings)};
}

/// Same format read as undirected edges; both orientations of a pair collapse.
inline ParsedUndirected parse_undirected_edge_list(std::string_view text) {
    auto raw = detail::read_edge_list(text);
    std::vector<Edge> edges;
    std::vector<std::string> warnings;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < raw.pairs.size(); ++i) {
        Edge e = make_edge(raw.pairs[i].first, raw.pairs[i].second);
        if (!seen.insert(detail::pair_key(e.u, e.w)).second) {
            warnings.push_back("line " + std::to_string(raw.lines[i]) + ": duplicate edge ignored");
            continue;
        }
        edges.push_back(e);
    }
    return {UndirectedView(raw.n, edges), std::move(warnings)};
}

inline Digraph figure1() { return parse_edge_list(figure1_edge_list).graph; }

/// Canonical text: header, then arcs sorted by (tail, head), 1-indexed, one per line.
inline std::string emit_edge_list(const Digraph& g) {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    std::sort(arcs.begin(), arcs.end());
    std::ostringstream out;
    out << g.vertex_count() << ' ' << arcs.size() << '\n';
    for (const Arc& a : arcs) out << a.tail + 1 << ' ' << a.head + 1 << '\n';
    return out.str();
}

inline std::string emit_undirected_edge_list(const UndirectedView& u) {
    std::ostringstream out;
    out << u.vertex_count() << ' ' << u.edge_count() << '\n';
    for (const Edge& e : u.edges()) out << e.u + 1 << ' ' << e.w + 1 << '\n';
    return out.str();
}

/// Graphviz digraph with 1-indexed node names; arcs in `highlight` are drawn bold red.
inline std::string emit_dot(const Digraph& g, const ArcSubset* highlight = nullptr) {
    if (highlight && !highlight->belongs_to(g)) throw ContractViolation("emit_dot: highlight belongs to a different graph");
    std::ostringstream out;
    out << "digraph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
    for (ArcIndex i = 0; i < g.arc_count(); ++i) {
        const Arc& a = g.arc(i);
        out << "  " << a.tail + 1 << " -> " << a.head + 1;
        if (highlight && highlight->contains(i)) out << " [color=red, penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace detail {

inline std::vector<Arc> non_cycle_arcs(std::size_t n, const std::vector<VertexId>& order) {
    std::vector<VertexId> next(n);
    for (std::size_t i = 0; i < n; ++i) next[order[i]] = order[(i + 1) % n];
    std::vector<Arc> out;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId w = 0; w < n; ++w)
            if (u != w && next[u] != w) out.push_back({u, w});
    return out;
}

inline Digraph cycle_plus_chords(std::size_t n, std::size_t extra, const std::vector<VertexId>& order, Rng& rng) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) arcs.push_back({order[i], order[(i + 1) % n]});
    auto pool = non_cycle_arcs(n, order);
    rng.shuffle(pool);
    arcs.insert(arcs.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(extra));
    return Digraph(n, arcs);
}

}  // namespace detail

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 plus `extra` distinct random chords.
/// The minimum strongly biconnected spanning subgraph is the cycle, size n.
inline Digraph gen_hamiltonian_chords(std::size_t n, std::size_t extra, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("gen_hamiltonian_chords: n must be at least 3");
    if (extra > n * (n - 1) - n) throw InvalidInput("gen_hamiltonian_chords: too many extra arcs for n = " + std::to_string(n));
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    Rng rng(seed);
    return detail::cycle_plus_chords(n, extra, order, rng);
}

/// Random strongly biconnected digraph with exactly `target_m` arcs: a
/// Hamiltonian cycle over a random permutation plus random arcs.
inline Digraph gen_random_sb(std::size_t n, std::size_t target_m, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("gen_random_sb: n must be at least 3");
    if (target_m < n || target_m > n * (n - 1))
        throw InvalidInput("gen_random_sb: target_m must lie in [n, n(n-1)]");
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    Rng rng(seed);
    rng.shuffle(order);
    return detail::cycle_plus_chords(n, target_m - n, order, rng);
}

enum class Family { HamiltonianChords, RandomSb, Figure1 };

struct GenSpec {
    Family family = Family::RandomSb;
    std::size_t n = 0;
    std::size_t extra_edges = 0;
    std::uint64_t seed = 0;
};

inline Digraph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::HamiltonianChords:
            return gen_hamiltonian_chords(spec.n, spec.extra_edges, spec.seed);
        case Family::RandomSb:
            return gen_random_sb(spec.n, spec.n + spec.extra_edges, spec.seed);
        case Family::Figure1:
            return figure1();
    }
    throw InvalidInput("generate: unknown family");
}

inline std::optional<Family> parse_family(std::string_view name) {
    if (name == "hamiltonian-chords") return Family::HamiltonianChords;
    if (name == "random-sb") return Family::RandomSb;
    if (name == "figure1") return Family::Figure1;
    return std::nullopt;
}

}  // namespace sbss
