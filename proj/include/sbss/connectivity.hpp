#pragma once

#include <sbss/digraph.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sbss {

struct SccPartition {
    /// Component indices are dense and numbered by smallest contained vertex.
    std::vector<std::size_t> component_of;
    std::size_t count = 0;

    /// Vertex lists per component, each ascending.
    std::vector<std::vector<VertexId>> components() const {
        std::vector<std::vector<VertexId>> out(count);
        for (VertexId v = 0; v < component_of.size(); ++v) out[component_of[v]].push_back(v);
        return out;
    }
};

/// Tarjan's single-pass algorithm, iterative.
inline SccPartition scc(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unset), low(n, 0), raw(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    struct Frame {
        VertexId v;
        std::size_t cursor;
    };
    std::vector<Frame> frames;
    std::size_t next_index = 0, raw_count = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto out = g.out_arcs(f.v);
            if (f.cursor < out.size()) {
                VertexId w = g.arc(out[f.cursor++]).head;
                if (index[w] == unset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            VertexId v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw[w] = raw_count;
                } while (w != v);
                ++raw_count;
            }
        }
    }

    SccPartition p;
    p.component_of.assign(n, 0);
    std::vector<std::size_t> renumber(raw_count, unset);
    for (VertexId v = 0; v < n; ++v) {
        if (renumber[raw[v]] == unset) renumber[raw[v]] = p.count++;
        p.component_of[v] = renumber[raw[v]];
    }
    return p;
}

inline bool is_strongly_connected(const Digraph& g) { return g.vertex_count() >= 1 && scc(g).count == 1; }

struct BlockSet {
    /// Each block ascending; blocks ordered lexicographically.
    std::vector<std::vector<VertexId>> blocks;
    /// Ascending.
    std::vector<VertexId> articulation_points;
};

namespace detail {

inline bool is_connected(const UndirectedView& u) {
    const std::size_t n = u.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> todo{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
        VertexId v = todo.back();
        todo.pop_back();
        for (const auto& inc : u.neighbors(v))
            if (!seen[inc.other]) {
                seen[inc.other] = true;
                ++reached;
                todo.push_back(inc.other);
            }
    }
    return reached == n;
}

// Hopcroft-Tarjan over every connected component. Isolated vertices form
// singleton blocks; a bridge forms a two-vertex block.
inline BlockSet compute_blocks(const UndirectedView& u) {
    const std::size_t n = u.vertex_count();
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> disc(n, unset), low(n, 0);
    std::vector<bool> cut(n, false);
    std::vector<VertexId> vstack;
    struct Frame {
        VertexId v;
        EdgeIndex parent_edge;
        std::size_t cursor;
    };
    std::vector<Frame> frames;
    std::size_t clock = 0;
    BlockSet out;

    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != unset) continue;
        disc[root] = low[root] = clock++;
        if (u.neighbors(root).empty()) {
            out.blocks.push_back({root});
            continue;
        }
        std::size_t root_children = 0;
        vstack.push_back(root);
        frames.push_back({root, unset, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto nbrs = u.neighbors(f.v);
            if (f.cursor < nbrs.size()) {
                const auto& inc = nbrs[f.cursor++];
                if (inc.edge == f.parent_edge) continue;
                if (disc[inc.other] == unset) {
                    disc[inc.other] = low[inc.other] = clock++;
                    vstack.push_back(inc.other);
                    frames.push_back({inc.other, inc.edge, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[inc.other]);
                }
                continue;
            }
            VertexId v = f.v;
            frames.pop_back();
            if (frames.empty()) break;
            VertexId p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<VertexId> block{p};
                VertexId w;
                do {
                    w = vstack.back();
                    vstack.pop_back();
                    block.push_back(w);
                } while (w != v);
                std::sort(block.begin(), block.end());
                out.blocks.push_back(std::move(block));
                if (p == root)
                    ++root_children;
                else
                    cut[p] = true;
            }
        }
        vstack.clear();
        if (root_children >= 2) cut[root] = true;
    }

    std::sort(out.blocks.begin(), out.blocks.end());
    for (VertexId v = 0; v < n; ++v)
        if (cut[v]) out.articulation_points.push_back(v);
    return out;
}

}  // namespace detail

/// Blocks and cut vertices of a connected undirected graph.
/// Throws DisconnectedGraph otherwise.
inline BlockSet articulation_points(const UndirectedView& u) {
    if (!detail::is_connected(u)) throw DisconnectedGraph("articulation_points: undirected graph is not connected");
    return detail::compute_blocks(u);
}

/// Connected with no cut vertex. K1 and K2 count as biconnected.
inline bool is_biconnected(const UndirectedView& u) {
    if (!detail::is_connected(u)) return false;
    return detail::compute_blocks(u).articulation_points.empty();
}

inline bool is_strongly_biconnected(const Digraph& g) {
    return is_strongly_connected(g) && is_biconnected(underlying(g));
}

/// Names the first reason `g` is not strongly biconnected, or nullopt when it is.
/// Vertices are printed as `id + label_base`.
inline std::optional<std::string> strong_biconnectivity_failure(const Digraph& g, std::size_t label_base = 0) {
    auto label = [label_base](VertexId v) { return std::to_string(v + label_base); };
    if (g.vertex_count() == 0) return "graph has no vertices";
    auto part = scc(g);
    if (part.count > 1) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (part.component_of[v] != 0)
                return "not strongly connected: vertices " + label(0) + " and " + label(v) +
                       " are not mutually reachable";
    }
    auto view = underlying(g);
    auto blocks = detail::compute_blocks(view);
    if (!blocks.articulation_points.empty())
        return "articulation point " + label(blocks.articulation_points.front()) + " in underlying graph";
    return std::nullopt;
}

/// Vertices whose deletion leaves the remaining graph not strongly connected.
/// Naive remove-and-test, O(n (n + m)).
inline std::vector<VertexId> strong_articulation_points(const Digraph& g) {
    if (!is_strongly_connected(g)) throw PreconditionError("strong_articulation_points: graph is not strongly connected");
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> out;
    std::vector<VertexId> rest;
    rest.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        rest.clear();
        for (VertexId w = 0; w < n; ++w)
            if (w != v) rest.push_back(w);
        if (rest.empty()) continue;
        if (scc(induced_subgraph(g, rest).graph).count > 1) out.push_back(v);
    }
    return out;
}

struct SbcDecomposition {
    /// Distinct, inclusion-maximal vertex sets; each ascending, list lexicographic.
    std::vector<std::vector<VertexId>> parts;
    std::size_t rounds = 0;
};

namespace detail {

inline std::vector<std::vector<VertexId>> normalize_parts(std::vector<std::vector<VertexId>> parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<std::vector<VertexId>> kept;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < parts.size() && !dominated; ++j)
            dominated = j != i && parts[j].size() > parts[i].size() &&
                        std::includes(parts[j].begin(), parts[j].end(), parts[i].begin(), parts[i].end());
        if (!dominated) kept.push_back(parts[i]);
    }
    return kept;
}

}  // namespace detail

/// One refinement round: split each part into the blocks of its induced
/// underlying graph, split each block by the SCCs of its induced digraph, then
/// drop duplicates and parts contained in a larger one.
inline std::vector<std::vector<VertexId>> refine_parts(const Digraph& g,
                                                       const std::vector<std::vector<VertexId>>& parts) {
    std::vector<std::vector<VertexId>> next;
    for (const auto& part : parts) {
        auto outer = induced_subgraph(g, part);
        for (const auto& block : detail::compute_blocks(underlying(outer.graph)).blocks) {
            auto inner = induced_subgraph(outer.graph, block);
            for (const auto& comp : scc(inner.graph).components()) {
                std::vector<VertexId> mapped;
                mapped.reserve(comp.size());
                for (VertexId local : comp) mapped.push_back(outer.original[inner.original[local]]);
                next.push_back(std::move(mapped));
            }
        }
    }
    return detail::normalize_parts(std::move(next));
}

/// Fixpoint of refine_parts starting from the SCC classes. At the fixpoint every
/// part induces a strongly biconnected subgraph (or is a single vertex).
inline SbcDecomposition sbc_decomposition(const Digraph& g) {
    SbcDecomposition d;
    d.parts = detail::normalize_parts(scc(g).components());
    for (;;) {
        auto next = refine_parts(g, d.parts);
        ++d.rounds;
        if (next == d.parts) break;
        d.parts = std::move(next);
    }
    return d;
}

}  // namespace sbss
