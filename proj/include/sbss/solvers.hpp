#pragma once

#include <sbss/connectivity.hpp>
#include <sbss/digraph.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbss {

enum class TreeOrientation { Out, In };

/// Spanning arborescence stored through the arcs of the graph it was built for.
struct SpanningTree {
    VertexId root = 0;
    TreeOrientation orientation = TreeOrientation::Out;
    /// parent_arc[v] is the tree arc incident to v on its way toward the root; empty at the root.
    std::vector<std::optional<ArcIndex>> parent_arc;

    /// Tree arcs, ascending.
    std::vector<ArcIndex> arcs() const {
        std::vector<ArcIndex> out;
        for (const auto& a : parent_arc)
            if (a) out.push_back(*a);
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

// Depth-first out-arborescence; neighbours are visited in arc-index order.
inline std::vector<std::optional<ArcIndex>> dfs_tree(const Digraph& g, VertexId root, std::optional<VertexId>& missing) {
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<ArcIndex>> parent(n);
    std::vector<bool> seen(n, false);
    struct Frame {
        VertexId v;
        std::size_t cursor;
    };
    std::vector<Frame> frames{{root, 0}};
    seen[root] = true;
    while (!frames.empty()) {
        Frame& f = frames.back();
        auto out = g.out_arcs(f.v);
        if (f.cursor == out.size()) {
            frames.pop_back();
            continue;
        }
        ArcIndex a = out[f.cursor++];
        VertexId w = g.arc(a).head;
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = a;
        frames.push_back({w, 0});
    }
    missing.reset();
    for (VertexId v = 0; v < n; ++v)
        if (!seen[v]) {
            missing = v;
            break;
        }
    return parent;
}

inline void check_root(const Digraph& g, VertexId v, const char* op) {
    if (v >= g.vertex_count())
        throw InvalidInput(std::string(op) + ": root " + std::to_string(v) + " out of range");
}

}  // namespace detail

/// Out-arborescence of `g` rooted at `v`.
inline SpanningTree out_tree(const Digraph& g, VertexId v) {
    detail::check_root(g, v, "out_tree");
    std::optional<VertexId> missing;
    SpanningTree t{v, TreeOrientation::Out, detail::dfs_tree(g, v, missing)};
    if (missing)
        throw PreconditionError("out_tree: vertex " + std::to_string(*missing) + " is not reachable from root " +
                                std::to_string(v));
    return t;
}

/// In-arborescence toward `v`: a DFS tree of reverse(g), mapped back onto the
/// arcs of `g` (reverse keeps arc indices).
inline SpanningTree in_tree(const Digraph& g, VertexId v) {
    detail::check_root(g, v, "in_tree");
    std::optional<VertexId> missing;
    SpanningTree t{v, TreeOrientation::In, detail::dfs_tree(reverse(g), v, missing)};
    if (missing)
        throw PreconditionError("in_tree: vertex " + std::to_string(*missing) + " cannot reach root " +
                                std::to_string(v));
    return t;
}

struct SolveReport {
    ArcSubset solution;
    std::size_t size = 0;
    std::size_t n = 0;
    bool bound_3n_minus_3_ok = false;
    std::size_t iterations_of_augment = 0;
    std::optional<VertexId> root_used;
    /// Size of the starting arc set before anything was added.
    std::size_t seed_size = 0;
    /// Arcs added on top of the seed, in insertion order.
    std::vector<ArcIndex> added_arcs;
    /// Block count of the working underlying graph at each loop test; the last entry is 1.
    std::vector<std::size_t> block_counts;
    std::optional<std::size_t> scss_size;
    std::optional<std::size_t> two_vcss_size;

    explicit SolveReport(const Digraph& g) : solution(g), n(g.vertex_count()) {}
};

namespace detail {

inline void finish_report(SolveReport& r) {
    r.size = r.solution.size();
    r.bound_3n_minus_3_ok = r.n == 0 || r.size <= 3 * (r.n - 1);
}

inline bool share_block(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace detail

/// Grows a strongly connected spanning arc set of the strongly biconnected graph
/// `g` until its underlying graph is biconnected.
///
/// Each round adds the smallest-index unused arc whose endpoints share no block
/// of the current underlying graph. Such an arc closes a cycle through the
/// block-cut tree, merging at least two blocks, so at most n - 2 rounds run.
inline SolveReport augment_to_biconnected(const Digraph& g, const ArcSubset& seed) {
    if (!seed.belongs_to(g)) throw ContractViolation("augment_to_biconnected: seed belongs to a different graph");
    if (auto why = strong_biconnectivity_failure(g))
        throw PreconditionError("augment_to_biconnected: input graph is not strongly biconnected: " + *why);
    if (!is_strongly_connected(subgraph(g, seed)))
        throw PreconditionError("augment_to_biconnected: seed subgraph is not strongly connected");

    const std::size_t n = g.vertex_count();
    SolveReport r(g);
    r.solution = seed;
    r.seed_size = seed.size();
    for (;;) {
        auto blocks = detail::compute_blocks(underlying(subgraph(g, r.solution)));
        r.block_counts.push_back(blocks.blocks.size());
        if (blocks.articulation_points.empty()) break;

        std::vector<std::vector<std::size_t>> block_of(n);
        for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
            for (VertexId v : blocks.blocks[b]) block_of[v].push_back(b);

        std::optional<ArcIndex> pick;
        for (ArcIndex a = 0; a < g.arc_count() && !pick; ++a) {
            if (r.solution.contains(a)) continue;
            const Arc& arc = g.arc(a);
            if (!detail::share_block(block_of[arc.tail], block_of[arc.head])) pick = a;
        }
        if (!pick) throw PreconditionError("augment_to_biconnected: input not strongly biconnected (no candidate arc)");
        r.solution.insert(*pick);
        r.added_arcs.push_back(*pick);
        ++r.iterations_of_augment;
    }
    detail::finish_report(r);
    return r;
}

/// Tree-union 3-approximation: out-tree and in-tree at `root`, then augmentation.
/// The result has at most 3(n - 1) arcs.
inline SolveReport approximate_msbss(const Digraph& g, VertexId root) {
    detail::check_root(g, root, "approximate_msbss");
    if (auto why = strong_biconnectivity_failure(g))
        throw PreconditionError("approximate_msbss: input is not strongly biconnected: " + *why);
    ArcSubset seed(g);
    for (ArcIndex a : out_tree(g, root).arcs()) seed.insert(a);
    for (ArcIndex a : in_tree(g, root).arcs()) seed.insert(a);
    SolveReport r = augment_to_biconnected(g, seed);
    r.root_used = root;
    return r;
}

/// Union of a strongly connected spanning arc set with a biconnected spanning
/// edge set of underlying(g), each edge lifted onto an arc of `g`.
///
/// An edge whose pair already has an arc in `scss` costs nothing; otherwise the
/// lexicographically smaller existing orientation is added.
inline SolveReport combine_and_augment(const Digraph& g, const ArcSubset& scss, std::span<const Edge> two_vcss) {
    if (!scss.belongs_to(g)) throw ContractViolation("combine_and_augment: scss belongs to a different graph");
    if (!is_strongly_connected(subgraph(g, scss)))
        throw PreconditionError("combine_and_augment: scss subgraph is not strongly connected");
    const auto view = underlying(g);
    for (const Edge& e : two_vcss)
        if (e.u >= g.vertex_count() || e.w >= g.vertex_count() || !view.find_edge(e.u, e.w))
            throw PreconditionError("combine_and_augment: edge {" + std::to_string(e.u) + ", " +
                                    std::to_string(e.w) + "} is not an edge of the underlying graph");
    UndirectedView bic(g.vertex_count(), two_vcss);
    if (!is_biconnected(bic))
        throw PreconditionError("combine_and_augment: two_vcss is not a biconnected spanning subgraph");

    SolveReport r(g);
    r.solution = scss;
    r.seed_size = scss.size();
    r.scss_size = scss.size();
    r.two_vcss_size = bic.edge_count();
    for (const Edge& e : bic.edges()) {
        auto forward = g.find_arc(e.u, e.w);
        auto backward = g.find_arc(e.w, e.u);
        if ((forward && scss.contains(*forward)) || (backward && scss.contains(*backward))) continue;
        ArcIndex a = forward ? *forward : *backward;
        if (r.solution.insert(a)) r.added_arcs.push_back(a);
    }
    if (!is_strongly_biconnected(subgraph(g, r.solution)))
        throw Error("combine_and_augment: union is not strongly biconnected");
    r.block_counts.push_back(1);
    detail::finish_report(r);
    return r;
}

}  // namespace sbss
