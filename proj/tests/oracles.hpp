#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's connectivity or search code.

#include <sbss/digraph.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using sbss::Arc;
using sbss::Edge;
using sbss::VertexId;

/// reach[u][w] is true iff w is reachable from u (reflexive).
inline std::vector<std::vector<bool>> closure(std::size_t n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v) r[v][v] = true;
    for (const Arc& a : arcs) r[a.tail][a.head] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

inline bool strongly_connected(std::size_t n, const std::vector<Arc>& arcs) {
    if (n == 0) return false;
    auto r = closure(n, arcs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r[i][j]) return false;
    return true;
}

/// Connectivity of the undirected graph after deleting `removed` (if any).
inline bool connected_without(std::size_t n, const std::vector<Edge>& edges, std::optional<VertexId> removed) {
    std::vector<std::size_t> label(n);
    for (std::size_t v = 0; v < n; ++v) label[v] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : edges) {
            if (removed && (e.u == *removed || e.w == *removed)) continue;
            std::size_t m = std::min(label[e.u], label[e.w]);
            if (label[e.u] != m || label[e.w] != m) {
                label[e.u] = label[e.w] = m;
                changed = true;
            }
        }
    }
    std::optional<std::size_t> seen;
    for (std::size_t v = 0; v < n; ++v) {
        if (removed && v == *removed) continue;
        if (!seen) seen = label[v];
        if (label[v] != *seen) return false;
    }
    return true;
}

inline std::vector<VertexId> articulation_points(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<VertexId> out;
    if (n < 3) return out;
    for (VertexId v = 0; v < n; ++v)
        if (!connected_without(n, edges, v)) out.push_back(v);
    return out;
}

inline std::vector<Edge> undirected_edges(const std::vector<Arc>& arcs) {
    std::vector<Edge> out;
    for (const Arc& a : arcs) out.push_back(sbss::make_edge(a.tail, a.head));
    return out;
}

inline bool biconnected(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0 || !connected_without(n, edges, std::nullopt)) return false;
    return articulation_points(n, edges).empty();
}

inline bool strongly_biconnected(std::size_t n, const std::vector<Arc>& arcs) {
    return strongly_connected(n, arcs) && biconnected(n, undirected_edges(arcs));
}

/// Smallest popcount of a mask over `items` accepted by `pred`, by plain 2^m enumeration.
template <typename T>
std::optional<std::size_t> min_subset(const std::vector<T>& items, const std::function<bool(const std::vector<T>&)>& pred) {
    const std::size_t m = items.size();
    std::optional<std::size_t> best;
    std::vector<T> pick;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (best && bits >= *best) continue;
        pick.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) pick.push_back(items[i]);
        if (pred(pick)) best = bits;
    }
    return best;
}

}  // namespace oracle
