#pragma once

#include <sbss/error.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sbss {

using VertexId = std::size_t;
using ArcIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unordered vertex pair, stored with `u < w`.
struct Edge {
    VertexId u = 0;
    VertexId w = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

namespace detail {

inline std::uint64_t pair_key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// Compressed adjacency: for vertex v the entries live in items[offsets[v], offsets[v + 1]).
template <typename T>
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<T> items;

    std::span<const T> row(std::size_t v) const {
        return {items.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

template <typename T, typename KeyFn>
Csr<T> build_csr(std::size_t rows, const std::vector<T>& entries, KeyFn key) {
    Csr<T> csr;
    csr.offsets.assign(rows + 1, 0);
    for (const auto& e : entries) ++csr.offsets[key(e) + 1];
    for (std::size_t i = 0; i < rows; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.items.resize(entries.size());
    auto cursor = csr.offsets;
    for (const auto& e : entries) csr.items[cursor[key(e)]++] = e;
    return csr;
}

}  // namespace detail

/// Immutable simple directed graph on vertices 0..n-1.
///
/// Arcs keep their first-occurrence input order; duplicates are dropped and
/// self-loops rejected. Adjacency rows list arc indices in ascending order, which
/// every traversal in the library relies on for reproducible tie-breaking.
class Digraph {
public:
    Digraph() { build_index(); }

    Digraph(std::size_t n, std::span<const Arc> arcs) : n_(n) {
        if (n_ > UINT32_MAX) throw InvalidInput("vertex count too large");
        arcs_.reserve(arcs.size());
        for (const Arc& a : arcs) {
            if (a.tail >= n_ || a.head >= n_)
                throw InvalidInput("arc endpoint out of range: (" + std::to_string(a.tail) + ", " +
                                   std::to_string(a.head) + ") with n = " + std::to_string(n_));
            if (a.tail == a.head) throw InvalidInput("self-loop at vertex " + std::to_string(a.tail));
            if (index_.emplace(detail::pair_key(a.tail, a.head), arcs_.size()).second)
                arcs_.push_back(a);
        }
        build_index();
    }

    Digraph(std::size_t n, std::initializer_list<Arc> arcs)
        : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    const Arc& arc(ArcIndex i) const { return arcs_.at(i); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    std::span<const ArcIndex> out_arcs(VertexId v) const { return out_.row(v); }
    std::span<const ArcIndex> in_arcs(VertexId v) const { return in_.row(v); }

    std::optional<ArcIndex> find_arc(VertexId tail, VertexId head) const {
        auto it = index_.find(detail::pair_key(tail, head));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool has_arc(VertexId tail, VertexId head) const { return find_arc(tail, head).has_value(); }

    /// Same vertex count and the same arc sequence.
    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    void build_index() {
        std::vector<ArcIndex> ids(arcs_.size());
        for (ArcIndex i = 0; i < ids.size(); ++i) ids[i] = i;
        out_ = detail::build_csr(n_, ids, [this](ArcIndex i) { return arcs_[i].tail; });
        in_ = detail::build_csr(n_, ids, [this](ArcIndex i) { return arcs_[i].head; });
    }

    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    detail::Csr<ArcIndex> out_;
    detail::Csr<ArcIndex> in_;
    std::unordered_map<std::uint64_t, ArcIndex> index_;
};

inline Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) { return Digraph(n, arcs); }

/// Order-insensitive comparison of vertex count and arc set.
inline bool same_arc_set(const Digraph& a, const Digraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
    std::vector<Arc> x(a.arcs().begin(), a.arcs().end());
    std::vector<Arc> y(b.arcs().begin(), b.arcs().end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

/// A set of arc indices of one parent graph, i.e. a spanning subgraph (V, H).
///
/// The subset holds a pointer to its parent, which must outlive it.
class ArcSubset {
public:
    explicit ArcSubset(const Digraph& parent) : parent_(&parent), member_(parent.arc_count(), false) {}

    ArcSubset(const Digraph& parent, std::span<const ArcIndex> members) : ArcSubset(parent) {
        for (ArcIndex i : members) insert(i);
    }

    static ArcSubset all(const Digraph& parent) {
        ArcSubset s(parent);
        s.member_.assign(parent.arc_count(), true);
        s.size_ = parent.arc_count();
        return s;
    }

    const Digraph& parent() const noexcept { return *parent_; }
    bool belongs_to(const Digraph& g) const noexcept { return parent_ == &g; }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(ArcIndex i) const { return i < member_.size() && member_[i]; }

    /// Returns false when `i` was already a member.
    bool insert(ArcIndex i) {
        check_index(i);
        if (member_[i]) return false;
        member_[i] = true;
        ++size_;
        return true;
    }

    bool erase(ArcIndex i) {
        check_index(i);
        if (!member_[i]) return false;
        member_[i] = false;
        --size_;
        return true;
    }

    void insert_all(const ArcSubset& other) {
        require_same_parent(other);
        for (ArcIndex i = 0; i < member_.size(); ++i)
            if (other.member_[i]) insert(i);
    }

    /// Members in ascending arc-index order.
    std::vector<ArcIndex> indices() const {
        std::vector<ArcIndex> out;
        out.reserve(size_);
        for (ArcIndex i = 0; i < member_.size(); ++i)
            if (member_[i]) out.push_back(i);
        return out;
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(size_);
        for (ArcIndex i = 0; i < member_.size(); ++i)
            if (member_[i]) out.push_back(parent_->arc(i));
        return out;
    }

    void require_same_parent(const ArcSubset& other) const {
        if (parent_ != other.parent_) throw ContractViolation("arc subsets belong to different graphs");
    }

    friend bool operator==(const ArcSubset& a, const ArcSubset& b) {
        return a.parent_ == b.parent_ && a.member_ == b.member_;
    }

private:
    void check_index(ArcIndex i) const {
        if (i >= member_.size())
            throw ContractViolation("arc index " + std::to_string(i) + " out of range for parent with " +
                                    std::to_string(member_.size()) + " arcs");
    }

    const Digraph* parent_;
    std::vector<bool> member_;
    std::size_t size_ = 0;
};

/// Simple undirected graph; edges sorted lexicographically.
class UndirectedView {
public:
    struct Incidence {
        VertexId other;
        EdgeIndex edge;
    };

    UndirectedView() { build_index(); }

    UndirectedView(std::size_t n, std::span<const Edge> edges) : n_(n) {
        edges_.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.u >= n_ || e.w >= n_)
                throw InvalidInput("edge endpoint out of range: {" + std::to_string(e.u) + ", " +
                                   std::to_string(e.w) + "} with n = " + std::to_string(n_));
            if (e.u == e.w) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
            edges_.push_back(make_edge(e.u, e.w));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        build_index();
    }

    UndirectedView(std::size_t n, std::initializer_list<Edge> edges)
        : UndirectedView(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

    std::span<const Incidence> neighbors(VertexId v) const { return adj_.row(v); }

    std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const {
        Edge key = make_edge(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return std::nullopt;
        return static_cast<EdgeIndex>(it - edges_.begin());
    }

    friend bool operator==(const UndirectedView& a, const UndirectedView& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_index() {
        struct Half {
            VertexId from;
            Incidence inc;
        };
        std::vector<Half> halves;
        halves.reserve(2 * edges_.size());
        for (EdgeIndex i = 0; i < edges_.size(); ++i) {
            halves.push_back({edges_[i].u, {edges_[i].w, i}});
            halves.push_back({edges_[i].w, {edges_[i].u, i}});
        }
        auto csr = detail::build_csr(n_, halves, [](const Half& h) { return h.from; });
        adj_.offsets = std::move(csr.offsets);
        adj_.items.reserve(csr.items.size());
        for (const Half& h : csr.items) adj_.items.push_back(h.inc);
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    detail::Csr<Incidence> adj_;
};

/// Arc i of the result is arc i of `g` with its direction flipped.
inline Digraph reverse(const Digraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
    return Digraph(g.vertex_count(), arcs);
}

inline UndirectedView underlying(const Digraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) edges.push_back(make_edge(a.tail, a.head));
    return UndirectedView(g.vertex_count(), edges);
}

/// The spanning subgraph (V, H); arcs keep their relative parent order.
inline Digraph subgraph(const Digraph& g, const ArcSubset& h) {
    if (!h.belongs_to(g)) throw ContractViolation("subgraph: arc subset belongs to a different graph");
    auto arcs = h.arcs();
    return Digraph(g.vertex_count(), arcs);
}

struct InducedSubgraph {
    Digraph graph;
    /// original[i] is the parent vertex behind local vertex i.
    std::vector<VertexId> original;
};

/// Subgraph induced by `vertices` (deduplicated, renumbered in ascending order).
inline InducedSubgraph induced_subgraph(const Digraph& g, std::span<const VertexId> vertices) {
    InducedSubgraph out;
    out.original.assign(vertices.begin(), vertices.end());
    std::sort(out.original.begin(), out.original.end());
    out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());

    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(g.vertex_count(), absent);
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        if (out.original[i] >= g.vertex_count()) throw InvalidInput("induced_subgraph: vertex out of range");
        local[out.original[i]] = i;
    }
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs())
        if (local[a.tail] != absent && local[a.head] != absent) arcs.push_back({local[a.tail], local[a.head]});
    out.graph = Digraph(out.original.size(), arcs);
    return out;
}

}  // namespace sbss
