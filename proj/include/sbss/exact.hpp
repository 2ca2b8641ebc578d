#pragma once

#include <sbss/connectivity.hpp>
#include <sbss/digraph.hpp>
#include <sbss/random.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sbss {

inline constexpr std::size_t default_exact_cap = 22;

template <typename Witness>
struct ExactResult {
    std::size_t optimum_size = 0;
    Witness witness;
    /// Candidate subsets that reached the feasibility test.
    std::uint64_t instances_explored = 0;
};

using ExactArcResult = ExactResult<ArcSubset>;
using ExactEdgeResult = ExactResult<std::vector<Edge>>;

namespace detail {

// Enumerates k-subsets of items 0..m-1 in lexicographic order of their index
// sequences and returns the first one accepted by `feasible`. Subsets that
// cannot meet the per-vertex degree floor are never completed.
//
// Item i touches vertices first[i] and second[i]. In directed mode first is
// the tail (counts toward out-degree) and second the head (in-degree); in
// undirected mode both count toward one degree.
class SubsetSearch {
public:
    using Feasible = std::function<bool(std::span<const std::size_t>)>;

    SubsetSearch(std::size_t n, std::vector<VertexId> first, std::vector<VertexId> second, bool directed,
                 std::size_t floor)
        : n_(n), first_(std::move(first)), second_(std::move(second)), directed_(directed), floor_(floor) {}

    std::optional<std::vector<std::size_t>> run(std::size_t k, const Feasible& feasible) {
        const std::size_t m = first_.size();
        if (k > m) return std::nullopt;
        chosen_a_.assign(n_, 0);
        chosen_b_.assign(n_, 0);
        avail_a_.assign(n_, 0);
        avail_b_.assign(n_, 0);
        for (std::size_t i = 0; i < m; ++i) {
            ++avail_a_[first_[i]];
            ++(directed_ ? avail_b_ : avail_a_)[second_[i]];
        }
        for (VertexId v = 0; v < n_; ++v)
            if (avail_a_[v] < floor_ || (directed_ && avail_b_[v] < floor_)) return std::nullopt;
        deficit_a_ = floor_ > 0 ? n_ * floor_ : 0;
        deficit_b_ = directed_ ? deficit_a_ : 0;
        picked_.clear();
        k_ = k;
        feasible_ = &feasible;
        found_.reset();
        recurse(0);
        return found_;
    }

    std::uint64_t explored() const noexcept { return explored_; }

private:
    std::size_t& chosen_of(VertexId v, bool b) { return b ? chosen_b_[v] : chosen_a_[v]; }
    std::size_t& avail_of(VertexId v, bool b) { return b ? avail_b_[v] : avail_a_[v]; }
    std::size_t& deficit(bool b) { return b ? deficit_b_ : deficit_a_; }

    void add(VertexId v, bool b) {
        if (chosen_of(v, b)++ < floor_) --deficit(b);
    }
    void remove(VertexId v, bool b) {
        if (--chosen_of(v, b) < floor_) ++deficit(b);
    }

    bool bounded(std::size_t left) const {
        // Directed: one arc fixes at most one out and one in deficit.
        // Undirected: one edge fixes at most two units of degree deficit.
        if (directed_) return deficit_a_ <= left && deficit_b_ <= left;
        return deficit_a_ <= 2 * left;
    }

    void recurse(std::size_t pos) {
        if (found_) return;
        const std::size_t left = k_ - picked_.size();
        if (!bounded(left)) return;
        if (left == 0) {
            ++explored_;
            if ((*feasible_)(picked_)) found_ = picked_;
            return;
        }
        if (first_.size() - pos < left) return;

        const VertexId a = first_[pos];
        const VertexId b = second_[pos];
        const bool b_side = directed_;

        picked_.push_back(pos);
        add(a, false);
        add(b, b_side);
        recurse(pos + 1);
        remove(b, b_side);
        remove(a, false);
        picked_.pop_back();
        if (found_) return;

        --avail_of(a, false);
        --avail_of(b, b_side);
        if (avail_of(a, false) >= floor_ && avail_of(b, b_side) >= floor_) recurse(pos + 1);
        ++avail_of(b, b_side);
        ++avail_of(a, false);
    }

    std::size_t n_;
    std::vector<VertexId> first_, second_;
    bool directed_;
    std::size_t floor_;
    std::vector<std::size_t> chosen_a_, chosen_b_, avail_a_, avail_b_;
    std::size_t deficit_a_ = 0, deficit_b_ = 0;
    std::vector<std::size_t> picked_;
    std::size_t k_ = 0;
    const Feasible* feasible_ = nullptr;
    std::optional<std::vector<std::size_t>> found_;
    std::uint64_t explored_ = 0;
};

inline ExactArcResult exact_arc_search(const Digraph& g, std::size_t cap,
                                       const std::function<bool(const Digraph&)>& predicate) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.arc_count();
    if (m > cap) throw CapExceeded(m, cap);

    std::vector<VertexId> tails, heads;
    for (const Arc& a : g.arcs()) {
        tails.push_back(a.tail);
        heads.push_back(a.head);
    }
    const std::size_t floor = n >= 2 ? 1 : 0;
    SubsetSearch search(n, tails, heads, true, floor);
    std::vector<Arc> scratch;
    SubsetSearch::Feasible feasible = [&](std::span<const std::size_t> picked) {
        scratch.clear();
        for (std::size_t i : picked) scratch.push_back(g.arc(i));
        return predicate(Digraph(n, scratch));
    };
    for (std::size_t k = n >= 2 ? n : 0; k <= m; ++k) {
        if (auto hit = search.run(k, feasible)) {
            ExactArcResult r{k, ArcSubset(g, *hit), search.explored()};
            return r;
        }
    }
    throw PreconditionError("exact search: no feasible arc subset exists");
}

}  // namespace detail

/// Minimum strongly biconnected spanning subgraph by exhaustive search over
/// arc subsets of increasing size. The witness is the lexicographically
/// smallest optimal index sequence.
inline ExactArcResult exact_msbss(const Digraph& g, std::size_t cap = default_exact_cap) {
    if (auto why = strong_biconnectivity_failure(g))
        throw PreconditionError("exact_msbss: input is not strongly biconnected: " + *why);
    return detail::exact_arc_search(g, cap, [](const Digraph& h) { return is_strongly_biconnected(h); });
}

/// Minimum strongly connected spanning subgraph, same search.
inline ExactArcResult exact_msccs(const Digraph& g, std::size_t cap = default_exact_cap) {
    if (!is_strongly_connected(g)) throw PreconditionError("exact_msccs: input is not strongly connected");
    return detail::exact_arc_search(g, cap, [](const Digraph& h) { return is_strongly_connected(h); });
}

/// Minimum biconnected spanning subgraph of an undirected graph.
inline ExactEdgeResult exact_2vcss(const UndirectedView& u, std::size_t cap = default_exact_cap) {
    if (!is_biconnected(u)) throw PreconditionError("exact_2vcss: input is not biconnected");
    const std::size_t n = u.vertex_count();
    const std::size_t m = u.edge_count();
    if (m > cap) throw CapExceeded(m, cap);

    std::vector<VertexId> a, b;
    for (const Edge& e : u.edges()) {
        a.push_back(e.u);
        b.push_back(e.w);
    }
    const std::size_t floor = n >= 3 ? 2 : (n == 2 ? 1 : 0);
    detail::SubsetSearch search(n, a, b, false, floor);
    std::vector<Edge> scratch;
    detail::SubsetSearch::Feasible feasible = [&](std::span<const std::size_t> picked) {
        scratch.clear();
        for (std::size_t i : picked) scratch.push_back(u.edge(i));
        return is_biconnected(UndirectedView(n, scratch));
    };
    // A biconnected spanning graph on n >= 3 vertices has at least n edges.
    const std::size_t lower = n >= 3 ? n : (n == 2 ? 1 : 0);
    for (std::size_t k = lower; k <= m; ++k) {
        if (auto hit = search.run(k, feasible)) {
            ExactEdgeResult r;
            r.optimum_size = k;
            for (std::size_t i : *hit) r.witness.push_back(u.edge(i));
            r.instances_explored = search.explored();
            return r;
        }
    }
    throw PreconditionError("exact_2vcss: no feasible edge subset exists");
}

struct MinimalityReport {
    ArcSubset minimal_solution;
    std::size_t size = 0;
    std::size_t n = 0;

    /// size / (2n) as an unreduced fraction.
    std::size_t ratio_numerator() const noexcept { return size; }
    std::size_t ratio_denominator() const noexcept { return 2 * n; }
    double ratio_to_2n() const noexcept { return n == 0 ? 0.0 : static_cast<double>(size) / (2.0 * n); }
};

/// Deletes arcs greedily, keeping each deletion that preserves strong
/// biconnectivity. Default order is descending arc index; `shuffle_seed`
/// randomizes it. One pass suffices because the property is monotone under
/// adding arcs, so the result is 1-minimal.
inline MinimalityReport minimalize(const Digraph& g, const ArcSubset& start,
                                   std::optional<std::uint64_t> shuffle_seed = std::nullopt) {
    if (!start.belongs_to(g)) throw ContractViolation("minimalize: start belongs to a different graph");
    if (!is_strongly_biconnected(subgraph(g, start)))
        throw PreconditionError("minimalize: start subgraph is not strongly biconnected");

    auto order = start.indices();
    std::reverse(order.begin(), order.end());
    if (shuffle_seed) {
        Rng rng(*shuffle_seed);
        rng.shuffle(order);
    }
    ArcSubset current = start;
    for (ArcIndex a : order) {
        current.erase(a);
        if (!is_strongly_biconnected(subgraph(g, current))) current.insert(a);
    }
    MinimalityReport r{current, current.size(), g.vertex_count()};
    return r;
}

}  // namespace sbss
