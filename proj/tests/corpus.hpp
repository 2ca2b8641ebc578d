#pragma once

#include <sbss/digraph.hpp>
#include <sbss/instances.hpp>
#include <sbss/random.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace corpus {

using sbss::ArcIndex;
using sbss::ArcSubset;
using sbss::Digraph;

/// Arc index of tail -> head given as 1-indexed labels.
inline ArcIndex arc_of(const Digraph& g, std::size_t tail_label, std::size_t head_label) {
    return g.find_arc(tail_label - 1, head_label - 1).value();
}

/// All arcs of `g` except the listed (1-indexed) ones.
inline ArcSubset all_but(const Digraph& g, std::initializer_list<std::pair<std::size_t, std::size_t>> removed) {
    auto s = ArcSubset::all(g);
    for (auto [t, h] : removed) s.erase(arc_of(g, t, h));
    return s;
}

inline ArcSubset figure1_b(const Digraph& fig) { return all_but(fig, {{12, 2}, {7, 8}}); }
inline ArcSubset figure1_c(const Digraph& fig) { return all_but(fig, {{7, 8}}); }

/// Seeded random strongly biconnected instances with n in [n_min, n_max] and m <= m_cap.
inline std::vector<Digraph> random_sb(std::size_t count, std::size_t n_min, std::size_t n_max, std::size_t m_cap,
                                      std::uint64_t seed) {
    sbss::Rng rng(seed);
    std::vector<Digraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = n_min + rng.below(n_max - n_min + 1);
        std::size_t max_m = std::min(n * (n - 1), std::max(m_cap, n));
        std::size_t m = n + rng.below(max_m - n + 1);
        out.push_back(sbss::gen_random_sb(n, m, rng.next()));
    }
    return out;
}

}  // namespace corpus
