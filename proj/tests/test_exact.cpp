#include "corpus.hpp"
#include "oracles.hpp"

#include <sbss/exact.hpp>
#include <sbss/instances.hpp>

#include <gtest/gtest.h>

namespace {

using namespace sbss;

Digraph triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph bidirected_triangle() { return Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}); }

TEST(ExactMsbss, FigureOneIsFifteen) {
    auto g = figure1();
    auto r = exact_msbss(g);
    EXPECT_EQ(r.optimum_size, 15u);
    EXPECT_EQ(r.witness.size(), 15u);
    EXPECT_TRUE(is_strongly_biconnected(subgraph(g, r.witness)));
    // Lexicographically smallest optimum drops the last arc, 7 -> 8.
    EXPECT_EQ(r.witness, corpus::figure1_c(g));
    EXPECT_GT(r.instances_explored, 0u);
}

TEST(ExactMsbss, Small) {
    EXPECT_EQ(exact_msbss(triangle()).optimum_size, 3u);
    EXPECT_EQ(exact_msbss(Digraph(2, {{0, 1}, {1, 0}})).optimum_size, 2u);
    EXPECT_EQ(exact_msbss(Digraph(1, std::span<const Arc>{})).optimum_size, 0u);
}

TEST(ExactMsbss, HamiltonianWithChords) {
    auto g = gen_hamiltonian_chords(6, 3, 7);
    auto r = exact_msbss(g);
    EXPECT_EQ(r.optimum_size, 6u);
}

TEST(ExactMsbss, CapAndPrecondition) {
    auto g = gen_random_sb(8, 30, 3);
    try {
        exact_msbss(g);
        FAIL() << "expected CapExceeded";
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.size(), 30u);
        EXPECT_EQ(e.cap(), default_exact_cap);
        EXPECT_NE(std::string(e.what()).find("instance too large for exact solver"), std::string::npos);
    }
    EXPECT_THROW(exact_msbss(figure1(), 10), CapExceeded);
    auto fig = figure1();
    EXPECT_THROW(exact_msbss(subgraph(fig, corpus::figure1_b(fig))), PreconditionError);
}

TEST(ExactMsccs, FigureOneIsFourteen) {
    auto g = figure1();
    auto r = exact_msccs(g);
    EXPECT_EQ(r.optimum_size, 14u);
    EXPECT_EQ(r.witness, corpus::figure1_b(g));
}

TEST(ExactMsccs, Small) {
    EXPECT_EQ(exact_msccs(triangle()).optimum_size, 3u);
    EXPECT_EQ(exact_msccs(bidirected_triangle()).optimum_size, 3u);
    EXPECT_THROW(exact_msccs(Digraph(2, {{0, 1}})), PreconditionError);
}

TEST(Exact2vcss, Small) {
    EXPECT_EQ(exact_2vcss(UndirectedView(3, {{0, 1}, {1, 2}, {0, 2}})).optimum_size, 3u);
    UndirectedView k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto r = exact_2vcss(k4);
    EXPECT_EQ(r.optimum_size, 4u);
    EXPECT_TRUE(is_biconnected(UndirectedView(4, r.witness)));
    EXPECT_EQ(exact_2vcss(UndirectedView(2, {{0, 1}})).optimum_size, 1u);
    EXPECT_THROW(exact_2vcss(UndirectedView(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST(Exact2vcss, FigureOneUnderlying) {
    auto r = exact_2vcss(underlying(figure1()));
    // Frozen from plain enumeration in the networkx oracle.
    EXPECT_EQ(r.optimum_size, 15u);
    EXPECT_LE(r.optimum_size, exact_msbss(figure1()).optimum_size);
}

// The pruned ascending search must agree with plain 2^m enumeration.
TEST(ExactSearch, MatchesPlainEnumeration) {
    for (const auto& g : corpus::random_sb(40, 3, 6, 13, 41)) {
        const std::size_t n = g.vertex_count();
        std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
        auto h = oracle::min_subset<Arc>(arcs, [n](const std::vector<Arc>& s) { return oracle::strongly_biconnected(n, s); });
        auto i = oracle::min_subset<Arc>(arcs, [n](const std::vector<Arc>& s) { return oracle::strongly_connected(n, s); });
        EXPECT_EQ(exact_msbss(g).optimum_size, h.value());
        EXPECT_EQ(exact_msccs(g).optimum_size, i.value());

        auto u = underlying(g);
        std::vector<Edge> edges(u.edges().begin(), u.edges().end());
        auto s = oracle::min_subset<Edge>(edges, [n](const std::vector<Edge>& e) { return oracle::biconnected(n, e); });
        EXPECT_EQ(exact_2vcss(u).optimum_size, s.value());
    }
}

TEST(Minimalize, FigureOne) {
    auto g = figure1();
    auto r = minimalize(g, ArcSubset::all(g));
    EXPECT_EQ(r.size, 15u);
    EXPECT_FALSE(r.minimal_solution.contains(corpus::arc_of(g, 7, 8)));
    EXPECT_EQ(r.ratio_numerator(), 15u);
    EXPECT_EQ(r.ratio_denominator(), 26u);
}

TEST(Minimalize, EitherDeletionOrderLeavesFifteen) {
    auto g = figure1();
    // Removing 12 -> 2 first keeps 7 -> 8 and vice versa.
    for (auto first : {corpus::arc_of(g, 12, 2), corpus::arc_of(g, 7, 8)}) {
        auto start = ArcSubset::all(g);
        start.erase(first);
        if (!is_strongly_biconnected(subgraph(g, start))) continue;
        auto r = minimalize(g, start);
        EXPECT_EQ(r.size, 15u);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(minimalize(g, ArcSubset::all(g), seed).size, 15u);
}

TEST(Minimalize, Triangles) {
    auto t = triangle();
    auto r = minimalize(t, ArcSubset::all(t));
    EXPECT_EQ(r.size, 3u);
    EXPECT_DOUBLE_EQ(r.ratio_to_2n(), 0.5);

    auto b = bidirected_triangle();
    auto rb = minimalize(b, ArcSubset::all(b));
    EXPECT_EQ(rb.size, 3u);
    EXPECT_TRUE(is_strongly_connected(subgraph(b, rb.minimal_solution)));
}

TEST(Minimalize, OutputIsOneMinimal) {
    for (const auto& g : corpus::random_sb(40, 3, 10, 40, 43)) {
        auto r = minimalize(g, ArcSubset::all(g), 5);
        for (ArcIndex a : r.minimal_solution.indices()) {
            auto less = r.minimal_solution;
            less.erase(a);
            EXPECT_FALSE(is_strongly_biconnected(subgraph(g, less)));
        }
    }
}

TEST(Minimalize, Precondition) {
    auto g = figure1();
    EXPECT_THROW(minimalize(g, corpus::figure1_b(g)), PreconditionError);
}

}  // namespace
