#include <gtest/gtest.h>

#include <random>

#include "sqroot/mad.hpp"
#include "sqroot/reference.hpp"
#include "support.hpp"

namespace sqroot {
namespace {

TEST(Mad, Examples) {
    EXPECT_EQ(max_average_degree(complete_graph(4)), Rational(3));
    EXPECT_EQ(max_average_degree(cycle_graph(7)), Rational(2));
    EXPECT_EQ(max_average_degree(square(cycle_graph(7))), Rational(4));
    EXPECT_EQ(max_average_degree(Graph(3)), Rational(0));
    EXPECT_THROW(max_average_degree(Graph()), std::invalid_argument);
}

TEST(Mad, DenseCoreBeatsSparseTail) {
    // K5 plus a long pendant path: the K5 alone is densest.
    std::vector<Edge> edges = complete_graph(5).edges();
    for (Vertex v = 5; v < 15; ++v) edges.emplace_back(v - 1, v);
    const Graph g(15, edges);
    EXPECT_EQ(max_average_degree(g), Rational(4));
    EXPECT_EQ(densest_subgraph(g), (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Mad, ThresholdIsExact) {
    EXPECT_LT(Rational(4), kMadThreshold);
    EXPECT_GE(max_average_degree(complete_graph(6)), kMadThreshold);
    EXPECT_LT(Rational(41, 10), kMadThreshold);
    EXPECT_GT(Rational(42, 10), kMadThreshold);
}

TEST(Mad, FlowMatchesSubsetSweep) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 400; ++i) {
        const Graph g = testing::random_graph(rng, 1 + i % 14, 0.05 + 0.9 * (i % 17) / 16.0);
        const Rational flow = max_average_degree(g);
        EXPECT_EQ(flow, reference::max_average_degree_exhaustive(g));
        EXPECT_EQ(flow, max_average_degree_exhaustive(g));
        EXPECT_GE(flow, average_degree(g));
        const auto set = densest_subgraph(g);
        EXPECT_EQ(average_degree(induced_subgraph(g, set)), flow);
    }
}

TEST(Mad, ExhaustiveRejectsLargeGraphs) {
    EXPECT_THROW(max_average_degree_exhaustive(Graph(31)), std::invalid_argument);
    EXPECT_THROW(reference::max_average_degree_exhaustive(Graph()), std::invalid_argument);
}

}  // namespace
}  // namespace sqroot
