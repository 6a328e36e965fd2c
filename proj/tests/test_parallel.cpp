#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "sqroot/kernel.hpp"
#include "sqroot/mad.hpp"
#include "sqroot/recognizer.hpp"
#include "sqroot/reference.hpp"
#include "support.hpp"

namespace sqroot {
namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

private:
    int saved_ = 1;
};

TEST_P(ThreadCount, SquareMatchesReference) {
    std::mt19937_64 rng(111);
    for (int i = 0; i < 60; ++i) {
        const Graph g = i % 3 ? testing::random_graph(rng, 5 + i * 3, 0.08) : testing::random_tree(rng, 20 + i * 5);
        EXPECT_EQ(square(g), reference::square(g));
    }
}

TEST_P(ThreadCount, RecognizerMatchesReference) {
    std::mt19937_64 rng(112);
    for (int i = 0; i < 80; ++i) {
        const Graph g = square(i % 2 ? testing::random_tree(rng, 4 + i) : testing::random_graph(rng, 4 + i % 20, 0.15));
        const auto fast = find_recognizable_edge(g);
        const auto slow = reference::find_recognizable_edge(g);
        ASSERT_EQ(fast.has_value(), slow.has_value());
        if (fast) {
            EXPECT_EQ(fast->edge, slow->edge);
            EXPECT_EQ(fast->partition, slow->partition);
        }
    }
}

TEST_P(ThreadCount, MadMatchesReference) {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 30; ++i) {
        const Graph g = testing::random_graph(rng, 1 + i % 16, 0.1 + 0.03 * i);
        EXPECT_EQ(max_average_degree_exhaustive(g), reference::max_average_degree_exhaustive(g));
    }
}

TEST_P(ThreadCount, ComponentReduceIsDeterministic) {
    std::mt19937_64 rng(114);
    std::vector<Edge> edges;
    std::size_t offset = 0;
    for (int c = 0; c < 12; ++c) {
        const Graph part = square(testing::random_tree(rng, 3 + c % 9));
        for (const Edge& e : part.edges()) {
            edges.emplace_back(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
        }
        offset += part.vertex_count();
    }
    const LabeledInstance inst = testing::random_labels(rng, Graph(offset, edges), 6);
    const ComponentReduction serial = component_reduce(inst, {{}, 1});
    const ComponentReduction parallel = component_reduce(inst, {{}, GetParam()});
    EXPECT_EQ(serial.infeasible, parallel.infeasible);
    EXPECT_EQ(serial.solved_edges, parallel.solved_edges);
    EXPECT_EQ(serial.residual, parallel.residual);
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));

}  // namespace
}  // namespace sqroot
