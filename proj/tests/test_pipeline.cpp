#include <gtest/gtest.h>

#include <random>

#include "sqroot/corpus.hpp"
#include "sqroot/mad.hpp"
#include "sqroot/pipeline.hpp"
#include "sqroot/tw_dp.hpp"
#include "support.hpp"

namespace sqroot {
namespace {

TEST(MadSolve, SquareOfC7) {
    const PipelineResult r = mad_solve(square(cycle_graph(7)));
    ASSERT_EQ(r.verdict, Verdict::Yes);
    EXPECT_EQ(*r.root, cycle_graph(7));
    EXPECT_EQ(*r.mad, Rational(4));
    EXPECT_GT(r.reduction_steps, 0u);
}

TEST(MadSolve, DenseInputIsNotApplicable) {
    const PipelineResult r = mad_solve(complete_graph(6));
    EXPECT_EQ(r.verdict, Verdict::NotApplicable);
    EXPECT_EQ(*r.mad, Rational(5));
    EXPECT_FALSE(r.root);
}

TEST(MadSolve, C4IsNo) { EXPECT_EQ(mad_solve(cycle_graph(4)).verdict, Verdict::No); }

TEST(MadSolve, AgreesWithOracleOnSparseCorpus) {
    std::mt19937_64 rng(91);
    std::size_t eligible = 0;
    for (const Graph& g : nonisomorphic_graphs_up_to(7)) {
        const LabeledInstance inst = testing::random_labels(rng, g, g.edge_count() % 3);
        const PipelineResult r = mad_solve_labeled(inst);
        if (r.verdict == Verdict::NotApplicable) {
            EXPECT_GE(max_average_degree(g), kMadThreshold);
            continue;
        }
        ++eligible;
        ASSERT_EQ(r.verdict, solve_labeled(inst, {kUnlimitedNodes}).verdict);
        if (r.root) { EXPECT_TRUE(verify_solution(inst, *r.root)); }
    }
    EXPECT_GT(eligible, 500u);
}

TEST(TwSolve, AgreesWithOracle) {
    std::mt19937_64 rng(92);
    for (int i = 0; i < 150; ++i) {
        const Graph g = i % 2 ? square(testing::random_tree(rng, 4 + i % 12)) : testing::random_graph(rng, 3 + i % 8, 0.5);
        const LabeledInstance inst = testing::random_labels(rng, g, i % 4);
        const PipelineResult r = tw_solve(inst, kMaxDpBagSize - 1);
        if (r.verdict == Verdict::NotApplicable) continue;
        ASSERT_EQ(r.verdict, solve_labeled(inst, {kUnlimitedNodes}).verdict);
        if (r.root) { EXPECT_TRUE(verify_solution(inst, *r.root)); }
        if (r.width) { EXPECT_LE(*r.width, kMaxDpBagSize - 1); }
    }
}

TEST(TwSolve, WidthBoundIsEnforced) {
    EXPECT_EQ(tw_solve({complete_graph(8), {}, {{0, 1}}}, 3).verdict, Verdict::NotApplicable);
}

}  // namespace
}  // namespace sqroot
