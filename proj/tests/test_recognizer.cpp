#include <gtest/gtest.h>

#include <random>

#include "sqroot/corpus.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/recognizer.hpp"
#include "sqroot/reference.hpp"
#include "support.hpp"

namespace sqroot {
namespace {

std::vector<Vertex> others(const Graph& h, Vertex a, Vertex drop) {
    std::vector<Vertex> out;
    for (Vertex w : h.neighbors(a)) {
        if (w != drop) out.push_back(w);
    }
    return out;
}

std::vector<Vertex> private_neighbors(const Graph& g, Vertex a, Vertex b) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(a)) {
        if (w != b && !g.has_edge(w, b)) out.push_back(w);
    }
    return out;
}

// Roots H of small, sparse graphs used by the property tests.
std::vector<Graph> sample_roots() {
    std::vector<Graph> roots = nonisomorphic_graphs_up_to(7);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Graph t = testing::random_tree(rng, 4 + i % 12);
        EdgeSet extra;
        for (int j = 0; j < i % 3; ++j) {
            const auto a = static_cast<Vertex>(rng() % t.vertex_count());
            const auto b = static_cast<Vertex>(rng() % t.vertex_count());
            if (a != b) extra.emplace(a, b);
        }
        roots.push_back(add_edges(t, extra));
    }
    roots.push_back(cycle_graph(7));
    roots.push_back(cycle_graph(9));
    return roots;
}

TEST(UvPartition, SquareOfC7) {
    const Graph g = square(cycle_graph(7));
    const auto p = uv_partition(g, 0, 1);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->x, std::vector<Vertex>{6});
    EXPECT_EQ(p->y, std::vector<Vertex>{2});
    EXPECT_TRUE(is_uv_partition(g, *p));
    EXPECT_FALSE(uv_partition(g, 0, 2));
}

TEST(UvPartition, TriangleHasNone) {
    const Graph k3 = complete_graph(3);
    for (const Edge& e : k3.edges()) { EXPECT_FALSE(uv_partition(k3, e.u, e.v)); }
}

TEST(UvPartition, NonEdgeIsRejected) { EXPECT_THROW(uv_partition(path_graph(3), 0, 2), std::invalid_argument); }

TEST(FindRecognizableEdge, Examples) {
    const auto hit = find_recognizable_edge(square(cycle_graph(7)));
    ASSERT_TRUE(hit);
    EXPECT_TRUE(cycle_graph(7).has_edge(hit->edge));
    EXPECT_EQ(hit->partition.x.size(), 1u);
    EXPECT_EQ(hit->partition.y.size(), 1u);
    EXPECT_FALSE(find_recognizable_edge(complete_graph(4)));
    EXPECT_FALSE(find_recognizable_edge(Graph(6)));
}

TEST(FindRecognizableEdge, MatchesSerialReference) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const Graph g = i % 2 ? square(testing::random_tree(rng, 3 + i % 25)) : testing::random_graph(rng, 4 + i % 10, 0.4);
        const auto a = find_recognizable_edge(g);
        const auto b = reference::find_recognizable_edge(g);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
            EXPECT_EQ(a->edge, b->edge);
            EXPECT_EQ(a->partition, b->partition);
            EXPECT_TRUE(is_uv_partition(g, a->partition));
        }
    }
}

// Non-pendant root edges outside short cycles are recognizable in the square,
// with the root neighbourhoods as the partition.
TEST(RecognizerProperty, LongCycleEdgesAreRecognizable) {
    std::size_t checked = 0;
    for (const Graph& h : sample_roots()) {
        const Graph g = square(h);
        for (const Edge& e : h.edges()) {
            if (h.degree(e.u) < 2 || h.degree(e.v) < 2 || testing::on_short_cycle(h, e, 6)) continue;
            ++checked;
            const UVPartition expected{e.u, e.v, others(h, e.u, e.v), others(h, e.v, e.u)};
            EXPECT_TRUE(is_uv_partition(g, expected));
            EXPECT_TRUE(uv_partition(g, e.u, e.v).has_value());
        }
    }
    EXPECT_GT(checked, 100u);
}

TEST(RecognizerProperty, NoRecognizableEdgeMeansShortCycles) {
    for (const Graph& h : sample_roots()) {
        if (find_recognizable_edge(square(h))) continue;
        for (const Edge& e : h.edges()) {
            if (h.degree(e.u) < 2 || h.degree(e.v) < 2) continue;
            EXPECT_TRUE(testing::on_short_cycle(h, e, 6));
        }
    }
}

// Every root agrees with what a partition predicts: uv is in, private edges
// are out, and the partition edges follow one of the two patterns.
TEST(RecognizerProperty, PartitionsPredictEveryRoot) {
    std::size_t partitions = 0;
    std::size_t twin_cases = 0;
    for (const Graph& h : sample_roots()) {
        if (h.vertex_count() > 9) continue;
        const Graph g = square(h);
        std::vector<UVPartition> found;
        for (const Edge& e : g.edges()) {
            for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (auto p = uv_partition(g, u, v)) found.push_back(*p);
            }
        }
        if (found.empty()) continue;
        const RootEnumeration roots = enumerate_roots(g, 20000);
        ASSERT_TRUE(roots.complete);
        for (const UVPartition& p : found) {
            ++partitions;
            const bool twins = are_true_twins(g, p.u, p.v);
            twin_cases += twins;
            for (const Graph& r : roots.roots) {
                EXPECT_TRUE(r.has_edge(p.u, p.v));
                for (Vertex w : private_neighbors(g, p.u, p.v)) { EXPECT_FALSE(r.has_edge(w, p.u)); }
                for (Vertex w : private_neighbors(g, p.v, p.u)) { EXPECT_FALSE(r.has_edge(w, p.v)); }
                const auto pattern = [&](const std::vector<Vertex>& near_u, const std::vector<Vertex>& near_v) {
                    for (Vertex x : near_u) {
                        if (!r.has_edge(p.u, x) || r.has_edge(p.v, x)) return false;
                    }
                    for (Vertex y : near_v) {
                        if (!r.has_edge(p.v, y) || r.has_edge(p.u, y)) return false;
                    }
                    return true;
                };
                if (twins) {
                    EXPECT_TRUE(pattern(p.x, p.y) || pattern(p.y, p.x));
                } else {
                    EXPECT_TRUE(pattern(p.x, p.y));
                }
            }
        }
    }
    EXPECT_GT(partitions, 100u);
    EXPECT_GT(twin_cases, 0u);
}

TEST(RecognizerProperty, SwappedPartitionFailsWithPrivateNeighbours) {
    std::size_t checked = 0;
    for (const Graph& h : sample_roots()) {
        const Graph g = square(h);
        for (const Edge& e : g.edges()) {
            const auto p = uv_partition(g, e.u, e.v);
            if (!p) continue;
            if (private_neighbors(g, p->u, p->v).empty() && private_neighbors(g, p->v, p->u).empty()) continue;
            ++checked;
            EXPECT_FALSE(is_uv_partition(g, UVPartition{p->u, p->v, p->y, p->x}));
        }
    }
    EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace sqroot
