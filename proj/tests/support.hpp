#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sqroot/corpus.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/kernel.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/reduction.hpp"

namespace sqroot::testing {

/// Test-only planarity oracle (the library itself never tests planarity).
inline bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.vertex_count());
    for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (coin(rng)) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    }
    return Graph(n, edges);
}

inline Graph random_tree(std::mt19937_64& rng, std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)));
    }
    return Graph(n, edges);
}

/// Up to `count` labeled edges drawn without repetition, each forced or
/// forbidden with equal probability.
inline LabeledInstance random_labels(std::mt19937_64& rng, const Graph& g, std::size_t count) {
    LabeledInstance inst{g, {}, {}};
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = 0; i < std::min(count, edges.size()); ++i) {
        (rng() & 1 ? inst.forced : inst.forbidden).insert(edges[i]);
    }
    return inst;
}

/// Outcome of reduction followed by solving every remaining component with
/// the oracle and lifting the result back.
struct ReducedSolve {
    Verdict verdict = Verdict::No;
    std::optional<Graph> root;
    LabeledInstance reduced;
    bool reduced_fixpoint = true;
};

inline ReducedSolve solve_via_reduction(const LabeledInstance& inst) {
    ReducedSolve out;
    const ReductionResult r = edge_reduce(inst);
    if (r.infeasible) return out;
    out.reduced = r.instance;
    out.reduced_fixpoint = !find_recognizable_edge(r.instance.graph).has_value();
    const SolveResult s = solve_labeled(r.instance, {kUnlimitedNodes});
    out.verdict = s.verdict;
    if (s.verdict == Verdict::Yes) out.root = restore_solution(r.trace, *s.root);
    return out;
}

/// True when the non-pendant edge e of h lies on a cycle of length ≤ limit.
inline bool on_short_cycle(const Graph& h, Edge e, std::size_t limit) {
    const Graph rest = remove_edges(h, EdgeSet{e});
    const std::size_t d = distance(rest, e.u, e.v);
    return d != kUnreachable && d + 1 <= limit;
}

}  // namespace sqroot::testing
