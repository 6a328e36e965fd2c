#pragma once

#include <optional>
#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

/// Witness that the ordered pair (u, v) spans a recognizable edge.
///
/// x and y split N(u) ∩ N(v) into two nonempty cliques with no edge between
/// them. Every vertex of N(u) \ N[v] sees some vertex of x and nothing in y;
/// symmetrically for N(v) \ N[u] with the roles of x and y exchanged.
struct UVPartition {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Vertex> x;
    std::vector<Vertex> y;

    bool operator==(const UVPartition&) const = default;
};

struct RecognizableEdge {
    Edge edge;
    UVPartition partition;
};

/// Checks every condition of a (u, v)-partition independently of how it was
/// found. Used by tests and by the reduction as a postcondition.
bool is_uv_partition(const Graph& g, const UVPartition& p);

/// Partition for the ordered pair (u, v), trying the component of
/// G[N(u) ∩ N(v)] holding the smallest vertex as x first.
/// Throws std::invalid_argument when uv is not an edge.
std::optional<UVPartition> uv_partition(const Graph& g, Vertex u, Vertex v);

/// First recognizable edge in lexicographic edge order; for each edge the
/// pair (min, max) is tried before (max, min). The scan over edges runs
/// under OpenMP and keeps the lowest-index hit, so the result matches
/// reference::find_recognizable_edge exactly.
std::optional<RecognizableEdge> find_recognizable_edge(const Graph& g);

}  // namespace sqroot
