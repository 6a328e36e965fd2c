#pragma once

#include <optional>

#include "sqroot/graph.hpp"
#include "sqroot/recognizer.hpp"

// Serial reference versions of the OpenMP kernels. They follow the
// definitions as literally as possible and exist for tests and benchmarks.
namespace sqroot::reference {

/// Pairwise BFS distances, edge iff distance is 1 or 2.
Graph square(const Graph& g);

std::optional<RecognizableEdge> find_recognizable_edge(const Graph& g);

/// Maximum of 2|E(G[S])| / |S| over all nonempty S, one subset at a time.
Rational max_average_degree_exhaustive(const Graph& g);

}  // namespace sqroot::reference
