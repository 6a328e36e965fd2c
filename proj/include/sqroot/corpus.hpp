#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

/// Canonical adjacency code: the minimum upper-triangle bit string over all
/// vertex orders that list vertices by non-increasing degree. Supports
/// n ≤ 11 (55 pair bits).
std::uint64_t canonical_code(const Graph& g);

/// Relabels g so that its adjacency code equals canonical_code(g).
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n vertices
/// with maximum degree ≤ max_degree, by orderly vertex augmentation with
/// canonical-code deduplication. Sorted by (edge count, code).
std::vector<Graph> nonisomorphic_graphs(std::size_t n, std::size_t max_degree = SIZE_MAX);

/// Concatenation of nonisomorphic_graphs(k) for k = 1..max_n.
std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, std::size_t max_degree = SIZE_MAX);

}  // namespace sqroot
