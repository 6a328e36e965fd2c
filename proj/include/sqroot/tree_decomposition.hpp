#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each sorted
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

    /// Largest bag size minus one; -1 when every bag is empty.
    int width() const;
};

/// Checks that the tree is a tree, that bags cover V(G), that every edge has
/// a bag holding both ends, and that each vertex's bags form a subtree.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition of square(root) read off the block–cut-vertex tree of the
/// root: one bag V(Q) per block Q and one bag N[c] per cut vertex c.
/// Throws std::invalid_argument when the root is disconnected or empty.
TreeDecomposition h_tree_decomposition(const Graph& root);

/// Bag {v} ∪ (later fill neighbours of v) for each v, attached to the bag of
/// its earliest later neighbour; component roots are chained together.
/// `order` must be a permutation of V(G).
TreeDecomposition decomposition_from_elimination(const Graph& g, std::span<const Vertex> order);

/// Exact test for tw(G) ≤ k. Tries the greedy min-fill order first, then a
/// branch-and-bound over elimination orders per connected component, with
/// safe elimination of simplicial vertices and memoised dead eliminated-sets.
/// Returns a width ≤ k decomposition or nullopt when tw(G) > k.
std::optional<TreeDecomposition> treewidth_at_most(const Graph& g, std::size_t k);

/// Smallest k for which treewidth_at_most succeeds.
std::size_t treewidth(const Graph& g);

}  // namespace sqroot
