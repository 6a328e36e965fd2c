#pragma once

#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

/// The density gate for the bounded-treewidth pipeline.
inline const Rational kMadThreshold{46, 11};

/// Exact maximum average degree, max over nonempty S of 2|E(G[S])|/|S|.
///
/// Dinkelbach iteration on the density λ: each round solves the min-cut
/// network (source → edge node capacity q, edge node → endpoints unbounded,
/// vertex → sink capacity p, with λ = p/q) whose source side is a set
/// maximising q|E(S)| − p|S|; stops when no set beats λ.
/// Throws std::invalid_argument on the empty graph.
Rational max_average_degree(const Graph& g);

/// A vertex set attaining max_average_degree (sorted).
std::vector<Vertex> densest_subgraph(const Graph& g);

/// Same value by sweeping all 2^n − 1 vertex subsets with an OpenMP
/// reduction. Throws std::invalid_argument for n = 0 or n > 30.
Rational max_average_degree_exhaustive(const Graph& g);

}  // namespace sqroot
