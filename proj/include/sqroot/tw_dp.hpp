#pragma once

#include <cstddef>
#include <optional>

#include "sqroot/graph.hpp"
#include "sqroot/reduction.hpp"
#include "sqroot/tree_decomposition.hpp"
#include "sqroot/verdict.hpp"

namespace sqroot {

/// Largest bag the DP accepts (bag edges are packed into 64-bit masks).
inline constexpr std::size_t kMaxDpBagSize = 11;

struct TwSolveResult {
    Verdict verdict = Verdict::No;
    std::optional<Graph> root;
    std::size_t states = 0;  // table entries over all nice nodes
};

/// Dynamic programming over a nice version of `td`.
///
/// A table entry records, for the current bag: which bag-internal G-edges
/// are root edges, which bag G-edges are already covered (by themselves or
/// by a root path a–w–b seen so far), and which bag vertices already have a
/// root neighbour that has been forgotten. A vertex may only be forgotten
/// once all its bag edges are covered; a root edge to a vertex with a
/// forgotten root neighbour, or two forgotten root neighbours arriving from
/// different join branches, would create a root path between vertices that
/// never share a bag and are therefore non-adjacent in G.
///
/// Throws std::invalid_argument when `td` is not a valid decomposition of
/// inst.graph or a bag exceeds kMaxDpBagSize.
TwSolveResult solve_labeled_tw(const LabeledInstance& inst, const TreeDecomposition& td);

}  // namespace sqroot
