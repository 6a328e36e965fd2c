#pragma once

#include <cstddef>
#include <optional>

#include "sqroot/graph.hpp"
#include "sqroot/reduction.hpp"
#include "sqroot/verdict.hpp"

namespace sqroot {

struct PipelineResult {
    Verdict verdict = Verdict::No;
    std::optional<Graph> root;
    std::optional<Rational> mad;         // set by mad_solve
    std::optional<std::size_t> width;    // width of the decomposition used
    std::size_t reduction_steps = 0;
};

/// Width used after edge reduction when the density gate holds.
inline constexpr std::size_t kReducedWidthBound = 5;

/// Density-gated exact solver. NotApplicable when mad(G) ≥ 46/11.
/// Otherwise edge reduction, a width-≤5 decomposition of the reduced graph
/// (none means No), the tree-decomposition DP, and trace restoration.
PipelineResult mad_solve(const Graph& g);
PipelineResult mad_solve_labeled(const LabeledInstance& inst);

/// Same reduction and DP without the density gate, for any input whose
/// reduced graph has treewidth ≤ max_width. NotApplicable above that.
PipelineResult tw_solve(const LabeledInstance& inst, std::size_t max_width);

}  // namespace sqroot
