#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "sqroot/graph.hpp"
#include "sqroot/reduction.hpp"
#include "sqroot/verdict.hpp"

namespace sqroot {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

struct SearchLimits {
    std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SolveResult {
    Verdict verdict = Verdict::No;
    std::optional<Graph> root;
    std::uint64_t nodes = 0;
};

/// Exact backtracking solver for Square Root with Labels.
///
/// Every G-edge is a candidate root edge. Two propagation rules prune the
/// search: a root path a–w–b with ab ∉ E(G) is impossible, and a G-edge
/// that is neither a root edge nor spanned by a root path must still be
/// covered by its last live option. Branching picks the uncovered G-edge with
/// the fewest live options (lowest edge index on ties). Yes answers are
/// checked with verify_solution before they are returned.
SolveResult solve_labeled(const LabeledInstance& inst, SearchLimits limits = {});

struct RootEnumeration {
    std::vector<Graph> roots;  // sorted by edge list
    bool complete = true;      // false when the count cap or node budget hit
    std::uint64_t nodes = 0;
};

/// All labeled roots, found by branching over edges in canonical order with
/// only local pruning. Deliberately shares no code with solve_labeled so
/// the two can cross-check each other.
RootEnumeration enumerate_roots(const LabeledInstance& inst, std::size_t cap = std::numeric_limits<std::size_t>::max(),
                                SearchLimits limits = {kUnlimitedNodes});
RootEnumeration enumerate_roots(const Graph& g, std::size_t cap = std::numeric_limits<std::size_t>::max(),
                                SearchLimits limits = {kUnlimitedNodes});

}  // namespace sqroot
