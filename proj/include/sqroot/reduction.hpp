#pragma once

#include <cstddef>
#include <vector>

#include "sqroot/graph.hpp"
#include "sqroot/recognizer.hpp"

namespace sqroot {

/// Square Root with Labels: find H with H² = graph, forced ⊆ E(H) and
/// forbidden ∩ E(H) = ∅. Both label sets must be subsets of E(graph).
/// Overlapping labels are allowed and simply make the instance infeasible.
struct LabeledInstance {
    Graph graph;
    EdgeSet forced;
    EdgeSet forbidden;

    bool operator==(const LabeledInstance&) const = default;
};

/// Which assignment of the partition edges a reduction step committed to.
enum class TwinCase {
    NonTwin,  // u, v not true twins: ux, vy forced
    Flipped,  // true twins, labels force uy, vx
    Default,  // true twins, free choice of ux, vy
};

struct ReductionEvent {
    Edge edge;
    UVPartition partition;
    EdgeSet private_edges;    // wu for w ∈ N(u)\N[v], wv for w ∈ N(v)\N[u]
    EdgeSet forced_added;     // root edges between {u, v} and x ∪ y
    EdgeSet forbidden_added;  // the complementary partition edges
    TwinCase twin = TwinCase::NonTwin;
    /// Edges taken out of the graph by this step: uv and forbidden_added.
    EdgeSet deleted;

    bool operator==(const ReductionEvent&) const = default;
};

struct ReductionTrace {
    std::size_t vertex_count = 0;
    std::vector<ReductionEvent> events;

    bool operator==(const ReductionTrace&) const = default;
};

struct ReductionResult {
    /// True when the reduction proved that no solution exists.
    bool infeasible = false;
    LabeledInstance instance;
    ReductionTrace trace;
};

/// Applies the edge reduction rule until no recognizable edge remains.
///
/// Each step removes uv together with the partition pairs that are adjacent
/// only through uv in any root, forces the partition edges that every root
/// contains, and forbids the private edges wu / wv. A solution H' of the
/// result lifts to a solution of the input by adding back every trace edge.
///
/// Throws std::invalid_argument when a label is not an edge of the graph.
ReductionResult edge_reduce(const LabeledInstance& inst);

/// Replays the trace in reverse, adding each recognizable edge to `reduced_root`.
/// Throws std::invalid_argument when the vertex counts disagree.
Graph restore_solution(const ReductionTrace& trace, const Graph& reduced_root);

/// Graph obtained by deleting every trace event's edges from `original`.
Graph replay_deletions(const Graph& original, const ReductionTrace& trace);

bool verify_solution(const LabeledInstance& inst, const Graph& root);

bool labels_within_graph(const LabeledInstance& inst);

}  // namespace sqroot
