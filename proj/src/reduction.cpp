#include "sqroot/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqroot {

namespace {

bool intersects(const EdgeSet& a, const EdgeSet& b) {
    const EdgeSet& small = a.size() <= b.size() ? a : b;
    const EdgeSet& large = a.size() <= b.size() ? b : a;
    return std::any_of(small.begin(), small.end(), [&](const Edge& e) { return large.contains(e); });
}

void add_star(EdgeSet& out, Vertex centre, const std::vector<Vertex>& leaves) {
    for (Vertex w : leaves) out.emplace(centre, w);
}

}  // namespace

bool labels_within_graph(const LabeledInstance& inst) {
    const auto in_graph = [&](const Edge& e) {
        return e.u >= 0 && static_cast<std::size_t>(e.v) < inst.graph.vertex_count() && inst.graph.has_edge(e);
    };
    return std::all_of(inst.forced.begin(), inst.forced.end(), in_graph) &&
           std::all_of(inst.forbidden.begin(), inst.forbidden.end(), in_graph);
}

ReductionResult edge_reduce(const LabeledInstance& inst) {
    if (!labels_within_graph(inst)) throw std::invalid_argument("label set is not a subset of the edge set");

    ReductionResult result;
    result.instance = inst;
    result.trace.vertex_count = inst.graph.vertex_count();
    if (intersects(inst.forced, inst.forbidden)) {
        result.infeasible = true;
        return result;
    }

    Graph& g = result.instance.graph;
    EdgeSet& forced = result.instance.forced;
    EdgeSet& forbidden = result.instance.forbidden;

    while (auto found = find_recognizable_edge(g)) {
        const UVPartition& p = found->partition;
        const Vertex u = p.u;
        const Vertex v = p.v;
        ReductionEvent event;
        event.edge = found->edge;
        event.partition = p;

        if (forbidden.contains(event.edge)) {
            result.infeasible = true;
            return result;
        }
        for (Vertex w : g.neighbors(u)) {
            if (w != v && !g.has_edge(w, v)) event.private_edges.emplace(w, u);
        }
        for (Vertex w : g.neighbors(v)) {
            if (w != u && !g.has_edge(w, u)) event.private_edges.emplace(w, v);
        }
        if (intersects(forced, event.private_edges)) {
            result.infeasible = true;
            return result;
        }

        EdgeSet straight;  // ux_i, vy_j
        EdgeSet crossed;   // uy_j, vx_i
        add_star(straight, u, p.x);
        add_star(straight, v, p.y);
        add_star(crossed, u, p.y);
        add_star(crossed, v, p.x);

        if (!are_true_twins(g, u, v)) {
            event.twin = TwinCase::NonTwin;
        } else if (intersects(crossed, forced) || intersects(straight, forbidden)) {
            event.twin = TwinCase::Flipped;
            std::swap(straight, crossed);
        } else {
            event.twin = TwinCase::Default;
        }
        if (intersects(straight, forbidden) || intersects(crossed, forced)) {
            result.infeasible = true;
            return result;
        }
        event.forced_added = std::move(straight);
        event.forbidden_added = std::move(crossed);

        // In every root the pairs of forbidden_added are joined only through
        // uv, so they leave the graph together with uv. The private edges
        // stay: they are realised through x (resp. y) but may not be roots.
        event.deleted = event.forbidden_added;
        event.deleted.insert(event.edge);

        g = remove_edges(g, event.deleted);
        forced.erase(event.edge);
        forced.insert(event.forced_added.begin(), event.forced_added.end());
        for (const Edge& e : event.deleted) forbidden.erase(e);
        forbidden.insert(event.private_edges.begin(), event.private_edges.end());

        result.trace.events.push_back(std::move(event));
    }
    return result;
}

Graph restore_solution(const ReductionTrace& trace, const Graph& reduced_root) {
    if (trace.vertex_count != reduced_root.vertex_count()) {
        throw std::invalid_argument("trace and root have different vertex counts");
    }
    EdgeSet restored;
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) restored.insert(it->edge);
    return add_edges(reduced_root, restored);
}

Graph replay_deletions(const Graph& original, const ReductionTrace& trace) {
    EdgeSet deleted;
    for (const auto& event : trace.events) deleted.insert(event.deleted.begin(), event.deleted.end());
    return remove_edges(original, deleted);
}

bool verify_solution(const LabeledInstance& inst, const Graph& root) {
    if (root.vertex_count() != inst.graph.vertex_count()) return false;
    if (!(square(root) == inst.graph)) return false;
    for (const Edge& e : inst.forced) {
        if (!root.has_edge(e)) return false;
    }
    for (const Edge& e : inst.forbidden) {
        if (root.has_edge(e)) return false;
    }
    return true;
}

}  // namespace sqroot
