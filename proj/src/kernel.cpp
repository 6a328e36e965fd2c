#include "sqroot/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqroot {

bool hkt_planar_square_check(const Graph& h) {
    if (max_degree(h) > 3) return false;
    const BlockDecomposition blocks = blocks_and_cuts(h);
    for (const auto& block : blocks.blocks) {
        if (block.size() <= 4) continue;
        if (block.size() % 2 != 0) return false;
        std::size_t edges = 0;
        for (Vertex a : block) {
            std::size_t inside = 0;
            for (Vertex b : h.neighbors(a)) inside += std::binary_search(block.begin(), block.end(), b);
            if (inside != 2) return false;
            edges += inside;
        }
        if (edges / 2 != block.size()) return false;
    }
    const auto& cuts = blocks.cut_vertices;
    const auto is_cut = [&](Vertex x) { return std::binary_search(cuts.begin(), cuts.end(), x); };
    for (Vertex c : cuts) {
        const auto nbrs = h.neighbors(c);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] < c || !is_cut(nbrs[i])) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (is_cut(nbrs[j]) && h.has_edge(nbrs[i], nbrs[j])) return false;
            }
        }
    }
    return true;
}

namespace {

LabeledInstance restrict_instance(const LabeledInstance& inst, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> local(inst.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    LabeledInstance out{induced_subgraph(inst.graph, vertices), {}, {}};
    const auto carry = [&](const EdgeSet& from, EdgeSet& to) {
        for (const Edge& e : from) {
            const Vertex a = local[static_cast<std::size_t>(e.u)];
            const Vertex b = local[static_cast<std::size_t>(e.v)];
            if (a >= 0 && b >= 0) to.emplace(a, b);
        }
    };
    carry(inst.forced, out.forced);
    carry(inst.forbidden, out.forbidden);
    return out;
}

}  // namespace

ComponentReduction component_reduce(const LabeledInstance& inst, const KernelOptions& options) {
    const auto components = connected_components(inst.graph);
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].size() <= kSmallComponentSize) small.push_back(i);
    }

    std::vector<SolveResult> solved(small.size());
    const int jobs = std::max(1, options.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::size_t s = 0; s < small.size(); ++s) {
        solved[s] = solve_labeled(restrict_instance(inst, components[small[s]]), options.limits);
    }

    ComponentReduction out;
    std::vector<bool> removed(components.size(), false);
    for (std::size_t s = 0; s < small.size(); ++s) {
        const auto& comp = components[small[s]];
        if (solved[s].verdict == Verdict::No) out.infeasible = true;
        if (solved[s].verdict == Verdict::Timeout) out.timed_out = true;
        if (solved[s].verdict != Verdict::Yes) continue;
        removed[small[s]] = true;
        ++out.solved_components;
        for (const Edge& e : solved[s].root->edges()) {
            out.solved_edges.emplace(comp[static_cast<std::size_t>(e.u)], comp[static_cast<std::size_t>(e.v)]);
        }
    }
    if (out.infeasible) out.timed_out = false;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (!removed[i]) out.residual_vertices.insert(out.residual_vertices.end(), components[i].begin(), components[i].end());
    }
    std::sort(out.residual_vertices.begin(), out.residual_vertices.end());
    out.residual = restrict_instance(inst, out.residual_vertices);
    return out;
}

KernelOutcome kernelize(const LabeledInstance& inst, std::size_t k, const KernelOptions& options) {
    KernelOutcome out;
    out.input_vertices = inst.graph.vertex_count();
    ReductionResult reduced = edge_reduce(inst);
    if (reduced.infeasible) return out;
    out.trace = std::move(reduced.trace);

    ComponentReduction comp = component_reduce(reduced.instance, options);
    if (comp.infeasible) return out;
    if (comp.timed_out) {
        out.kind = KernelKind::Timeout;
        return out;
    }
    out.solved_edges = std::move(comp.solved_edges);
    if (comp.residual_vertices.empty()) {
        Graph reduced_root(out.input_vertices, std::vector<Edge>(out.solved_edges.begin(), out.solved_edges.end()));
        Graph root = restore_solution(out.trace, reduced_root);
        if (!verify_solution(inst, root)) throw std::logic_error("kernelize produced an invalid root");
        out.kind = KernelKind::Yes;
        out.root = std::move(root);
        return out;
    }
    if (comp.residual_vertices.size() > kKernelFactor * k) return out;
    out.kind = KernelKind::Kernel;
    out.kernel = std::move(comp.residual);
    out.kernel_vertices = std::move(comp.residual_vertices);
    return out;
}

Graph lift_kernel_solution(const KernelOutcome& outcome, const Graph& kernel_root) {
    if (outcome.kind != KernelKind::Kernel) throw std::invalid_argument("outcome carries no kernel");
    if (kernel_root.vertex_count() != outcome.kernel_vertices.size()) {
        throw std::invalid_argument("kernel root has the wrong vertex count");
    }
    EdgeSet edges = outcome.solved_edges;
    for (const Edge& e : kernel_root.edges()) {
        edges.emplace(outcome.kernel_vertices[static_cast<std::size_t>(e.u)], outcome.kernel_vertices[static_cast<std::size_t>(e.v)]);
    }
    return restore_solution(outcome.trace, Graph(outcome.input_vertices, std::vector<Edge>(edges.begin(), edges.end())));
}

}  // namespace sqroot
