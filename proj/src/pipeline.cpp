#include "sqroot/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqroot/mad.hpp"
#include "sqroot/tree_decomposition.hpp"
#include "sqroot/tw_dp.hpp"

namespace sqroot {

namespace {

PipelineResult finish(const LabeledInstance& inst, const ReductionResult& reduced, const TreeDecomposition& td,
                      PipelineResult out) {
    out.width = static_cast<std::size_t>(std::max(td.width(), 0));
    const TwSolveResult dp = solve_labeled_tw(reduced.instance, td);
    if (dp.verdict != Verdict::Yes) {
        out.verdict = Verdict::No;
        return out;
    }
    Graph root = restore_solution(reduced.trace, *dp.root);
    if (!verify_solution(inst, root)) throw std::logic_error("pipeline produced an invalid root");
    out.verdict = Verdict::Yes;
    out.root = std::move(root);
    return out;
}

}  // namespace

PipelineResult mad_solve_labeled(const LabeledInstance& inst) {
    PipelineResult out;
    if (inst.graph.vertex_count() == 0) {
        out.verdict = Verdict::Yes;
        out.root = Graph();
        return out;
    }
    out.mad = max_average_degree(inst.graph);
    if (*out.mad >= kMadThreshold) {
        out.verdict = Verdict::NotApplicable;
        return out;
    }
    const ReductionResult reduced = edge_reduce(inst);
    out.reduction_steps = reduced.trace.events.size();
    if (reduced.infeasible) return out;
    const auto td = treewidth_at_most(reduced.instance.graph, kReducedWidthBound);
    if (!td) return out;
    return finish(inst, reduced, *td, std::move(out));
}

PipelineResult mad_solve(const Graph& g) { return mad_solve_labeled(LabeledInstance{g, {}, {}}); }

PipelineResult tw_solve(const LabeledInstance& inst, std::size_t max_width) {
    PipelineResult out;
    const ReductionResult reduced = edge_reduce(inst);
    out.reduction_steps = reduced.trace.events.size();
    if (reduced.infeasible) return out;
    for (std::size_t k = 0; k <= max_width; ++k) {
        if (auto td = treewidth_at_most(reduced.instance.graph, k)) return finish(inst, reduced, *td, std::move(out));
    }
    out.verdict = Verdict::NotApplicable;
    return out;
}

}  // namespace sqroot
