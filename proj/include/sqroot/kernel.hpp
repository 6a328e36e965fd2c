#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqroot/graph.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/reduction.hpp"

namespace sqroot {

/// Components of a reduced planar+kv square with at most this many vertices
/// are solved outright.
inline constexpr std::size_t kSmallComponentSize = 12;

/// A reduced planar+kv yes-instance keeps at most kKernelFactor * k vertices.
inline constexpr std::size_t kKernelFactor = 137;

/// Planar-square test on the root: max degree ≤ 3, every block on more than four vertices is
/// an even cycle, and no three cut vertices are pairwise adjacent.
/// True exactly when square(h) is planar.
bool hkt_planar_square_check(const Graph& h);

struct KernelOptions {
    SearchLimits limits;  // per-component oracle budget
    int jobs = 1;         // OpenMP threads for component solving
};

struct ComponentReduction {
    bool infeasible = false;
    bool timed_out = false;
    /// The instance restricted to the components that were kept.
    LabeledInstance residual;
    /// residual vertex i is vertex residual_vertices[i] of the input.
    std::vector<Vertex> residual_vertices;
    /// Root edges (input ids) of the components that were solved and removed.
    EdgeSet solved_edges;
    std::size_t solved_components = 0;
};

/// Solves every connected component with ≤ kSmallComponentSize vertices with
/// solve_labeled and removes it. Components are independent, so they are
/// solved in parallel; results are merged in component order.
ComponentReduction component_reduce(const LabeledInstance& inst, const KernelOptions& options = {});

enum class KernelKind { Yes, No, Kernel, Timeout };

struct KernelOutcome {
    KernelKind kind = KernelKind::No;
    std::optional<Graph> root;  // Yes: a verified root of the input graph
    LabeledInstance kernel;
    std::vector<Vertex> kernel_vertices;  // kernel vertex -> input vertex
    ReductionTrace trace;
    EdgeSet solved_edges;  // input ids, removed components
    std::size_t input_vertices = 0;
};

/// Edge reduction, then component reduction, then the 137k size cutoff.
///
/// `k` is trusted: a wrong value can only produce a wrong No through the
/// cutoff, never a wrong Yes.
KernelOutcome kernelize(const LabeledInstance& inst, std::size_t k, const KernelOptions& options = {});

/// Root of the input graph from a root of outcome.kernel. The caller is
/// responsible for kernel_root actually solving the kernel.
/// Throws std::invalid_argument when outcome is not a Kernel or sizes disagree.
Graph lift_kernel_solution(const KernelOutcome& outcome, const Graph& kernel_root);

}  // namespace sqroot
