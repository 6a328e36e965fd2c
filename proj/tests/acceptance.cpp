// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "sqroot/corpus.hpp"
#include "sqroot/generators.hpp"
#include "sqroot/kernel.hpp"
#include "sqroot/mad.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/pipeline.hpp"
#include "sqroot/recognizer.hpp"
#include "sqroot/reduction.hpp"
#include "sqroot/reference.hpp"
#include "sqroot/tree_decomposition.hpp"
#include "sqroot/tw_dp.hpp"
#include "support.hpp"

namespace {

using namespace sqroot;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> graphs = nonisomorphic_graphs_up_to(7);
    return graphs;
}

// Labeled instances over the corpus: nine per graph with 0, 1 or 2 labels.
const std::vector<LabeledInstance>& labeled_corpus() {
    static const std::vector<LabeledInstance> instances = [] {
        std::vector<LabeledInstance> out;
        std::mt19937_64 rng(20261014);
        for (const Graph& g : corpus()) {
            for (std::size_t i = 0; i < 9; ++i) out.push_back(testing::random_labels(rng, g, i % 3));
        }
        return out;
    }();
    return instances;
}

void criterion_oracle_completeness() {
    std::size_t mismatches = 0;
    std::size_t timeouts = 0;
    double solve_time = 0;
    for (const Graph& g : corpus()) {
        const auto start = Clock::now();
        const SolveResult s = solve_labeled({g, {}, {}}, {kUnlimitedNodes});
        solve_time += seconds_since(start);
        if (s.verdict == Verdict::Timeout) ++timeouts;
        const RootEnumeration e = enumerate_roots(g, 1);
        const bool enumerated = !e.roots.empty();
        if ((s.verdict == Verdict::Yes) != enumerated) ++mismatches;
        if (s.verdict == Verdict::Yes && !verify_solution({g, {}, {}}, *s.root)) ++mismatches;
    }
    report(1, "oracle completeness", mismatches == 0 && timeouts == 0 && solve_time < 60.0,
           fmt("%zu graphs on <= 7 vertices, %zu mismatches, %zu timeouts, solve time %.2f s (limit 60 s)", corpus().size(),
               mismatches, timeouts, solve_time));
}

void criterion_reduction_equivalence() {
    std::size_t disagreements = 0;
    std::size_t bad_witnesses = 0;
    std::size_t yes = 0;
    for (const LabeledInstance& inst : labeled_corpus()) {
        const SolveResult direct = solve_labeled(inst, {kUnlimitedNodes});
        const ReductionResult r = edge_reduce(inst);
        Verdict via = Verdict::No;
        if (!r.infeasible) {
            const ComponentReduction comp = component_reduce(r.instance, {{kUnlimitedNodes}, 1});
            if (comp.infeasible) {
                via = Verdict::No;
            } else if (comp.timed_out || !comp.residual_vertices.empty()) {
                via = Verdict::Timeout;
            } else {
                const Graph reduced_root(inst.graph.vertex_count(),
                                         std::vector<Edge>(comp.solved_edges.begin(), comp.solved_edges.end()));
                const Graph lifted = restore_solution(r.trace, reduced_root);
                via = Verdict::Yes;
                if (!verify_solution(inst, lifted)) ++bad_witnesses;
            }
        }
        if (via != direct.verdict) ++disagreements;
        if (direct.verdict == Verdict::Yes) ++yes;
    }
    report(2, "edge reduction equivalence", labeled_corpus().size() >= 10000 && disagreements == 0 && bad_witnesses == 0,
           fmt("%zu labeled instances (%zu yes), %zu disagreements, %zu invalid witnesses", labeled_corpus().size(), yes,
               disagreements, bad_witnesses));
}

void criterion_small_components() {
    std::size_t roots = 0;
    std::size_t violations = 0;
    std::size_t largest = 0;
    std::size_t biggest_root = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Graph h = generate_hkt_root(seed, {2 + seed % 59, 10});
        biggest_root = std::max(biggest_root, h.vertex_count());
        ++roots;
        const ReductionResult r = edge_reduce({square(h), {}, {}});
        if (r.infeasible) {
            ++violations;
            continue;
        }
        if (find_recognizable_edge(r.instance.graph)) continue;
        for (const auto& comp : connected_components(r.instance.graph)) {
            largest = std::max(largest, comp.size());
            if (comp.size() > kSmallComponentSize) ++violations;
        }
    }
    report(4, "small components after reduction", violations == 0,
           fmt("%zu HKT roots (up to %zu vertices), largest residual component %zu (limit 12), %zu violations", roots,
               biggest_root, largest, violations));
}

void criterion_kernel() {
    std::size_t instances = 0;
    std::size_t small = 0;
    std::size_t oversize = 0;
    std::size_t mismatches = 0;
    std::size_t kernels = 0;
    std::size_t no_answers = 0;
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 240; ++seed) {
        const std::size_t k = seed % 4;
        // Alternate desk-scale instances with larger ones for the size bound.
        const std::size_t base = seed % 2 == 0 ? 2 + (seed / 2) % (13 - k) : 10 + seed % 31;
        const ApexSquare a = generate_apex_square(1000 + seed, k, {base, 10});
        if (!testing::is_planar(induced_subgraph(a.square, [&] {
                std::vector<Vertex> keep(a.square.vertex_count() - k);
                std::iota(keep.begin(), keep.end(), 0);
                return keep;
            }()))) {
            ++mismatches;  // generator broke its promise
        }
        LabeledInstance inst{a.square, {}, {}};
        // Every third desk-scale instance gets labels, so No answers occur too.
        if (seed % 3 == 0) inst = testing::random_labels(rng, a.square, 2);
        ++instances;
        const KernelOutcome out = kernelize(inst, k, {{kUnlimitedNodes}, 1});
        if (out.kind == KernelKind::Kernel) {
            ++kernels;
            if (out.kernel.graph.vertex_count() > kKernelFactor * k) ++oversize;
            if (find_recognizable_edge(out.kernel.graph)) ++oversize;
        }
        if (inst.graph.vertex_count() > 14) continue;
        ++small;
        const SolveResult direct = solve_labeled(inst, {kUnlimitedNodes});
        Verdict kv = Verdict::Timeout;
        switch (out.kind) {
            case KernelKind::Yes: kv = verify_solution(inst, *out.root) ? Verdict::Yes : Verdict::Timeout; break;
            case KernelKind::No: kv = Verdict::No; break;
            case KernelKind::Timeout: kv = Verdict::Timeout; break;
            case KernelKind::Kernel: {
                const SolveResult ks = solve_labeled(out.kernel, {kUnlimitedNodes});
                kv = ks.verdict;
                if (ks.verdict == Verdict::Yes && !verify_solution(inst, lift_kernel_solution(out, *ks.root))) kv = Verdict::Timeout;
                break;
            }
        }
        if (kv == Verdict::No) ++no_answers;
        if (kv != direct.verdict) ++mismatches;
    }
    report(5, "kernel bound and soundness", instances >= 200 && oversize == 0 && mismatches == 0,
           fmt("%zu apex squares with k in 0..3, %zu kernels, %zu over 137k, %zu checked against the oracle (%zu no), "
               "%zu mismatches",
               instances, kernels, oversize, small, no_answers, mismatches));
}

void criterion_hkt_planarity() {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::size_t planar = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Graph& h : nonisomorphic_graphs(n, 3)) {
            if (component_count(h) != 1) continue;
            ++checked;
            const bool oracle = testing::is_planar(square(h));
            planar += oracle;
            if (hkt_planar_square_check(h) != oracle) ++mismatches;
        }
    }
    report(6, "HKT conditions vs planarity", mismatches == 0,
           fmt("%zu connected graphs with <= 8 vertices and max degree <= 3, %zu planar squares, %zu mismatches", checked,
               planar, mismatches));
}

void criterion_mad() {
    std::vector<Graph> graphs = corpus();
    std::mt19937_64 rng(46);
    for (std::size_t i = 0; i < 1500; ++i) {
        const std::size_t n = 8 + i % 5;
        graphs.push_back(testing::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(i % 10) / 9.0));
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) graphs.push_back(square(generate_hkt_root(seed, {2 + seed % 11, 8})));
    std::size_t mismatches = 0;
    for (const Graph& g : graphs) {
        const Rational flow = max_average_degree(g);
        if (flow != reference::max_average_degree_exhaustive(g) || flow != max_average_degree_exhaustive(g)) ++mismatches;
    }
    report(7, "exact maximum average degree", mismatches == 0,
           fmt("%zu graphs with <= 12 vertices, flow vs subset sweep, %zu rational mismatches", graphs.size(), mismatches));
}

void criterion_low_density_width() {
    std::vector<Graph> graphs;
    for (const Graph& g : corpus()) graphs.push_back(g);
    std::mt19937_64 rng(10);
    for (std::size_t i = 0; i < 600; ++i) {
        const std::size_t n = 6 + i % 9;
        Graph h = testing::random_tree(rng, n);
        // A few extra edges so that roots with cycles appear.
        EdgeSet extra;
        for (std::size_t j = 0; j < i % 4; ++j) {
            const auto a = static_cast<Vertex>(rng() % n);
            const auto b = static_cast<Vertex>(rng() % n);
            if (a != b) extra.emplace(a, b);
        }
        graphs.push_back(square(add_edges(h, extra)));
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) graphs.push_back(square(generate_hkt_root(seed, {4 + seed % 27, 10})));

    std::size_t eligible = 0;
    std::size_t width_failures = 0;
    std::size_t degree_failures = 0;
    std::size_t roots_checked = 0;
    for (const Graph& g : graphs) {
        if (g.vertex_count() == 0 || max_average_degree(g) >= kMadThreshold) continue;
        const SolveResult s = solve_labeled({g, {}, {}}, {kUnlimitedNodes});
        if (s.verdict != Verdict::Yes) continue;
        ++eligible;
        const ReductionResult r = edge_reduce({g, {}, {}});
        if (r.infeasible || !treewidth_at_most(r.instance.graph, kReducedWidthBound)) ++width_failures;
        const RootEnumeration e = enumerate_roots(g, 5000);
        for (const Graph& h : e.roots) {
            ++roots_checked;
            if (max_degree(h) > 4) ++degree_failures;
        }
    }
    report(8, "low density implies small width", width_failures == 0 && degree_failures == 0,
           fmt("%zu graphs with mad < 46/11 and a root, %zu without a width-5 decomposition after reduction, %zu roots "
               "checked, %zu with max degree > 4",
               eligible, width_failures, roots_checked, degree_failures));
}

void criterion_dp_equivalence() {
    std::size_t mismatches = 0;
    std::size_t bad_witnesses = 0;
    std::size_t runs = 0;
    std::mt19937_64 rng(9);
    for (const LabeledInstance& inst : labeled_corpus()) {
        const Verdict direct = solve_labeled(inst, {kUnlimitedNodes}).verdict;
        const std::size_t n = inst.graph.vertex_count();
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const TreeDecomposition decompositions[] = {*treewidth_at_most(inst.graph, n), decomposition_from_elimination(inst.graph, order)};
        for (const auto& td : decompositions) {
            ++runs;
            const TwSolveResult dp = solve_labeled_tw(inst, td);
            if (dp.verdict != direct) ++mismatches;
            if (dp.verdict == Verdict::Yes && !verify_solution(inst, *dp.root)) ++bad_witnesses;
        }
    }
    report(9, "decomposition DP vs oracle", mismatches == 0 && bad_witnesses == 0,
           fmt("%zu labeled instances, %zu DP runs (optimal and random elimination orders), %zu mismatches, %zu invalid "
               "witnesses",
               labeled_corpus().size(), runs, mismatches, bad_witnesses));
}

void criterion_fixpoint() {
    std::size_t fixpoint_checked = 0;
    std::size_t fixpoint_failed = 0;
    const auto check = [&](const LabeledInstance& inst) {
        const ReductionResult r = edge_reduce(inst);
        if (r.infeasible) return;
        ++fixpoint_checked;
        if (find_recognizable_edge(r.instance.graph)) ++fixpoint_failed;
    };
    for (const LabeledInstance& inst : labeled_corpus()) check(inst);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) check({square(generate_hkt_root(seed, {2 + seed % 59, 10})), {}, {}});
    std::mt19937_64 rng(3);
    for (std::size_t i = 0; i < 500; ++i) check({square(testing::random_tree(rng, 3 + i % 40)), {}, {}});
    report(3, "reduction fixpoint", fixpoint_failed == 0 && fixpoint_checked > 0,
           fmt("%zu reduced graphs, %zu still have a recognizable edge", fixpoint_checked, fixpoint_failed));
}

void criterion_runtime() {
    double worst_reduce = 0;
    bool reduce_ok = true;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph h = generate_hkt_root(500 + seed, {200, 12});
        const Graph g = square(h);
        const auto start = Clock::now();
        const ReductionResult r = edge_reduce({g, {}, {}});
        worst_reduce = std::max(worst_reduce, seconds_since(start));
        reduce_ok = reduce_ok && !r.infeasible && h.vertex_count() == 200;
    }
    double mad_total = 0;
    bool mad_ok = true;
    for (std::size_t n : {7, 25, 50, 100, 150, 200}) {
        const auto start = Clock::now();
        const PipelineResult p = mad_solve(square(cycle_graph(n)));
        mad_total += seconds_since(start);
        mad_ok = mad_ok && p.verdict == Verdict::Yes && verify_solution({square(cycle_graph(n)), {}, {}}, *p.root);
    }
    report(10, "runtime sanity", reduce_ok && mad_ok && worst_reduce < 10.0 && mad_total < 60.0,
           fmt("edge_reduce on 200-vertex HKT squares: worst %.2f s (limit 10 s); mad_solve on square(C_n), n <= 200: "
               "total %.2f s (limit 60 s), all roots verified: %s",
               worst_reduce, mad_total, mad_ok ? "yes" : "no"));
}

}  // namespace

int main() {
    criterion_oracle_completeness();
    criterion_reduction_equivalence();
    criterion_fixpoint();
    criterion_small_components();
    criterion_kernel();
    criterion_hkt_planarity();
    criterion_mad();
    criterion_low_density_width();
    criterion_dp_equivalence();
    criterion_runtime();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
