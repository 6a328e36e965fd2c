// Command-line front end. Exit codes: 0 decided, 2 undecided (timeout,
// budget, cap, not applicable), 3 bad input.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sqroot/generators.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/instance_io.hpp"
#include "sqroot/kernel.hpp"
#include "sqroot/mad.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/pipeline.hpp"
#include "sqroot/reduction.hpp"
#include "sqroot/tree_decomposition.hpp"
#include "sqroot/tw_dp.hpp"

namespace {

using namespace sqroot;

constexpr int kDecided = 0;
constexpr int kUndecided = 2;
constexpr int kInputError = 3;

struct Options {
    std::string input;
    std::string dot;
    std::string engine = "bruteforce";
    std::uint64_t budget = kDefaultNodeBudget;
    std::string trace_out;
    std::string trace_in;
    std::string verify_against;
    std::size_t k = 0;
    int jobs = 1;
    std::string kind = "hkt-root";
    std::uint64_t seed = 1;
    std::size_t max_vertices = 20;
    std::size_t max_cycle = 10;
    std::size_t cap = 1000;
};

void emit_dot(const Options& opt, const LabeledInstance& shown) {
    if (!opt.dot.empty()) write_file(opt.dot, format_dot(shown));
}

int print_root(const Options& opt, const Graph& root) {
    std::cout << "YES\n" << format_graph(root);
    emit_dot(opt, {root, {}, {}});
    return kDecided;
}

int run_square(const Options& opt) {
    const Graph sq = square(read_instance_file(opt.input).graph);
    std::cout << format_graph(sq);
    emit_dot(opt, {sq, {}, {}});
    return kDecided;
}

int run_solve(const Options& opt) {
    const LabeledInstance inst = read_instance_file(opt.input);
    if (opt.engine == "bruteforce") {
        const SolveResult r = solve_labeled(inst, {opt.budget});
        if (r.verdict == Verdict::Yes) return print_root(opt, *r.root);
        std::cout << to_string(r.verdict) << '\n';
        return r.verdict == Verdict::No ? kDecided : kUndecided;
    }
    const PipelineResult r = opt.engine == "mad" ? mad_solve_labeled(inst) : tw_solve(inst, kMaxDpBagSize - 1);
    if (r.verdict == Verdict::Yes) return print_root(opt, *r.root);
    std::cout << to_string(r.verdict) << '\n';
    return r.verdict == Verdict::No ? kDecided : kUndecided;
}

int run_reduce(const Options& opt) {
    const LabeledInstance inst = read_instance_file(opt.input);
    const ReductionResult r = edge_reduce(inst);
    if (!opt.trace_out.empty()) write_file(opt.trace_out, format_trace(r.trace));
    if (r.infeasible) {
        std::cout << "NO\n";
        return kDecided;
    }
    std::cout << format_instance(r.instance);
    emit_dot(opt, r.instance);
    return kDecided;
}

int run_kernelize(const Options& opt) {
    const LabeledInstance inst = read_instance_file(opt.input);
    const KernelOutcome out = kernelize(inst, opt.k, {{opt.budget}, opt.jobs});
    if (!opt.trace_out.empty()) write_file(opt.trace_out, format_trace(out.trace));
    switch (out.kind) {
        case KernelKind::Yes: return print_root(opt, *out.root);
        case KernelKind::No: std::cout << "NO\n"; return kDecided;
        case KernelKind::Timeout: std::cout << "TIMEOUT\n"; return kUndecided;
        case KernelKind::Kernel: break;
    }
    std::cout << "KERNEL\n";
    for (std::size_t i = 0; i < out.kernel_vertices.size(); ++i) {
        std::cout << "c vertex " << i + 1 << ' ' << out.kernel_vertices[i] + 1 << '\n';
    }
    for (const Edge& e : out.solved_edges) std::cout << "c solved " << e.u + 1 << ' ' << e.v + 1 << '\n';
    std::cout << format_instance(out.kernel);
    emit_dot(opt, out.kernel);
    return kUndecided;
}

int run_mad(const Options& opt) {
    const Graph g = read_instance_file(opt.input).graph;
    if (g.vertex_count() == 0) throw std::invalid_argument("mad is undefined on the empty graph");
    const Rational mad = max_average_degree(g);
    std::cout << mad.numerator() << '/' << mad.denominator() << '\n';
    return kDecided;
}

int run_treewidth(const Options& opt) {
    const Graph g = read_instance_file(opt.input).graph;
    const auto td = treewidth_at_most(g, opt.k);
    if (!td) {
        std::cout << '>' << opt.k << '\n';
        return kDecided;
    }
    std::cout << format_decomposition(*td, g.vertex_count());
    return kDecided;
}

int run_check_hkt(const Options& opt) {
    std::cout << (hkt_planar_square_check(read_instance_file(opt.input).graph) ? "PLANAR-SQUARE" : "NOT") << '\n';
    return kDecided;
}

int run_generate(const Options& opt) {
    const HktParams params{opt.max_vertices, opt.max_cycle};
    if (opt.kind == "hkt-root") {
        const Graph h = generate_hkt_root(opt.seed, params);
        std::cout << "c hkt-root seed " << opt.seed << '\n' << format_graph(h);
        emit_dot(opt, {h, {}, {}});
        return kDecided;
    }
    if (opt.kind == "apex-square") {
        const ApexSquare a = generate_apex_square(opt.seed, opt.k, params);
        std::cout << "c apex-square seed " << opt.seed << " k " << a.k << '\n' << format_graph(a.square);
        emit_dot(opt, {a.square, {}, {}});
        return kDecided;
    }
    throw std::invalid_argument("unknown generator kind " + opt.kind);
}

int run_enumerate(const Options& opt) {
    const LabeledInstance inst = read_instance_file(opt.input);
    const RootEnumeration e = enumerate_roots(inst, opt.cap, {opt.budget});
    std::cout << "ROOTS " << e.roots.size() << (e.complete ? " complete" : " incomplete") << '\n';
    for (std::size_t i = 0; i < e.roots.size(); ++i) std::cout << "c root " << i + 1 << '\n' << format_graph(e.roots[i]);
    return e.complete ? kDecided : kUndecided;
}

int run_restore(const Options& opt) {
    const ReductionTrace trace = parse_trace(read_file(opt.trace_in));
    const Graph root = restore_solution(trace, read_instance_file(opt.input).graph);
    std::cout << format_graph(root);
    emit_dot(opt, {root, {}, {}});
    if (!opt.verify_against.empty()) {
        const bool ok = verify_solution(read_instance_file(opt.verify_against), root);
        std::cout << (ok ? "c verified\n" : "c NOT a solution\n");
        return ok ? kDecided : kInputError;
    }
    return kDecided;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sqroot: square roots of graphs with forced and forbidden edges"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--dot", opt.dot, "also write the main output graph as Graphviz text");

    const auto with_input = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.input, "instance file")->required()->check(CLI::ExistingFile);
        return cmd;
    };
    const auto budget = [&](CLI::App* cmd) { cmd->add_option("--budget", opt.budget, "search node budget"); };

    auto* sq = with_input(app.add_subcommand("square", "print the square of the graph"));
    auto* solve = with_input(app.add_subcommand("solve", "decide the labeled instance and print a root"));
    solve->add_option("--engine", opt.engine, "bruteforce, tw or mad")->check(CLI::IsMember({"bruteforce", "tw", "mad"}));
    budget(solve);
    auto* reduce = with_input(app.add_subcommand("reduce", "apply edge reduction and print the reduced instance"));
    reduce->add_option("--emit-trace", opt.trace_out, "write the reduction trace here");
    auto* kern = with_input(app.add_subcommand("kernelize", "planar+kv kernel"));
    kern->add_option("--k", opt.k, "apex-number promise")->required();
    kern->add_option("--emit-trace", opt.trace_out, "write the reduction trace here");
    kern->add_option("--jobs", opt.jobs, "threads for component solving")->check(CLI::PositiveNumber);
    budget(kern);
    auto* mad = with_input(app.add_subcommand("mad", "print the maximum average degree as p/q"));
    auto* tw = with_input(app.add_subcommand("treewidth", "print a width-<=k decomposition or >k"));
    tw->add_option("--k", opt.k, "width bound")->required();
    auto* hkt = with_input(app.add_subcommand("check-hkt", "test whether the square of the graph is planar"));
    auto* gen = app.add_subcommand("generate", "emit a random test instance");
    gen->add_option("--kind", opt.kind, "hkt-root or apex-square")->check(CLI::IsMember({"hkt-root", "apex-square"}));
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("--k", opt.k, "apex vertices (apex-square)");
    gen->add_option("--n", opt.max_vertices, "maximum root vertices before apexes")->check(CLI::PositiveNumber);
    gen->add_option("--max-cycle", opt.max_cycle, "longest even cycle block");
    auto* en = with_input(app.add_subcommand("enumerate", "list every labeled root"));
    en->add_option("--cap", opt.cap, "stop after this many roots");
    budget(en);
    auto* restore = with_input(app.add_subcommand("restore", "lift a root of a reduced instance through a trace"));
    restore->add_option("--trace", opt.trace_in, "trace written by reduce or kernelize")->required()->check(CLI::ExistingFile);
    restore->add_option("--verify", opt.verify_against, "original instance to check the lifted root against")
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*sq) return run_square(opt);
        if (*solve) return run_solve(opt);
        if (*reduce) return run_reduce(opt);
        if (*kern) return run_kernelize(opt);
        if (*mad) return run_mad(opt);
        if (*tw) return run_treewidth(opt);
        if (*hkt) return run_check_hkt(opt);
        if (*gen) return run_generate(opt);
        if (*en) return run_enumerate(opt);
        if (*restore) return run_restore(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
