#include "sqroot/mad.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sqroot {

namespace {

/// Dinic max flow on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

    void add_arc(int from, int to, std::int64_t cap) {
        graph_[static_cast<std::size_t>(from)].push_back({to, cap, static_cast<int>(graph_[static_cast<std::size_t>(to)].size())});
        graph_[static_cast<std::size_t>(to)].push_back({from, 0, static_cast<int>(graph_[static_cast<std::size_t>(from)].size()) - 1});
    }

    std::int64_t run(int source, int sink) {
        std::int64_t total = 0;
        while (bfs(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) total += pushed;
        }
        return total;
    }

    /// Nodes reachable from `source` in the residual network after run().
    std::vector<bool> source_side(int source) const {
        std::vector<bool> seen(graph_.size(), false);
        std::vector<int> stack{source};
        seen[static_cast<std::size_t>(source)] = true;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const Arc& a : graph_[static_cast<std::size_t>(x)]) {
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = true;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
        int rev;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> queue;
        level_[static_cast<std::size_t>(source)] = 0;
        queue.push(source);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (const Arc& a : graph_[static_cast<std::size_t>(x)]) {
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(x)] + 1;
                    queue.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    std::int64_t dfs(int x, int sink, std::int64_t limit) {
        if (x == sink) return limit;
        auto& arcs = graph_[static_cast<std::size_t>(x)];
        for (int& i = next_[static_cast<std::size_t>(x)]; i < static_cast<int>(arcs.size()); ++i) {
            Arc& a = arcs[static_cast<std::size_t>(i)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(x)] + 1) continue;
            if (std::int64_t pushed = dfs(a.to, sink, std::min(limit, a.cap))) {
                a.cap -= pushed;
                graph_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> graph_;
    std::vector<int> level_;
    std::vector<int> next_;
};

std::int64_t edges_inside(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : set) in[static_cast<std::size_t>(v)] = true;
    std::int64_t count = 0;
    for (Vertex v : set) {
        for (Vertex w : g.neighbors(v)) {
            if (w > v && in[static_cast<std::size_t>(w)]) ++count;
        }
    }
    return count;
}

}  // namespace

std::vector<Vertex> densest_subgraph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("maximum average degree of the empty graph");
    std::vector<Vertex> best(n);
    std::iota(best.begin(), best.end(), 0);
    const auto edges = g.edges();
    if (edges.empty()) return {0};

    const int source = 0;
    const int sink = 1;
    const int edge_base = 2;
    const int vertex_base = edge_base + static_cast<int>(edges.size());
    const std::int64_t unbounded = std::numeric_limits<std::int64_t>::max() / 4;

    while (true) {
        // λ = p / q is the density |E(S)| / |S| of the current best set.
        const Rational lambda(edges_inside(g, best), static_cast<std::int64_t>(best.size()));
        const std::int64_t p = lambda.numerator();
        const std::int64_t q = lambda.denominator();

        MaxFlow flow(static_cast<std::size_t>(vertex_base) + n);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const int node = edge_base + static_cast<int>(i);
            flow.add_arc(source, node, q);
            flow.add_arc(node, vertex_base + edges[i].u, unbounded);
            flow.add_arc(node, vertex_base + edges[i].v, unbounded);
        }
        for (std::size_t v = 0; v < n; ++v) flow.add_arc(vertex_base + static_cast<int>(v), sink, p);

        const std::int64_t cut = flow.run(source, sink);
        const std::int64_t surplus = q * static_cast<std::int64_t>(edges.size()) - cut;
        if (surplus <= 0) break;

        const auto side = flow.source_side(source);
        std::vector<Vertex> denser;
        for (std::size_t v = 0; v < n; ++v) {
            if (side[static_cast<std::size_t>(vertex_base) + v]) denser.push_back(static_cast<Vertex>(v));
        }
        best = std::move(denser);
    }
    return best;
}

Rational max_average_degree(const Graph& g) {
    const auto set = densest_subgraph(g);
    return Rational(2 * edges_inside(g, set), static_cast<std::int64_t>(set.size()));
}

Rational max_average_degree_exhaustive(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("maximum average degree of the empty graph");
    if (n > 30) throw std::invalid_argument("exhaustive maximum average degree supports n <= 30");
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    const auto limit = static_cast<std::int64_t>(std::uint64_t{1} << n);
    // Best ratio as (doubled edges, vertices); compared by cross-multiplication.
    std::int64_t best_num = 0;
    std::int64_t best_den = 1;
#pragma omp parallel
    {
        std::int64_t local_num = 0;
        std::int64_t local_den = 1;
#pragma omp for schedule(static)
        for (std::int64_t mask = 1; mask < limit; ++mask) {
            const auto set = static_cast<std::uint32_t>(mask);
            std::int64_t degree_sum = 0;
            for (std::uint32_t rest = set; rest; rest &= rest - 1) {
                degree_sum += __builtin_popcount(adj[static_cast<std::size_t>(__builtin_ctz(rest))] & set);
            }
            const std::int64_t size = __builtin_popcount(set);
            if (degree_sum * local_den > local_num * size) {
                local_num = degree_sum;
                local_den = size;
            }
        }
#pragma omp critical
        {
            if (local_num * best_den > best_num * local_den) {
                best_num = local_num;
                best_den = local_den;
            }
        }
    }
    return Rational(best_num, best_den);
}

}  // namespace sqroot
