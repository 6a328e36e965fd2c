#include "sqroot/reference.hpp"

#include <stdexcept>
#include <vector>

namespace sqroot::reference {

Graph square(const Graph& g) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const std::size_t d = distance(g, u, v);
            if (d >= 1 && d <= 2) edges.emplace_back(u, v);
        }
    }
    return Graph(g.vertex_count(), edges);
}

std::optional<RecognizableEdge> find_recognizable_edge(const Graph& g) {
    for (const Edge& e : g.edges()) {
        if (auto p = uv_partition(g, e.u, e.v)) return RecognizableEdge{e, *p};
        if (auto p = uv_partition(g, e.v, e.u)) return RecognizableEdge{e, *p};
    }
    return std::nullopt;
}

Rational max_average_degree_exhaustive(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("maximum average degree of the empty graph");
    if (n > 30) throw std::invalid_argument("exhaustive maximum average degree supports n <= 30");
    const auto edges = g.edges();
    Rational best(0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::int64_t inside = 0;
        for (const Edge& e : edges) {
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++inside;
        }
        const Rational ratio(2 * inside, __builtin_popcountll(mask));
        if (ratio > best) best = ratio;
    }
    return best;
}

}  // namespace sqroot::reference
