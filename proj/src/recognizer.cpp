#include "sqroot/recognizer.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sqroot {

namespace {

bool sees_any(const Graph& g, Vertex w, const std::vector<Vertex>& set) {
    return std::any_of(set.begin(), set.end(), [&](Vertex s) { return g.has_edge(w, s); });
}

// Conditions c) and d) for one side: every w in N(a) \ N[b] must see `own`
// and must not see `other`.
bool private_side_ok(const Graph& g, Vertex a, Vertex b, const std::vector<Vertex>& own,
                     const std::vector<Vertex>& other) {
    for (Vertex w : g.neighbors(a)) {
        if (w == b || g.has_edge(w, b)) continue;
        if (sees_any(g, w, other) || !sees_any(g, w, own)) return false;
    }
    return true;
}

}  // namespace

bool is_uv_partition(const Graph& g, const UVPartition& p) {
    if (!g.has_edge(p.u, p.v) || p.x.empty() || p.y.empty()) return false;
    std::vector<Vertex> joined = p.x;
    joined.insert(joined.end(), p.y.begin(), p.y.end());
    std::sort(joined.begin(), joined.end());
    if (std::adjacent_find(joined.begin(), joined.end()) != joined.end()) return false;
    if (joined != common_neighbors(g, p.u, p.v)) return false;
    if (!is_clique(g, p.x) || !is_clique(g, p.y)) return false;
    for (Vertex a : p.x) {
        if (sees_any(g, a, p.y)) return false;
    }
    return private_side_ok(g, p.u, p.v, p.x, p.y) && private_side_ok(g, p.v, p.u, p.y, p.x);
}

std::optional<UVPartition> uv_partition(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("uv_partition called on a non-edge");
    const std::vector<Vertex> common = common_neighbors(g, u, v);
    if (common.size() < 2) return std::nullopt;

    // G[common] must be exactly two cliques with nothing between them; its
    // connected components are then forced to be those cliques.
    std::vector<Vertex> first{common.front()};
    std::vector<Vertex> second;
    for (std::size_t i = 1; i < common.size(); ++i) {
        (g.has_edge(common.front(), common[i]) ? first : second).push_back(common[i]);
    }
    if (second.empty()) return std::nullopt;
    if (!is_clique(g, first) || !is_clique(g, second)) return std::nullopt;
    for (Vertex a : first) {
        if (sees_any(g, a, second)) return std::nullopt;
    }

    for (int flip = 0; flip < 2; ++flip) {
        const auto& x = flip == 0 ? first : second;
        const auto& y = flip == 0 ? second : first;
        if (private_side_ok(g, u, v, x, y) && private_side_ok(g, v, u, y, x)) {
            return UVPartition{u, v, x, y};
        }
    }
    return std::nullopt;
}

std::optional<RecognizableEdge> find_recognizable_edge(const Graph& g) {
    const std::vector<Edge> edges = g.edges();
    const auto m = static_cast<std::int64_t>(edges.size());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();

#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (std::int64_t i = 0; i < m; ++i) {
        if (i >= best) continue;
        const Edge e = edges[static_cast<std::size_t>(i)];
        if (uv_partition(g, e.u, e.v) || uv_partition(g, e.v, e.u)) best = std::min(best, i);
    }

    if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    const Edge e = edges[static_cast<std::size_t>(best)];
    if (auto p = uv_partition(g, e.u, e.v)) return RecognizableEdge{e, *p};
    return RecognizableEdge{e, *uv_partition(g, e.v, e.u)};
}

}  // namespace sqroot
