#include "sqroot/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>


namespace sqroot {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    edge_count_ = degree_sum / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    const auto& list = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

EdgeSet Graph::edge_set() const {
    auto list = edges();
    return EdgeSet(list.begin(), list.end());
}

Graph square(const Graph& g) {
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    std::vector<std::vector<Vertex>> ball(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<Vertex>(i);
        auto& out = ball[static_cast<std::size_t>(i)];
        for (Vertex w : g.neighbors(u)) {
            out.push_back(w);
            for (Vertex x : g.neighbors(w)) {
                if (x != u) out.push_back(x);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < ball.size(); ++u) {
        for (Vertex v : ball[u]) {
            if (static_cast<std::size_t>(v) > u) edges.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return Graph(g.vertex_count(), edges);
}

BlockDecomposition blocks_and_cuts(const Graph& g) {
    const std::size_t n = g.vertex_count();
    BlockDecomposition out;
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        const auto r = static_cast<Vertex>(root);
        if (g.degree(r) == 0) {
            disc[root] = timer++;
            out.blocks.push_back({r});
            continue;
        }
        std::vector<Frame> stack{{r, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                const auto wi = static_cast<std::size_t>(w);
                const auto vi = static_cast<std::size_t>(f.v);
                if (disc[wi] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[wi] = low[wi] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[wi] < disc[vi]) {
                    edge_stack.emplace_back(f.v, w);
                    low[vi] = std::min(low[vi], disc[wi]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& parent = stack.back();
            const auto pi = static_cast<std::size_t>(parent.v);
            const auto di = static_cast<std::size_t>(done.v);
            low[pi] = std::min(low[pi], low[di]);
            if (low[di] >= disc[pi]) {
                std::vector<Vertex> block;
                const Edge tree_edge(parent.v, done.v);
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.u);
                    block.push_back(e.v);
                    if (e == tree_edge) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                if (block.size() == 2) out.bridges.push_back(tree_edge);
                out.blocks.push_back(std::move(block));
            }
        }
    }

    // A vertex is a cut vertex iff it lies in two or more blocks.
    std::vector<int> membership(n, 0);
    for (const auto& block : out.blocks) {
        for (Vertex v : block) ++membership[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (membership[v] >= 2) out.cut_vertices.push_back(static_cast<Vertex>(v));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("are_true_twins needs distinct vertices");
    if (!g.has_edge(u, v) || g.degree(u) != g.degree(v)) return false;
    for (Vertex w : g.neighbors(u)) {
        if (w != v && !g.has_edge(v, w)) return false;
    }
    return true;
}

Rational average_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("average degree of the empty graph");
    return Rational(static_cast<std::int64_t>(2 * g.edge_count()), static_cast<std::int64_t>(g.vertex_count()));
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
    if (u == v) return 0;
    std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
    std::queue<Vertex> queue;
    dist[static_cast<std::size_t>(u)] = 0;
    queue.push(u);
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop();
        for (Vertex y : g.neighbors(x)) {
            auto& d = dist[static_cast<std::size_t>(y)];
            if (d != kUnreachable) continue;
            d = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return d;
            queue.push(y);
        }
    }
    return kUnreachable;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
    return best;
}

std::size_t min_degree(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    std::size_t best = g.degree(0);
    for (std::size_t v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(static_cast<Vertex>(v)));
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{static_cast<Vertex>(s)};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t component_count(const Graph& g) { return connected_components(g).size(); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            const Vertex j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    return Graph(vertices.size(), edges);
}

Graph remove_edges(const Graph& g, const EdgeSet& removed) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (!removed.contains(e)) kept.push_back(e);
    }
    return Graph(g.vertex_count(), kept);
}

Graph add_edges(const Graph& g, const EdgeSet& added) {
    auto edges = g.edges();
    edges.insert(edges.end(), added.begin(), added.end());
    return Graph(g.vertex_count(), edges);
}

Graph isolate_vertex(const Graph& g, Vertex v) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (e.u != v && e.v != v) kept.push_back(e);
    }
    return Graph(g.vertex_count(), kept);
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
    std::vector<Vertex> out;
    const auto a = g.neighbors(u);
    const auto b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.has_edge(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
    return Graph(leaves + 1, edges);
}

}  // namespace sqroot
