#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace sqroot {

using Vertex = std::int32_t;
using Rational = boost::rational<std::int64_t>;

/// Undirected edge with endpoints stored so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Values are immutable once built; every transformation returns a new
/// graph. Neighbor lists are kept sorted, so iteration order is canonical.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Duplicate edges are merged. Throws std::invalid_argument on a
    /// self-loop or an endpoint outside 0..n-1.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    /// All edges in lexicographic (u, v) order.
    std::vector<Edge> edges() const;
    EdgeSet edge_set() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

struct BlockDecomposition {
    /// Vertex sets (sorted) of the blocks, in lexicographic order.
    /// Isolated vertices appear as trivial one-vertex blocks.
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;
    std::vector<Edge> bridges;
};

/// Graph on the same vertex set joining every pair at distance 1 or 2.
/// OpenMP-parallel over vertices; see reference::square for the serial form.
Graph square(const Graph& g);

BlockDecomposition blocks_and_cuts(const Graph& g);

bool are_true_twins(const Graph& g, Vertex u, Vertex v);

/// Exact 2m/n. Throws std::invalid_argument on the empty graph.
Rational average_degree(const Graph& g);

/// BFS distance, kUnreachable when u and v lie in different components.
std::size_t distance(const Graph& g, Vertex u, Vertex v);

std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Same vertex set, the listed edges removed (edges not present are ignored).
Graph remove_edges(const Graph& g, const EdgeSet& removed);
Graph add_edges(const Graph& g, const EdgeSet& added);

/// Same vertex set with vertex `v` isolated.
Graph isolate_vertex(const Graph& g, Vertex v);

/// Vertices of N(u) ∩ N(v), sorted.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace sqroot
