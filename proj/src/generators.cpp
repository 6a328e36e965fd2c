#include "sqroot/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sqroot/kernel.hpp"

namespace sqroot {

namespace {

struct Block {
    std::size_t size = 0;
    std::vector<Edge> edges;
};

Block cycle_block(std::size_t len) {
    Block b{len, {}};
    for (std::size_t i = 0; i < len; ++i) b.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len));
    return b;
}

std::vector<Block> block_shapes(std::size_t max_cycle) {
    std::vector<Block> shapes;
    shapes.push_back({2, {{0, 1}}});
    shapes.push_back({3, {{0, 1}, {1, 2}, {0, 2}}});
    shapes.push_back(cycle_block(4));
    shapes.push_back({4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}});
    shapes.push_back({4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
    for (std::size_t len = 6; len <= max_cycle; len += 2) shapes.push_back(cycle_block(len));
    return shapes;
}

}  // namespace

Graph generate_hkt_root(std::uint64_t seed, const HktParams& params) {
    std::mt19937_64 rng(seed);
    const std::size_t limit = std::max<std::size_t>(params.max_vertices, 1);
    const auto shapes = block_shapes(params.max_cycle);
    const auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };

    std::vector<Edge> edges;
    std::size_t n = 1;
    std::vector<std::size_t> degree(1, 0);
    const std::size_t attempts = 40 * limit;
    for (std::size_t attempt = 0; attempt < attempts && n < limit; ++attempt) {
        const Block& shape = shapes[pick(shapes.size())];
        if (n + shape.size - 1 > limit) continue;
        // K4 saturates every degree, so it only fits as the whole graph.
        if (shape.edges.size() == 6 && n + 3 != limit) continue;
        const std::size_t anchor = pick(n);
        std::vector<std::size_t> local_degree(shape.size, 0);
        for (const Edge& e : shape.edges) {
            ++local_degree[static_cast<std::size_t>(e.u)];
            ++local_degree[static_cast<std::size_t>(e.v)];
        }
        const std::size_t glue = pick(shape.size);
        if (degree[anchor] + local_degree[glue] > 3) continue;

        // Local vertex glue becomes anchor; the others get fresh ids.
        std::vector<Vertex> id(shape.size);
        Vertex next = static_cast<Vertex>(n);
        for (std::size_t i = 0; i < shape.size; ++i) id[i] = i == glue ? static_cast<Vertex>(anchor) : next++;
        std::vector<Edge> candidate = edges;
        for (const Edge& e : shape.edges) candidate.emplace_back(id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)]);
        const std::size_t grown = n + shape.size - 1;
        if (!hkt_planar_square_check(Graph(grown, candidate))) continue;

        edges = std::move(candidate);
        n = grown;
        degree.assign(n, 0);
        for (const Edge& e : edges) {
            ++degree[static_cast<std::size_t>(e.u)];
            ++degree[static_cast<std::size_t>(e.v)];
        }
    }

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Edge& e : edges) e = Edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph(n, edges);
}

ApexSquare generate_apex_square(std::uint64_t seed, std::size_t k, const HktParams& params) {
    const Graph base = generate_hkt_root(seed, params);
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);
    const std::size_t n = base.vertex_count();
    std::vector<Edge> edges = base.edges();
    for (std::size_t a = 0; a < k; ++a) {
        const auto apex = static_cast<Vertex>(n + a);
        const auto centre = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        std::vector<Vertex> pool(base.neighbors(centre).begin(), base.neighbors(centre).end());
        pool.push_back(centre);
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t take = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, pool.size()))(rng);
        for (std::size_t i = 0; i < take; ++i) edges.emplace_back(apex, pool[i]);
        for (std::size_t b = 0; b < a; ++b) {
            if (rng() & 1) edges.emplace_back(apex, static_cast<Vertex>(n + b));
        }
    }
    ApexSquare out;
    out.root = Graph(n + k, edges);
    out.square = square(out.root);
    out.k = k;
    return out;
}

}  // namespace sqroot
