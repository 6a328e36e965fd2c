#include "sqroot/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sqroot {

namespace {

constexpr std::size_t kMaxCanonicalVertices = 11;

int pair_bit(std::size_t i, std::size_t j, std::size_t n) {
    // row-major index of (i, j), i < j, in the strict upper triangle
    return static_cast<int>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

std::uint64_t code_for(const Graph& g, const std::vector<Vertex>& order) {
    const std::size_t n = order.size();
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.has_edge(order[i], order[j])) code |= std::uint64_t{1} << pair_bit(i, j, n);
        }
    }
    return code;
}

// Calls visit(order) for every order consistent with the degree classes.
template <class Visit>
void for_each_degree_order(const Graph& g, Visit&& visit) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == classes.size()) {
            visit(order);
            return;
        }
        const auto [lo, hi] = classes[c];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            rec(c + 1);
        } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                       order.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    rec(0);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.vertex_count() > kMaxCanonicalVertices) throw std::invalid_argument("canonical_code supports n <= 11");
    std::uint64_t best = ~std::uint64_t{0};
    for_each_degree_order(g, [&](const std::vector<Vertex>& order) { best = std::min(best, code_for(g, order)); });
    return best;
}

Graph canonical_form(const Graph& g) {
    if (g.vertex_count() > kMaxCanonicalVertices) throw std::invalid_argument("canonical_form supports n <= 11");
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<Vertex> best_order;
    for_each_degree_order(g, [&](const std::vector<Vertex>& order) {
        const auto code = code_for(g, order);
        if (code < best) {
            best = code;
            best_order = order;
        }
    });
    std::vector<Vertex> position(g.vertex_count());
    for (std::size_t i = 0; i < best_order.size(); ++i) position[static_cast<std::size_t>(best_order[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    return Graph(g.vertex_count(), edges);
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n, std::size_t max_degree) {
    if (n == 0) return {Graph()};
    if (n > kMaxCanonicalVertices) throw std::invalid_argument("corpus generation supports n <= 11");
    std::vector<Graph> level{Graph(1)};
    for (std::size_t size = 2; size <= n; ++size) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Graph>> next;
        const std::size_t old_n = size - 1;
        for (const Graph& base : level) {
            std::vector<Vertex> open;
            for (std::size_t v = 0; v < old_n; ++v) {
                if (base.degree(static_cast<Vertex>(v)) < max_degree) open.push_back(static_cast<Vertex>(v));
            }
            const auto base_edges = base.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_degree) continue;
                std::vector<Edge> edges = base_edges;
                for (std::size_t k = 0; k < open.size(); ++k) {
                    if (mask >> k & 1) edges.emplace_back(open[k], static_cast<Vertex>(old_n));
                }
                Graph candidate(size, edges);
                const auto code = canonical_code(candidate);
                if (seen.insert(code).second) next.emplace_back(code, canonical_form(candidate));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
            return a.second.edge_count() != b.second.edge_count() ? a.second.edge_count() < b.second.edge_count()
                                                                  : a.first < b.first;
        });
        level.clear();
        for (auto& entry : next) level.push_back(std::move(entry.second));
    }
    return level;
}

std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, std::size_t max_degree) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto level = nonisomorphic_graphs(n, max_degree);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

}  // namespace sqroot
