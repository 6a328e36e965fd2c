#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sqroot/tree_decomposition.hpp"

namespace sqroot {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : b) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

bool test(const Bits& b, std::size_t i) { return b[i / 64] >> (i % 64) & 1; }
void flip(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }

// Greedy min-fill ordering and its width.
std::pair<std::vector<Vertex>, std::size_t> min_fill_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<bool> gone(n, false);
    std::vector<Vertex> order;
    std::size_t width = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_fill = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::size_t fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
                for (auto b = std::next(a); b != adj[v].end(); ++b) {
                    if (!adj[static_cast<std::size_t>(*a)].contains(*b)) ++fill;
                }
            }
            if (best == n || fill < best_fill || (fill == best_fill && adj[v].size() < adj[best].size())) {
                best = v;
                best_fill = fill;
            }
        }
        width = std::max(width, adj[best].size());
        const std::vector<Vertex> nbrs(adj[best].begin(), adj[best].end());
        for (Vertex a : nbrs) {
            adj[static_cast<std::size_t>(a)].erase(static_cast<Vertex>(best));
            for (Vertex b : nbrs) {
                if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
            }
        }
        adj[best].clear();
        gone[best] = true;
        order.push_back(static_cast<Vertex>(best));
    }
    return {order, width};
}

class EliminationSearch {
public:
    EliminationSearch(const Graph& g, std::size_t k) : g_(g), k_(k), n_(g.vertex_count()) {}

    std::optional<std::vector<Vertex>> run() {
        Bits eliminated((n_ + 63) / 64, 0);
        if (!search(eliminated, 0)) return std::nullopt;
        for (std::size_t v = 0; v < n_; ++v) {
            if (std::find(order_.begin(), order_.end(), static_cast<Vertex>(v)) == order_.end()) {
                order_.push_back(static_cast<Vertex>(v));
            }
        }
        return order_;
    }

private:
    // Neighbours of v in the graph obtained by eliminating `eliminated`.
    std::vector<Vertex> filled_neighbors(const Bits& eliminated, Vertex v) const {
        std::vector<Vertex> out;
        std::vector<bool> seen(n_, false);
        std::vector<Vertex> stack{v};
        seen[static_cast<std::size_t>(v)] = true;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g_.neighbors(x)) {
                const auto yi = static_cast<std::size_t>(y);
                if (seen[yi]) continue;
                seen[yi] = true;
                if (test(eliminated, yi)) {
                    stack.push_back(y);
                } else {
                    out.push_back(y);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool search(Bits& eliminated, std::size_t count) {
        if (n_ - count <= k_ + 1) return true;
        if (dead_.contains(eliminated)) return false;

        std::vector<std::vector<Vertex>> nbrs(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            if (!test(eliminated, v)) nbrs[v] = filled_neighbors(eliminated, static_cast<Vertex>(v));
        }
        const auto adjacent = [&](Vertex a, Vertex b) {
            const auto& list = nbrs[static_cast<std::size_t>(a)];
            return std::binary_search(list.begin(), list.end(), b);
        };

        for (std::size_t v = 0; v < n_; ++v) {
            if (test(eliminated, v) || nbrs[v].size() > k_) continue;
            bool simplicial = true;
            for (std::size_t i = 0; i < nbrs[v].size() && simplicial; ++i) {
                for (std::size_t j = i + 1; j < nbrs[v].size() && simplicial; ++j) {
                    simplicial = adjacent(nbrs[v][i], nbrs[v][j]);
                }
            }
            if (!simplicial) continue;
            flip(eliminated, v);
            order_.push_back(static_cast<Vertex>(v));
            const bool ok = search(eliminated, count + 1);
            flip(eliminated, v);
            if (ok) return true;
            order_.pop_back();
            dead_.insert(eliminated);
            return false;
        }

        for (std::size_t v = 0; v < n_; ++v) {
            if (test(eliminated, v) || nbrs[v].size() > k_) continue;
            flip(eliminated, v);
            order_.push_back(static_cast<Vertex>(v));
            const bool ok = search(eliminated, count + 1);
            flip(eliminated, v);
            if (ok) return true;
            order_.pop_back();
        }
        dead_.insert(eliminated);
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t n_;
    std::vector<Vertex> order_;
    std::unordered_set<Bits, BitsHash> dead_;
};

std::optional<std::vector<Vertex>> component_order(const Graph& c, std::size_t k) {
    const std::size_t n = c.vertex_count();
    std::vector<Vertex> trivial(n);
    std::iota(trivial.begin(), trivial.end(), 0);
    if (n <= k + 1) return trivial;
    // A graph of treewidth ≤ k has at most kn − k(k+1)/2 edges.
    if (c.edge_count() > k * n - k * (k + 1) / 2) return std::nullopt;
    auto [greedy, width] = min_fill_order(c);
    if (width <= k) return greedy;
    return EliminationSearch(c, k).run();
}

}  // namespace

std::optional<TreeDecomposition> treewidth_at_most(const Graph& g, std::size_t k) {
    std::vector<Vertex> order;
    for (const auto& comp : connected_components(g)) {
        const Graph local = induced_subgraph(g, comp);
        auto local_order = component_order(local, k);
        if (!local_order) return std::nullopt;
        for (Vertex v : *local_order) order.push_back(comp[static_cast<std::size_t>(v)]);
    }
    auto td = decomposition_from_elimination(g, order);
    if (td.width() > static_cast<int>(k)) return std::nullopt;
    return td;
}

std::size_t treewidth(const Graph& g) {
    for (std::size_t k = 0;; ++k) {
        if (treewidth_at_most(g, k)) return k;
    }
}

}  // namespace sqroot
