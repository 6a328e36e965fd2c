#include "sqroot/tree_decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sqroot {

int TreeDecomposition::width() const {
    std::size_t best = 0;
    for (const auto& bag : bags) best = std::max(best, bag.size());
    return static_cast<int>(best) - 1;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    const std::size_t nodes = td.bags.size();
    if (nodes == 0) return g.vertex_count() == 0;
    if (td.tree_edges.size() != nodes - 1) return false;

    std::vector<std::vector<std::size_t>> tree(nodes);
    for (const auto& [a, b] : td.tree_edges) {
        if (a >= nodes || b >= nodes || a == b) return false;
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    {
        std::vector<bool> seen(nodes, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (auto y : tree[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        if (reached != nodes) return false;
    }

    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> holders(n);
    for (std::size_t i = 0; i < nodes; ++i) {
        for (Vertex v : td.bags[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
            holders[static_cast<std::size_t>(v)].push_back(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (holders[v].empty()) return false;
    }
    for (const Edge& e : g.edges()) {
        const auto& a = holders[static_cast<std::size_t>(e.u)];
        const bool shared = std::any_of(a.begin(), a.end(), [&](std::size_t i) {
            return std::binary_search(td.bags[i].begin(), td.bags[i].end(), e.v);
        });
        if (!shared) return false;
    }
    // Nodes holding v must induce a connected subtree.
    std::vector<int> mark(nodes, -1);
    for (std::size_t v = 0; v < n; ++v) {
        for (auto i : holders[v]) mark[i] = static_cast<int>(v);
        std::vector<std::size_t> stack{holders[v].front()};
        std::size_t reached = 1;
        mark[holders[v].front()] = -2;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (auto y : tree[x]) {
                if (mark[y] == static_cast<int>(v)) {
                    mark[y] = -2;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        for (auto i : holders[v]) mark[i] = -1;
        if (reached != holders[v].size()) return false;
    }
    return true;
}

TreeDecomposition h_tree_decomposition(const Graph& root) {
    if (root.vertex_count() == 0 || component_count(root) != 1) {
        throw std::invalid_argument("h_tree_decomposition needs a connected, nonempty root");
    }
    const BlockDecomposition blocks = blocks_and_cuts(root);
    TreeDecomposition td;
    td.bags = blocks.blocks;
    for (Vertex c : blocks.cut_vertices) {
        const std::size_t node = td.bags.size();
        std::vector<Vertex> bag(root.neighbors(c).begin(), root.neighbors(c).end());
        bag.push_back(c);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
            if (std::binary_search(blocks.blocks[b].begin(), blocks.blocks[b].end(), c)) td.tree_edges.emplace_back(b, node);
        }
    }
    return td;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, std::span<const Vertex> order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw std::invalid_argument("elimination order must list every vertex");
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(order[i]);
        if (v >= n || position[v] != n) throw std::invalid_argument("elimination order is not a permutation");
        position[v] = i;
    }

    TreeDecomposition td;
    if (n == 0) {
        td.bags.emplace_back();
        return td;
    }
    std::vector<std::set<Vertex>> fill(n);
    for (const Edge& e : g.edges()) {
        fill[static_cast<std::size_t>(e.u)].insert(e.v);
        fill[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<std::size_t> parent(n, n);
    td.bags.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        const auto vi = static_cast<std::size_t>(v);
        std::vector<Vertex> later(fill[vi].begin(), fill[vi].end());
        for (Vertex a : later) {
            fill[static_cast<std::size_t>(a)].erase(v);
            for (Vertex b : later) {
                if (a != b) fill[static_cast<std::size_t>(a)].insert(b);
            }
        }
        std::size_t first = n;
        for (Vertex a : later) first = std::min(first, position[static_cast<std::size_t>(a)]);
        parent[i] = first;
        later.push_back(v);
        std::sort(later.begin(), later.end());
        td.bags[i] = std::move(later);
    }
    std::size_t previous_root = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (parent[i] != n) {
            td.tree_edges.emplace_back(i, parent[i]);
        } else {
            if (previous_root != n) td.tree_edges.emplace_back(previous_root, i);
            previous_root = i;
        }
    }
    return td;
}

}  // namespace sqroot
