#include "sqroot/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqroot {

namespace {

int edge_index(const std::vector<Edge>& edges, Edge e) {
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return (it != edges.end() && *it == e) ? static_cast<int>(it - edges.begin()) : -1;
}

constexpr std::int8_t kUndecided = -1;
constexpr std::int8_t kOut = 0;
constexpr std::int8_t kIn = 1;

class PropagatingSolver {
public:
    PropagatingSolver(const LabeledInstance& inst, SearchLimits limits)
        : inst_(inst), g_(inst.graph), limits_(limits), edges_(g_.edges()) {
        const std::size_t m = edges_.size();
        witnesses_.resize(m);
        conflicts_.resize(m);
        watchers_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Edge e = edges_[i];
            watchers_[i].push_back(static_cast<int>(i));
            for (Vertex w : common_neighbors(g_, e.u, e.v)) {
                const int a = edge_index(edges_, Edge(e.u, w));
                const int b = edge_index(edges_, Edge(w, e.v));
                witnesses_[i].push_back({a, b});
            }
            // Root edges ab and ac with bc ∉ E(G) cannot coexist.
            for (Vertex end : {e.u, e.v}) {
                const Vertex other = end == e.u ? e.v : e.u;
                for (Vertex c : g_.neighbors(end)) {
                    if (c != other && !g_.has_edge(c, other)) {
                        conflicts_[i].push_back(edge_index(edges_, Edge(end, c)));
                    }
                }
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (const auto& [a, b] : witnesses_[i]) {
                watchers_[static_cast<std::size_t>(a)].push_back(static_cast<int>(i));
                watchers_[static_cast<std::size_t>(b)].push_back(static_cast<int>(i));
            }
        }
    }

    SolveResult run() {
        SolveResult result;
        Assignment start(edges_.size(), kUndecided);
        std::vector<int> queue;
        bool ok = true;
        for (const Edge& e : inst_.forced) ok = ok && set(start, edge_index(edges_, e), kIn, queue);
        for (const Edge& e : inst_.forbidden) ok = ok && set(start, edge_index(edges_, e), kOut, queue);
        if (ok) {
            for (std::size_t i = 0; i < edges_.size(); ++i) queue.push_back(static_cast<int>(i));
            ok = propagate(start, queue);
        }
        if (ok) search(start);

        result.nodes = nodes_;
        if (solution_) {
            if (!verify_solution(inst_, *solution_)) throw std::logic_error("oracle produced an invalid root");
            result.verdict = Verdict::Yes;
            result.root = std::move(solution_);
        } else {
            result.verdict = timed_out_ ? Verdict::Timeout : Verdict::No;
        }
        return result;
    }

private:
    using Assignment = std::vector<std::int8_t>;

    struct CoverState {
        bool covered = false;
        int alive = 0;
        int own_alive = 0;
        int last_witness = -1;  // index into witnesses_[e] of an alive option
    };

    CoverState cover(const Assignment& a, std::size_t e) const {
        CoverState s;
        if (a[e] == kIn) {
            s.covered = true;
            return s;
        }
        if (a[e] == kUndecided) {
            s.own_alive = 1;
            ++s.alive;
        }
        const auto& ws = witnesses_[e];
        for (std::size_t k = 0; k < ws.size(); ++k) {
            const auto va = a[static_cast<std::size_t>(ws[k].first)];
            const auto vb = a[static_cast<std::size_t>(ws[k].second)];
            if (va == kIn && vb == kIn) {
                s.covered = true;
                return s;
            }
            if (va != kOut && vb != kOut) {
                ++s.alive;
                s.last_witness = static_cast<int>(k);
            }
        }
        return s;
    }

    bool set(Assignment& a, int var, std::int8_t value, std::vector<int>& queue) const {
        auto& slot = a[static_cast<std::size_t>(var)];
        if (slot == value) return true;
        if (slot != kUndecided) return false;
        slot = value;
        queue.push_back(var);
        return true;
    }

    bool propagate(Assignment& a, std::vector<int>& queue) const {
        while (!queue.empty()) {
            const auto f = static_cast<std::size_t>(queue.back());
            queue.pop_back();
            if (a[f] == kIn) {
                for (int c : conflicts_[f]) {
                    if (!set(a, c, kOut, queue)) return false;
                }
            }
            for (int e : watchers_[f]) {
                const auto ei = static_cast<std::size_t>(e);
                const CoverState s = cover(a, ei);
                if (s.covered) continue;
                if (s.alive == 0) return false;
                if (s.alive == 1) {
                    if (s.own_alive) {
                        if (!set(a, e, kIn, queue)) return false;
                    } else {
                        const auto& w = witnesses_[ei][static_cast<std::size_t>(s.last_witness)];
                        if (!set(a, w.first, kIn, queue) || !set(a, w.second, kIn, queue)) return false;
                    }
                }
            }
        }
        return true;
    }

    bool search(const Assignment& a) {
        if (++nodes_ > limits_.node_budget) {
            timed_out_ = true;
            return false;
        }
        int best = -1;
        int best_alive = 0;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const CoverState s = cover(a, e);
            if (s.covered) continue;
            if (best == -1 || s.alive < best_alive) {
                best = static_cast<int>(e);
                best_alive = s.alive;
            }
        }
        if (best == -1) {
            std::vector<Edge> chosen;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (a[e] == kIn) chosen.push_back(edges_[e]);
            }
            solution_ = Graph(g_.vertex_count(), chosen);
            return true;
        }

        const auto be = static_cast<std::size_t>(best);
        int var = -1;
        if (a[be] == kUndecided) {
            var = best;
        } else {
            for (const auto& [x, y] : witnesses_[be]) {
                const auto vx = a[static_cast<std::size_t>(x)];
                const auto vy = a[static_cast<std::size_t>(y)];
                if (vx == kOut || vy == kOut) continue;
                var = vx == kUndecided ? x : y;
                break;
            }
        }
        for (std::int8_t value : {kIn, kOut}) {
            Assignment next = a;
            std::vector<int> queue;
            if (set(next, var, value, queue) && propagate(next, queue) && search(next)) return true;
            if (timed_out_) return false;
        }
        return false;
    }

    const LabeledInstance& inst_;
    const Graph& g_;
    SearchLimits limits_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> witnesses_;
    std::vector<std::vector<int>> conflicts_;
    std::vector<std::vector<int>> watchers_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    std::optional<Graph> solution_;
};

// Plain canonical-order branching used as the second, independent route.
class Enumerator {
public:
    Enumerator(const LabeledInstance& inst, std::size_t cap, SearchLimits limits)
        : inst_(inst), g_(inst.graph), cap_(cap), limits_(limits), edges_(g_.edges()) {
        const std::size_t m = edges_.size();
        settles_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t last = i;
            for (Vertex w : common_neighbors(g_, edges_[i].u, edges_[i].v)) {
                last = std::max({last, static_cast<std::size_t>(edge_index(edges_, Edge(edges_[i].u, w))),
                                 static_cast<std::size_t>(edge_index(edges_, Edge(w, edges_[i].v)))});
            }
            settles_[last].push_back(i);
        }
        chosen_.assign(m, false);
        root_adj_.assign(g_.vertex_count(), {});
    }

    RootEnumeration run() {
        for (const Edge& e : inst_.forced) {
            if (inst_.forbidden.contains(e)) return out_;
        }
        dfs(0);
        std::sort(out_.roots.begin(), out_.roots.end(),
                  [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
        out_.nodes = nodes_;
        return out_;
    }

private:
    bool covered(std::size_t i) const {
        const Edge e = edges_[i];
        if (chosen_[i]) return true;
        for (Vertex w : root_adj_[static_cast<std::size_t>(e.u)]) {
            const auto& other = root_adj_[static_cast<std::size_t>(w)];
            if (std::find(other.begin(), other.end(), e.v) != other.end()) return true;
        }
        return false;
    }

    bool can_add(Edge e) const {
        for (Vertex end : {e.u, e.v}) {
            const Vertex other = end == e.u ? e.v : e.u;
            for (Vertex c : root_adj_[static_cast<std::size_t>(end)]) {
                if (!g_.has_edge(c, other)) return false;
            }
        }
        return true;
    }

    void dfs(std::size_t i) {
        if (stopped_) return;
        if (++nodes_ > limits_.node_budget) {
            out_.complete = false;
            stopped_ = true;
            return;
        }
        if (i == edges_.size()) {
            std::vector<Edge> picked;
            for (std::size_t k = 0; k < edges_.size(); ++k) {
                if (chosen_[k]) picked.push_back(edges_[k]);
            }
            Graph root(g_.vertex_count(), picked);
            if (!verify_solution(inst_, root)) throw std::logic_error("enumerator produced an invalid root");
            out_.roots.push_back(std::move(root));
            if (out_.roots.size() >= cap_) {
                out_.complete = false;
                stopped_ = true;
            }
            return;
        }
        const Edge e = edges_[i];
        const bool may_skip = !inst_.forced.contains(e);
        const bool may_take = !inst_.forbidden.contains(e) && can_add(e);
        for (int take = 0; take < 2; ++take) {
            if (take ? !may_take : !may_skip) continue;
            chosen_[i] = take;
            if (take) {
                root_adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
                root_adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
            }
            const bool ok = std::all_of(settles_[i].begin(), settles_[i].end(),
                                        [&](std::size_t s) { return covered(s); });
            if (ok) dfs(i + 1);
            if (take) {
                root_adj_[static_cast<std::size_t>(e.u)].pop_back();
                root_adj_[static_cast<std::size_t>(e.v)].pop_back();
            }
            chosen_[i] = false;
            if (stopped_) return;
        }
    }

    const LabeledInstance& inst_;
    const Graph& g_;
    std::size_t cap_;
    SearchLimits limits_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> settles_;
    std::vector<bool> chosen_;
    std::vector<std::vector<Vertex>> root_adj_;
    RootEnumeration out_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

SolveResult solve_labeled(const LabeledInstance& inst, SearchLimits limits) {
    if (!labels_within_graph(inst)) throw std::invalid_argument("label set is not a subset of the edge set");
    return PropagatingSolver(inst, limits).run();
}

RootEnumeration enumerate_roots(const LabeledInstance& inst, std::size_t cap, SearchLimits limits) {
    if (!labels_within_graph(inst)) throw std::invalid_argument("label set is not a subset of the edge set");
    if (cap == 0) return RootEnumeration{{}, false, 0};
    return Enumerator(inst, cap, limits).run();
}

RootEnumeration enumerate_roots(const Graph& g, std::size_t cap, SearchLimits limits) {
    return enumerate_roots(LabeledInstance{g, {}, {}}, cap, limits);
}

}  // namespace sqroot
