#include "kfission/graph.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace kfission {

AbstractGraph::AbstractGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), adj_(vertex_count) {
    for (auto& [i, j] : edges_) {
        if (i > j) std::swap(i, j);
        if (i == j) throw Error(ErrorKind::InvariantViolation, "self-loop");
        if (j >= n_) throw Error(ErrorKind::InvariantViolation, "edge index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw Error(ErrorKind::InvariantViolation, "duplicate edge");
    }
    for (const auto& [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool AbstractGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

AbstractGraph AbstractGraph::induced(const std::vector<std::size_t>& vertices) const {
    std::vector<std::size_t> pos(n_, n_);
    for (std::size_t k = 0; k < vertices.size(); ++k) pos[vertices[k]] = k;
    std::vector<Edge> out;
    for (const auto& [i, j] : edges_) {
        if (pos[i] != n_ && pos[j] != n_) out.emplace_back(pos[i], pos[j]);
    }
    return {vertices.size(), std::move(out)};
}

AbstractGraph AbstractGraph::relabeled(const std::vector<std::size_t>& perm) const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [i, j] : edges_) out.emplace_back(perm[i], perm[j]);
    return {n_, std::move(out)};
}

std::vector<std::vector<std::size_t>> connected_components(const AbstractGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w : g.adjacency()[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

BipartiteResult is_bipartite(const AbstractGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<int> color(n, -1);
    std::vector<std::size_t> parent(n, none);
    std::vector<std::size_t> depth(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : g.adjacency()[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    // Odd cycle: v -> ... -> lca <- ... <- w, closed by edge vw.
                    std::vector<std::size_t> left{v};
                    std::vector<std::size_t> right{w};
                    std::size_t a = v;
                    std::size_t b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    BipartiteResult r;
                    r.odd_cycle = std::move(left);
                    r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
                    return r;
                }
            }
        }
    }
    return {true, std::move(color), {}};
}

bool is_one_forest(const AbstractGraph& g) {
    const auto comps = connected_components(g);
    std::vector<std::size_t> comp_of(g.vertex_count());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t v : comps[c]) comp_of[v] = c;
    }
    std::vector<std::size_t> edge_count(comps.size(), 0);
    for (const auto& e : g.edges()) ++edge_count[comp_of[e.first]];
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (edge_count[c] != comps[c].size()) return false;
    }
    return true;
}

std::vector<std::size_t> functional_orientation(const AbstractGraph& g) {
    if (!is_one_forest(g)) throw Error(ErrorKind::NotOneForest, "graph is not a 1-forest");
    const std::size_t n = g.vertex_count();
    const auto& adj = g.adjacency();
    // Peel leaves; what remains are the cycle vertices.
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    std::deque<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        const std::size_t v = leaves.front();
        leaves.pop_front();
        removed[v] = true;
        for (std::size_t w : adj[v]) {
            if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
        }
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> out(n, none);
    for (std::size_t s = 0; s < n; ++s) {
        if (removed[s] || out[s] != none) continue;
        // s is the smallest unvisited cycle vertex of its component.
        std::size_t prev = s;
        std::size_t cur = s;
        std::size_t next = none;
        for (std::size_t w : adj[s]) {
            if (!removed[w]) {
                next = w;
                break;
            }
        }
        do {
            out[cur] = next;
            prev = cur;
            cur = next;
            next = none;
            for (std::size_t w : adj[cur]) {
                if (!removed[w] && w != prev) {
                    next = w;
                    break;
                }
            }
        } while (cur != s);
    }
    // Tree vertices point to their parent on the way to the cycle.
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v]) queue.push_back(v);
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[v]) {
            if (removed[w] && out[w] == none) {
                out[w] = v;
                queue.push_back(w);
            }
        }
    }
    return out;
}

AbstractGraph tensor_with_k2(const AbstractGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto& [v, w] : g.edges()) {
        edges.emplace_back(v, w + n);
        edges.emplace_back(v + n, w);
    }
    return {2 * n, std::move(edges)};
}

AbstractGraph disjoint_union(const AbstractGraph& a, const AbstractGraph& b) {
    std::vector<Edge> edges = a.edges();
    const std::size_t shift = a.vertex_count();
    for (const auto& [i, j] : b.edges()) edges.emplace_back(i + shift, j + shift);
    return {a.vertex_count() + b.vertex_count(), std::move(edges)};
}

bool isomorphic_small(const AbstractGraph& g1, const AbstractGraph& g2) {
    constexpr std::size_t limit = 16;
    if (g1.vertex_count() > limit || g2.vertex_count() > limit) {
        throw Error(ErrorKind::TooLarge, "isomorphism test is capped at 16 vertices");
    }
    const std::size_t n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edges().size() != g2.edges().size()) return false;
    std::vector<std::size_t> d1(n), d2(n);
    for (std::size_t v = 0; v < n; ++v) {
        d1[v] = g1.adjacency()[v].size();
        d2[v] = g2.adjacency()[v].size();
    }
    {
        auto s1 = d1;
        auto s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(n, none);
    std::vector<bool> used(n, false);
    // Highest-degree vertices first prunes fastest.
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d1[a] > d1[b]; });

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || d1[v] != d2[w]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t u = order[k];
                ok = g1.has_edge(u, v) == g2.has_edge(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(depth + 1)) return true;
            used[w] = false;
            map[v] = none;
        }
        return false;
    };
    return extend(0);
}

}  // namespace kfission
