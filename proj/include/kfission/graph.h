#pragma once

#include "kfission/halving.h"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace kfission {

/// Simple undirected graph on vertices 0..n-1.
class AbstractGraph {
public:
    AbstractGraph() = default;
    /// Throws InvariantViolation on self-loops, duplicates or bad indices.
    AbstractGraph(std::size_t vertex_count, std::vector<Edge> edges);
    static AbstractGraph of(const Geograph& g) { return {g.size(), g.edges()}; }

    std::size_t vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
    bool has_edge(std::size_t i, std::size_t j) const;

    /// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
    AbstractGraph induced(const std::vector<std::size_t>& vertices) const;
    /// Image under a vertex relabeling old -> perm[old].
    AbstractGraph relabeled(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const AbstractGraph& a, const AbstractGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const AbstractGraph& g);

struct BipartiteResult {
    bool bipartite = false;
    /// 0/1 color per vertex when bipartite.
    std::vector<int> coloring;
    /// Closed walk of odd length (first vertex not repeated) otherwise.
    std::vector<std::size_t> odd_cycle;
};

BipartiteResult is_bipartite(const AbstractGraph& g);

/// Every component has as many edges as vertices.
bool is_one_forest(const AbstractGraph& g);

/// Outdegree-1 orientation of a 1-forest: `out[v]` is v's successor. Cycles
/// start at their smallest vertex and head to its smaller cycle neighbour;
/// tree edges point toward the cycle. Throws NotOneForest.
std::vector<std::size_t> functional_orientation(const AbstractGraph& g);

/// G x K2 on vertices v + n*side: (v,0)-(w,1) and (v,1)-(w,0) per edge vw.
AbstractGraph tensor_with_k2(const AbstractGraph& g);

/// Disjoint union; vertices of b are shifted by a.vertex_count().
AbstractGraph disjoint_union(const AbstractGraph& a, const AbstractGraph& b);

/// Exact backtracking isomorphism test; throws TooLarge above 16 vertices.
bool isomorphic_small(const AbstractGraph& g1, const AbstractGraph& g2);

}  // namespace kfission
