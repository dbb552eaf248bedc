#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ttw/caps.hpp"

namespace ttw {

using NodeId = int;
using Weight = std::int64_t;
using Edge = std::pair<NodeId, NodeId>;  // normalized: first < second

/// Finite metric space with exact integer distances. Immutable once built;
/// construction enforces the metric axioms (zero diagonal, symmetry, triangle
/// inequality) plus d(i,j) >= 1 off the diagonal.
class MetricSpace {
public:
    static MetricSpace validate(std::vector<std::vector<Weight>> matrix);

    int n() const { return static_cast<int>(dist_.size()); }
    Weight dist(NodeId i, NodeId j) const { return dist_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<Weight>>& matrix() const { return dist_; }

    friend bool operator==(const MetricSpace& a, const MetricSpace& b) { return a.dist_ == b.dist_; }

private:
    explicit MetricSpace(std::vector<std::vector<Weight>> m) : dist_(std::move(m)) {}
    std::vector<std::vector<Weight>> dist_;
};

/// Spanning tree given by parent pointers; parent[root] == root with weight 0.
struct RootedTree {
    NodeId root = 0;
    std::vector<NodeId> parent;
    std::vector<Weight> edge_weight;

    Weight total_weight() const;
    std::vector<Edge> edges() const;
};

struct Tour {
    std::vector<NodeId> order;  // visits every node once; closing edge implied
    Weight weight = 0;
};

/// Prim from `root`. Ties: smallest candidate node id, then smallest
/// attaching endpoint id, so identical inputs give identical trees.
RootedTree mst_prim(const MetricSpace& g, NodeId root);

Weight diameter(const MetricSpace& g);

/// Lexicographically smallest diameter-realizing pair (i < j); (0,0) for n=1.
Edge diameter_pair(const MetricSpace& g);

/// Held-Karp subset DP; requires n <= caps.tsp_max_nodes.
Tour tsp_exact(const MetricSpace& g, const OracleCaps& caps = {});

/// Preorder shortcut of the Prim tree rooted at 0; weight <= 2*MST(G).
Tour tsp_approx(const MetricSpace& g);

/// Exact minimum Steiner tree weight spanning `terminals` (Dreyfus-Wagner DP
/// over terminal subsets). Requires |terminals| <= caps.steiner_max_terminals.
Weight steiner_exact(const MetricSpace& g, const std::vector<NodeId>& terminals,
                     const OracleCaps& caps = {});

/// Steiner weights of every nonempty node subset at once, indexed by bitmask.
/// Used by the exhaustive embedding verifier; requires n <= 16.
std::vector<Weight> steiner_all_subsets(const MetricSpace& g);

/// A canonical optimal Steiner tree: minimum weight, then lexicographically
/// smallest normalized edge list. Deterministic so regression traces are stable.
std::vector<Edge> steiner_tree_edges(const MetricSpace& g, const std::vector<NodeId>& terminals,
                                     const OracleCaps& caps = {});

Weight tree_weight(const MetricSpace& g, const std::vector<Edge>& edges);

}  // namespace ttw
