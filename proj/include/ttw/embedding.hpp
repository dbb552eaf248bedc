#pragma once

#include <cstdint>
#include <vector>

#include "ttw/metric.hpp"

namespace ttw {

/// Hub-and-spoke metric with an implicit center: traveling between leaves i != j
/// costs leaf_weights[i] + leaf_weights[j].
struct StarMetric {
    std::vector<Weight> leaf_weights;

    int n() const { return static_cast<int>(leaf_weights.size()); }
    Weight total() const;  // w(S)
    Weight w_s(const std::vector<NodeId>& subset) const;

    friend bool operator==(const StarMetric&, const StarMetric&) = default;
};

/// Materializes the star as a MetricSpace on its leaves. At most one leaf may
/// have weight 0 (two zero leaves would put distinct nodes at distance 0).
MetricSpace star_to_metric(const StarMetric& s);

/// Star read off the Prim tree rooted at v0: leaf weight = edge to parent,
/// weight 0 at v0. Total weight equals MST(source) exactly.
struct Embedding {
    MetricSpace source;
    NodeId v0 = 0;
    StarMetric star;
    RootedTree tree;
};

Embedding embed_star(const MetricSpace& g, NodeId v0);

/// One step of the tree-transformation procedure. Cases: 1 = added node
/// outside V' (uncharged; may still open a cycle against a Steiner point),
/// 2 = edge already present (viewed as deleted and re-added), 3 = cycle opened
/// and a qualifying edge of maximal weight deleted. Steps with case 2 or 3 are
/// charged to the star weight of the added node.
struct TraceStep {
    int index = 0;
    NodeId from = 0, to = 0;  // added Prim edge (from in V_new, to = new node)
    Weight added_weight = 0;
    int case_tag = 1;
    bool charged = false;
    bool case1_cycle = false;
    bool deleted_present = false;
    Edge deleted{0, 0};
    Weight deleted_weight = 0;
    // post-step tree state, recorded for the containment/shape invariants
    int tree_vertices = 0;
    int tree_edges = 0;
    bool tree_connected_contains_vprime = false;
};

struct EmbedPrimTrace {
    NodeId v0 = 0;
    std::vector<NodeId> v_prime;
    std::vector<Edge> initial_tree;
    Weight initial_weight = 0;
    std::vector<TraceStep> steps;
    std::vector<Edge> final_tree;

    Weight charged_added() const;
    Weight charged_deleted() const;
};

/// Runs the transformation from the canonical exact Steiner tree of v_prime
/// (which must contain v0) to the Prim tree, logging every step.
EmbedPrimTrace embed_prim_trace(const MetricSpace& g, NodeId v0, std::vector<NodeId> v_prime,
                                const OracleCaps& caps = {});

struct VerifyEntry {
    std::vector<NodeId> subset;
    Weight steiner = 0;
    Weight w_s = 0;
    bool pass = false;
};

struct VerifyReport {
    bool property1_pass = false;
    Weight star_total = 0;
    Weight mst_weight = 0;
    std::string mode;
    std::vector<VerifyEntry> entries;
    bool pass = false;
};

/// Checks star total == MST and steiner(V') >= w_S(V') for subsets containing
/// v0: all of them in exhaustive mode (n <= 10), `samples` random ones otherwise.
VerifyReport verify_embedding_exhaustive(const MetricSpace& g, const Embedding& emb);
VerifyReport verify_embedding_sampled(const MetricSpace& g, const Embedding& emb, int samples,
                                      std::uint64_t seed, const OracleCaps& caps = {});

}  // namespace ttw
