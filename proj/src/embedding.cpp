#include "ttw/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "ttw/errors.hpp"
#include "ttw/rng.hpp"

namespace ttw {

namespace {
constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
}

Weight StarMetric::total() const {
    return std::accumulate(leaf_weights.begin(), leaf_weights.end(), Weight{0});
}

Weight StarMetric::w_s(const std::vector<NodeId>& subset) const {
    Weight w = 0;
    for (NodeId v : subset) w += leaf_weights[static_cast<std::size_t>(v)];
    return w;
}

MetricSpace star_to_metric(const StarMetric& s) {
    const int n = s.n();
    int zeros = 0;
    for (Weight w : s.leaf_weights) {
        if (w < 0) throw PreconditionViolated("negative star leaf weight");
        if (w == 0) ++zeros;
    }
    if (zeros > 1) throw PreconditionViolated("star metric with two zero-weight leaves");
    std::vector<std::vector<Weight>> m(n, std::vector<Weight>(n, 0));
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j) m[i][j] = s.leaf_weights[i] + s.leaf_weights[j];
    return MetricSpace::validate(std::move(m));
}

Embedding embed_star(const MetricSpace& g, NodeId v0) {
    if (v0 < 0 || v0 >= g.n()) throw PreconditionViolated("v0 out of range");
    RootedTree tree = mst_prim(g, v0);
    StarMetric star;
    star.leaf_weights = tree.edge_weight;  // weight to parent; 0 at v0
    return Embedding{g, v0, std::move(star), std::move(tree)};
}

namespace {

// Working tree for Embed-Prim: explicit edge set plus membership.
struct WorkTree {
    int n;
    std::set<Edge> edges;
    std::vector<bool> member;

    explicit WorkTree(int n_) : n(n_), member(static_cast<std::size_t>(n_), false) {}

    bool has_edge(NodeId a, NodeId b) const {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    }
    void add_edge(NodeId a, NodeId b) {
        edges.insert({std::min(a, b), std::max(a, b)});
        member[static_cast<std::size_t>(a)] = member[static_cast<std::size_t>(b)] = true;
    }
    void remove_edge(const Edge& e) { edges.erase(e); }

    // Unique path between two members, as the list of edges.
    std::vector<Edge> path(NodeId from, NodeId to) const {
        std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
        for (const auto& [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<NodeId> parent(static_cast<std::size_t>(n), -1);
        std::vector<NodeId> stack{from};
        parent[static_cast<std::size_t>(from)] = from;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            if (v == to) break;
            for (NodeId u : adj[static_cast<std::size_t>(v)])
                if (parent[static_cast<std::size_t>(u)] == -1) {
                    parent[static_cast<std::size_t>(u)] = v;
                    stack.push_back(u);
                }
        }
        std::vector<Edge> out;
        NodeId cur = to;
        while (cur != from) {
            NodeId p = parent[static_cast<std::size_t>(cur)];
            if (p == -1) throw Error("embed-prim: endpoints not connected in working tree");
            out.push_back({std::min(cur, p), std::max(cur, p)});
            cur = p;
        }
        return out;
    }

    int vertex_count() const {
        return static_cast<int>(std::count(member.begin(), member.end(), true));
    }

    // Tree shape check: connected on its members and |E| = |V|-1, containing all of req.
    bool is_tree_containing(const std::vector<NodeId>& req) const {
        for (NodeId v : req)
            if (!member[static_cast<std::size_t>(v)]) return false;
        int vc = vertex_count();
        if (static_cast<int>(edges.size()) != std::max(0, vc - 1)) return false;
        if (vc == 0) return false;
        // connectivity over members
        std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
        for (const auto& [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        NodeId seed = -1;
        for (NodeId v = 0; v < n; ++v)
            if (member[static_cast<std::size_t>(v)]) {
                seed = v;
                break;
            }
        std::vector<bool> vis(static_cast<std::size_t>(n), false);
        std::vector<NodeId> stack{seed};
        vis[static_cast<std::size_t>(seed)] = true;
        int reached = 0;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            ++reached;
            for (NodeId u : adj[static_cast<std::size_t>(v)])
                if (!vis[static_cast<std::size_t>(u)]) {
                    vis[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
        }
        return reached == vc;
    }
};

}  // namespace

Weight EmbedPrimTrace::charged_added() const {
    Weight w = 0;
    for (const TraceStep& s : steps)
        if (s.charged) w += s.added_weight;
    return w;
}

Weight EmbedPrimTrace::charged_deleted() const {
    Weight w = 0;
    for (const TraceStep& s : steps)
        if (s.charged && s.deleted_present) w += s.deleted_weight;
    return w;
}

EmbedPrimTrace embed_prim_trace(const MetricSpace& g, NodeId v0, std::vector<NodeId> v_prime,
                                const OracleCaps& caps) {
    const int n = g.n();
    std::sort(v_prime.begin(), v_prime.end());
    v_prime.erase(std::unique(v_prime.begin(), v_prime.end()), v_prime.end());
    if (std::find(v_prime.begin(), v_prime.end(), v0) == v_prime.end())
        throw PreconditionViolated("v_prime must contain v0");

    EmbedPrimTrace trace;
    trace.v0 = v0;
    trace.v_prime = v_prime;
    trace.initial_tree = steiner_tree_edges(g, v_prime, caps);
    trace.initial_weight = tree_weight(g, trace.initial_tree);

    WorkTree t(n);
    t.member[static_cast<std::size_t>(v0)] = true;  // covers |V'| = 1
    for (const auto& e : trace.initial_tree) t.add_edge(e.first, e.second);

    std::vector<bool> in_vprime(static_cast<std::size_t>(n), false);
    for (NodeId v : v_prime) in_vprime[static_cast<std::size_t>(v)] = true;

    // Prim selection state, same tie rule as mst_prim.
    std::vector<bool> in_new(static_cast<std::size_t>(n), false);
    std::vector<Weight> key(static_cast<std::size_t>(n), kInf);
    std::vector<NodeId> attach(static_cast<std::size_t>(n), v0);
    in_new[static_cast<std::size_t>(v0)] = true;
    for (NodeId v = 0; v < n; ++v)
        if (v != v0) key[static_cast<std::size_t>(v)] = g.dist(v0, v);

    std::set<Edge> added_edges;

    for (int i = 1; i < n; ++i) {
        NodeId u = -1;
        for (NodeId v = 0; v < n; ++v) {
            if (in_new[static_cast<std::size_t>(v)]) continue;
            if (u == -1 || key[static_cast<std::size_t>(v)] < key[static_cast<std::size_t>(u)]) u = v;
        }
        NodeId w = attach[static_cast<std::size_t>(u)];
        Weight ew = key[static_cast<std::size_t>(u)];

        TraceStep step;
        step.index = i;
        step.from = w;
        step.to = u;
        step.added_weight = ew;

        const bool u_in_tree = t.member[static_cast<std::size_t>(u)];
        const bool edge_present = t.has_edge(w, u);
        if (!in_vprime[static_cast<std::size_t>(u)]) {
            step.case_tag = 1;
            if (!edge_present) {
                if (u_in_tree) {
                    // Prim edge re-enters an existing Steiner point: open the cycle.
                    auto cyc = t.path(u, w);
                    Edge best{-1, -1};
                    Weight bw = -1;
                    for (const Edge& e : cyc) {
                        if (added_edges.count(e)) continue;
                        bool touches = in_new[static_cast<std::size_t>(e.first)] ||
                                       in_new[static_cast<std::size_t>(e.second)];
                        if (!touches) continue;
                        Weight cw = g.dist(e.first, e.second);
                        if (cw > bw || (cw == bw && e < best)) {
                            bw = cw;
                            best = e;
                        }
                    }
                    if (best.first == -1) throw Error("embed-prim: no deletable edge on case-1 cycle");
                    t.add_edge(w, u);
                    t.remove_edge(best);
                    step.case1_cycle = true;
                    step.deleted_present = true;
                    step.deleted = best;
                    step.deleted_weight = bw;
                } else {
                    t.add_edge(w, u);
                }
            }
            // edge already present: nothing to do
        } else if (edge_present) {
            step.case_tag = 2;
            step.charged = true;
            step.deleted_present = true;
            step.deleted = {std::min(w, u), std::max(w, u)};
            step.deleted_weight = ew;  // viewed as deleted and re-added
        } else {
            step.case_tag = 3;
            step.charged = true;
            auto cyc = t.path(u, w);  // becomes the cycle once (w,u) is added
            Edge best{-1, -1};
            Weight bw = -1;
            for (const Edge& e : cyc) {
                if (added_edges.count(e)) continue;
                bool touches = in_new[static_cast<std::size_t>(e.first)] ||
                               in_new[static_cast<std::size_t>(e.second)];
                if (!touches) continue;
                Weight cw = g.dist(e.first, e.second);
                if (cw > bw || (cw == bw && e < best)) {
                    bw = cw;
                    best = e;
                }
            }
            if (best.first == -1) throw Error("embed-prim: no deletable edge on case-3 cycle");
            t.add_edge(w, u);
            t.remove_edge(best);
            step.deleted_present = true;
            step.deleted = best;
            step.deleted_weight = bw;
        }

        added_edges.insert({std::min(w, u), std::max(w, u)});
        in_new[static_cast<std::size_t>(u)] = true;
        for (NodeId v = 0; v < n; ++v) {
            if (in_new[static_cast<std::size_t>(v)]) continue;
            Weight cand = g.dist(u, v);
            if (cand < key[static_cast<std::size_t>(v)] ||
                (cand == key[static_cast<std::size_t>(v)] && u < attach[static_cast<std::size_t>(v)])) {
                key[static_cast<std::size_t>(v)] = cand;
                attach[static_cast<std::size_t>(v)] = u;
            }
        }

        step.tree_vertices = t.vertex_count();
        step.tree_edges = static_cast<int>(t.edges.size());
        step.tree_connected_contains_vprime = t.is_tree_containing(v_prime);
        trace.steps.push_back(step);
    }

    trace.final_tree.assign(t.edges.begin(), t.edges.end());
    return trace;
}

namespace {

VerifyEntry check_subset(const Embedding& emb, std::vector<NodeId> subset, Weight steiner_w) {
    VerifyEntry e;
    e.steiner = steiner_w;
    e.w_s = emb.star.w_s(subset);
    e.pass = e.steiner >= e.w_s;
    e.subset = std::move(subset);
    return e;
}

VerifyReport finish_report(const MetricSpace& g, const Embedding& emb, VerifyReport rep) {
    rep.star_total = emb.star.total();
    rep.mst_weight = mst_prim(g, emb.v0).total_weight();
    rep.property1_pass = rep.star_total == rep.mst_weight &&
                         emb.star.leaf_weights[static_cast<std::size_t>(emb.v0)] == 0;
    rep.pass = rep.property1_pass;
    for (const VerifyEntry& e : rep.entries) rep.pass = rep.pass && e.pass;
    return rep;
}

}  // namespace

VerifyReport verify_embedding_exhaustive(const MetricSpace& g, const Embedding& emb) {
    const int n = g.n();
    if (n > 10) throw InstanceTooLarge("exhaustive verification node count", n, 10);
    VerifyReport rep;
    rep.mode = "exhaustive";
    auto all = steiner_all_subsets(g);

    std::vector<NodeId> others;
    for (NodeId v = 0; v < n; ++v)
        if (v != emb.v0) others.push_back(v);
    const std::size_t count = std::size_t{1} << others.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<NodeId> subset{emb.v0};
        std::size_t node_mask = std::size_t{1} << emb.v0;
        for (std::size_t b = 0; b < others.size(); ++b)
            if (mask & (std::size_t{1} << b)) {
                subset.push_back(others[b]);
                node_mask |= std::size_t{1} << others[b];
            }
        std::sort(subset.begin(), subset.end());
        rep.entries.push_back(check_subset(emb, std::move(subset), all[node_mask]));
    }
    return finish_report(g, emb, std::move(rep));
}

VerifyReport verify_embedding_sampled(const MetricSpace& g, const Embedding& emb, int samples,
                                      std::uint64_t seed, const OracleCaps& caps) {
    VerifyReport rep;
    rep.mode = "sampled";
    Rng rng(seed);
    const int n = g.n();
    for (int s = 0; s < samples; ++s) {
        std::vector<NodeId> subset{emb.v0};
        for (NodeId v = 0; v < n; ++v)
            if (v != emb.v0 && rng.chance(1, 2)) subset.push_back(v);
        if (static_cast<int>(subset.size()) > caps.steiner_max_terminals) {
            subset.resize(static_cast<std::size_t>(caps.steiner_max_terminals));
        }
        std::sort(subset.begin(), subset.end());
        rep.entries.push_back(check_subset(emb, subset, steiner_exact(g, subset, caps)));
    }
    return finish_report(g, emb, std::move(rep));
}

}  // namespace ttw
