#include "ttw/metric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ttw/errors.hpp"

namespace ttw {

namespace {
constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
}

MetricSpace MetricSpace::validate(std::vector<std::vector<Weight>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw PreconditionViolated("metric must have at least one node");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw PreconditionViolated("metric matrix is not square at row " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            if (m[i][j] < 0)
                throw PreconditionViolated("negative distance at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
        }
    }
    for (int i = 0; i < n; ++i)
        if (m[i][i] != 0) throw NonzeroDiagonal(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw AsymmetryError(i, j);
            if (m[i][j] < 1)
                throw PreconditionViolated("off-diagonal distance below 1 at (" + std::to_string(i) +
                                           "," + std::to_string(j) + "); scale the instance");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (m[i][j] > m[i][k] + m[k][j]) throw TriangleViolation(i, j, k);
            }
        }
    return MetricSpace(std::move(m));
}

Weight RootedTree::total_weight() const {
    return std::accumulate(edge_weight.begin(), edge_weight.end(), Weight{0});
}

std::vector<Edge> RootedTree::edges() const {
    std::vector<Edge> out;
    for (NodeId v = 0; v < static_cast<NodeId>(parent.size()); ++v) {
        if (v == root) continue;
        out.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootedTree mst_prim(const MetricSpace& g, NodeId root) {
    const int n = g.n();
    RootedTree t;
    t.root = root;
    t.parent.assign(n, root);
    t.edge_weight.assign(n, 0);
    t.parent[root] = root;

    std::vector<bool> in_tree(n, false);
    std::vector<Weight> key(n, kInf);
    std::vector<NodeId> attach(n, root);
    in_tree[root] = true;
    for (NodeId v = 0; v < n; ++v) {
        if (v == root) continue;
        key[v] = g.dist(root, v);
        attach[v] = root;
    }
    for (int added = 1; added < n; ++added) {
        NodeId best = -1;
        for (NodeId v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            if (best == -1 || key[v] < key[best]) best = v;
            // equal keys: smaller id wins, which the ascending scan already gives
        }
        in_tree[best] = true;
        t.parent[best] = attach[best];
        t.edge_weight[best] = key[best];
        for (NodeId v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            Weight w = g.dist(best, v);
            if (w < key[v] || (w == key[v] && best < attach[v])) {
                key[v] = w;
                attach[v] = best;
            }
        }
    }
    return t;
}

Weight diameter(const MetricSpace& g) {
    Weight best = 0;
    for (NodeId i = 0; i < g.n(); ++i)
        for (NodeId j = i + 1; j < g.n(); ++j) best = std::max(best, g.dist(i, j));
    return best;
}

Edge diameter_pair(const MetricSpace& g) {
    Edge best{0, 0};
    Weight best_w = -1;
    for (NodeId i = 0; i < g.n(); ++i)
        for (NodeId j = i + 1; j < g.n(); ++j)
            if (g.dist(i, j) > best_w) {
                best_w = g.dist(i, j);
                best = {i, j};
            }
    return best;
}

Tour tsp_exact(const MetricSpace& g, const OracleCaps& caps) {
    const int n = g.n();
    if (n > caps.tsp_max_nodes) throw InstanceTooLarge("tsp instance", n, caps.tsp_max_nodes);
    if (n == 1) return Tour{{0}, 0};
    if (n == 2) return Tour{{0, 1}, 2 * g.dist(0, 1)};

    // Held-Karp anchored at node 0; dp over subsets of {1..n-1}.
    const int m = n - 1;
    const std::size_t full = std::size_t{1} << m;
    std::vector<std::vector<Weight>> dp(full, std::vector<Weight>(m, kInf));
    std::vector<std::vector<int>> prev(full, std::vector<int>(m, -1));
    for (int v = 0; v < m; ++v) dp[std::size_t{1} << v][v] = g.dist(0, v + 1);
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int last = 0; last < m; ++last) {
            if (!(mask & (std::size_t{1} << last)) || dp[mask][last] >= kInf) continue;
            const Weight base = dp[mask][last];
            for (int nxt = 0; nxt < m; ++nxt) {
                if (mask & (std::size_t{1} << nxt)) continue;
                std::size_t nm = mask | (std::size_t{1} << nxt);
                Weight cand = base + g.dist(last + 1, nxt + 1);
                if (cand < dp[nm][nxt]) {
                    dp[nm][nxt] = cand;
                    prev[nm][nxt] = last;
                }
            }
        }
    }
    const std::size_t all = full - 1;
    int best_last = -1;
    Weight best = kInf;
    for (int last = 0; last < m; ++last) {
        Weight cand = dp[all][last] + g.dist(last + 1, 0);
        if (cand < best) {
            best = cand;
            best_last = last;
        }
    }
    std::vector<NodeId> rev;
    std::size_t mask = all;
    int cur = best_last;
    while (cur != -1) {
        rev.push_back(cur + 1);
        int p = prev[mask][cur];
        mask ^= std::size_t{1} << cur;
        cur = p;
    }
    Tour t;
    t.order.push_back(0);
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) t.order.push_back(*it);
    t.weight = best;
    return t;
}

Tour tsp_approx(const MetricSpace& g) {
    const int n = g.n();
    if (n == 1) return Tour{{0}, 0};
    RootedTree mst = mst_prim(g, 0);
    std::vector<std::vector<NodeId>> children(n);
    for (NodeId v = 0; v < n; ++v)
        if (v != mst.root) children[mst.parent[v]].push_back(v);
    for (auto& c : children) std::sort(c.begin(), c.end());

    Tour t;
    std::vector<NodeId> stack{0};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        t.order.push_back(v);
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    }
    for (std::size_t i = 0; i + 1 < t.order.size(); ++i) t.weight += g.dist(t.order[i], t.order[i + 1]);
    t.weight += g.dist(t.order.back(), t.order.front());
    return t;
}

namespace {

// Dreyfus-Wagner over an explicit terminal list. dp[mask][v] = min weight of a
// tree containing terminals(mask) and v. The graph is metric-closed, so one
// min-over-u pass closes each level.
std::vector<std::vector<Weight>> dreyfus_wagner(const MetricSpace& g,
                                                const std::vector<NodeId>& terms) {
    const int n = g.n();
    const int k = static_cast<int>(terms.size());
    const std::size_t full = std::size_t{1} << k;
    std::vector<std::vector<Weight>> dp(full, std::vector<Weight>(n, kInf));
    for (int ti = 0; ti < k; ++ti)
        for (NodeId v = 0; v < n; ++v) dp[std::size_t{1} << ti][v] = g.dist(terms[ti], v);
    for (std::size_t mask = 1; mask < full; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // singletons initialized above
        auto& row = dp[mask];
        for (std::size_t sub = (mask - 1) & mask; sub > (mask ^ sub); sub = (sub - 1) & mask) {
            const auto& a = dp[sub];
            const auto& b = dp[mask ^ sub];
            for (NodeId v = 0; v < n; ++v) {
                Weight cand = a[v] + b[v];
                if (cand < row[v]) row[v] = cand;
            }
        }
        for (NodeId v = 0; v < n; ++v) {
            Weight best = row[v];
            for (NodeId u = 0; u < n; ++u) {
                Weight cand = row[u] + g.dist(u, v);
                if (cand < best) best = cand;
            }
            row[v] = best;
        }
    }
    return dp;
}

}  // namespace

Weight steiner_exact(const MetricSpace& g, const std::vector<NodeId>& terminals,
                     const OracleCaps& caps) {
    std::vector<NodeId> terms = terminals;
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.empty()) throw PreconditionViolated("steiner_exact needs a nonempty terminal set");
    for (NodeId t : terms)
        if (t < 0 || t >= g.n()) throw PreconditionViolated("terminal out of range");
    if (static_cast<int>(terms.size()) > caps.steiner_max_terminals)
        throw InstanceTooLarge("steiner terminal set", static_cast<long long>(terms.size()),
                               caps.steiner_max_terminals);
    if (terms.size() == 1) return 0;

    NodeId anchor = terms.back();
    terms.pop_back();
    auto dp = dreyfus_wagner(g, terms);
    return dp[(std::size_t{1} << terms.size()) - 1][anchor];
}

std::vector<Weight> steiner_all_subsets(const MetricSpace& g) {
    const int n = g.n();
    if (n > 16) throw InstanceTooLarge("steiner_all_subsets node count", n, 16);
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto dp = dreyfus_wagner(g, all);

    std::vector<Weight> out(std::size_t{1} << n, 0);
    for (std::size_t mask = 1; mask < out.size(); ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // singleton: weight 0
        int anchor = 0;
        while (!(mask & (std::size_t{1} << anchor))) ++anchor;
        out[mask] = dp[mask ^ (std::size_t{1} << anchor)][anchor];
    }
    return out;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

std::vector<Edge> steiner_tree_edges(const MetricSpace& g, const std::vector<NodeId>& terminals,
                                     const OracleCaps& caps) {
    const int n = g.n();
    if (n > 16) throw InstanceTooLarge("steiner_tree_edges node count", n, 16);
    std::vector<NodeId> terms = terminals;
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.empty()) throw PreconditionViolated("steiner_tree_edges needs terminals");
    if (static_cast<int>(terms.size()) > caps.steiner_max_terminals)
        throw InstanceTooLarge("steiner terminal set", static_cast<long long>(terms.size()),
                               caps.steiner_max_terminals);
    if (terms.size() == 1) return {};

    std::vector<bool> is_term(n, false);
    for (NodeId t : terms) is_term[t] = true;
    std::vector<NodeId> free_nodes;
    for (NodeId v = 0; v < n; ++v)
        if (!is_term[v]) free_nodes.push_back(v);

    // Sorted once; per-candidate Kruskal filters to the active node set.
    struct E { Weight w; NodeId u, v; };
    std::vector<E> all_edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) all_edges.push_back({g.dist(u, v), u, v});
    std::sort(all_edges.begin(), all_edges.end(),
              [](const E& a, const E& b) { return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v); });

    Weight best_w = kInf;
    std::vector<Edge> best_edges;
    const std::size_t fcount = std::size_t{1} << free_nodes.size();
    for (std::size_t fmask = 0; fmask < fcount; ++fmask) {
        std::vector<bool> active(n, false);
        int active_count = static_cast<int>(terms.size());
        for (NodeId t : terms) active[t] = true;
        for (std::size_t b = 0; b < free_nodes.size(); ++b)
            if (fmask & (std::size_t{1} << b)) {
                active[free_nodes[b]] = true;
                ++active_count;
            }
        Dsu dsu(n);
        Weight w = 0;
        std::vector<Edge> edges;
        int joined = 1;
        for (const E& e : all_edges) {
            if (!active[e.u] || !active[e.v]) continue;
            if (dsu.unite(e.u, e.v)) {
                w += e.w;
                edges.emplace_back(e.u, e.v);
                if (++joined == active_count) break;
            }
        }
        std::sort(edges.begin(), edges.end());
        if (w < best_w || (w == best_w && edges < best_edges)) {
            best_w = w;
            best_edges = std::move(edges);
        }
    }
    return best_edges;
}

Weight tree_weight(const MetricSpace& g, const std::vector<Edge>& edges) {
    Weight w = 0;
    for (const auto& [u, v] : edges) w += g.dist(u, v);
    return w;
}

}  // namespace ttw
