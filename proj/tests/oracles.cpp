#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ttw/errors.hpp"

namespace ttw::oracle {

namespace {
constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

Weight pruefer_tree_weight(const MetricSpace& g, const std::vector<NodeId>& nodes,
                           const std::vector<int>& code) {
    const int m = static_cast<int>(nodes.size());
    std::vector<int> degree(static_cast<std::size_t>(m), 1);
    for (int c : code) degree[static_cast<std::size_t>(c)] += 1;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    Weight w = 0;
    for (int c : code) {
        int leaf = -1;
        for (int v = 0; v < m; ++v)
            if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        used[static_cast<std::size_t>(leaf)] = true;
        degree[static_cast<std::size_t>(c)] -= 1;
        w += g.dist(nodes[static_cast<std::size_t>(leaf)], nodes[static_cast<std::size_t>(c)]);
    }
    int a = -1, b = -1;
    for (int v = 0; v < m; ++v)
        if (!used[static_cast<std::size_t>(v)]) {
            if (a == -1)
                a = v;
            else
                b = v;
        }
    w += g.dist(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]);
    return w;
}

}  // namespace

Weight brute_mst(const MetricSpace& g, const std::vector<NodeId>& nodes) {
    const int m = static_cast<int>(nodes.size());
    if (m > 7) throw PreconditionViolated("brute_mst capped at 7 nodes");
    if (m <= 1) return 0;
    if (m == 2) return g.dist(nodes[0], nodes[1]);
    std::vector<int> code(static_cast<std::size_t>(m) - 2, 0);
    Weight best = kInf;
    while (true) {
        best = std::min(best, pruefer_tree_weight(g, nodes, code));
        int i = static_cast<int>(code.size()) - 1;
        while (i >= 0 && code[static_cast<std::size_t>(i)] == m - 1) {
            code[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        code[static_cast<std::size_t>(i)] += 1;
    }
    return best;
}

Weight brute_mst(const MetricSpace& g) {
    std::vector<NodeId> nodes(static_cast<std::size_t>(g.n()));
    std::iota(nodes.begin(), nodes.end(), 0);
    return brute_mst(g, nodes);
}

Weight brute_tsp(const MetricSpace& g) {
    const int n = g.n();
    if (n > 8) throw PreconditionViolated("brute_tsp capped at 8 nodes");
    if (n == 1) return 0;
    std::vector<NodeId> perm;
    for (NodeId v = 1; v < n; ++v) perm.push_back(v);
    Weight best = kInf;
    do {
        Weight w = g.dist(0, perm.front());
        for (std::size_t i = 0; i + 1 < perm.size(); ++i) w += g.dist(perm[i], perm[i + 1]);
        w += g.dist(perm.back(), 0);
        best = std::min(best, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Weight brute_steiner(const MetricSpace& g, const std::vector<NodeId>& terminals) {
    if (g.n() > 7) throw PreconditionViolated("brute_steiner capped at 7 nodes");
    std::vector<NodeId> terms = terminals;
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    std::vector<NodeId> others;
    for (NodeId v = 0; v < g.n(); ++v)
        if (!std::binary_search(terms.begin(), terms.end(), v)) others.push_back(v);
    Weight best = kInf;
    const std::size_t count = std::size_t{1} << others.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<NodeId> nodes = terms;
        for (std::size_t b = 0; b < others.size(); ++b)
            if (mask & (std::size_t{1} << b)) nodes.push_back(others[b]);
        best = std::min(best, brute_mst(g, nodes));
    }
    return best;
}

namespace {

void opt_dfs(const Instance& inst, NodeId pos, Time free_at, unsigned mask, int count, int& best) {
    best = std::max(best, count);
    const auto& reqs = inst.requests;
    for (std::size_t k = 0; k < reqs.size(); ++k) {
        if (mask & (1u << k)) continue;
        const Request& r = reqs[k];
        Time arrive = free_at + (r.node == pos ? 0 : inst.metric.dist(pos, r.node));
        Time s = std::max(arrive, r.release);
        if (s > r.deadline) continue;
        opt_dfs(inst, r.node, s + 1, mask | (1u << k), count + 1, best);
    }
}

}  // namespace

int brute_opt(const Instance& inst, NodeId start) {
    if (inst.requests.size() > 12) throw PreconditionViolated("brute_opt capped at 12 requests");
    int best = 0;
    opt_dfs(inst, start, 1, 0, 0, best);
    return best;
}

namespace {

void orient_dfs(const MetricSpace& g, const std::vector<Weight>& prizes, Weight budget,
                std::vector<NodeId>& path, unsigned mask, Weight length, Weight prize,
                BrutePath& best) {
    bool better = prize > best.prize || (prize == best.prize && length < best.length) ||
                  (prize == best.prize && length == best.length && path < best.path);
    if (better) best = {path, length, prize};
    for (NodeId v = 0; v < g.n(); ++v) {
        if (mask & (1u << v)) continue;
        Weight nl = length + g.dist(path.back(), v);
        if (nl > budget) continue;
        path.push_back(v);
        orient_dfs(g, prizes, budget, path, mask | (1u << v), nl,
                   prize + prizes[static_cast<std::size_t>(v)], best);
        path.pop_back();
    }
}

}  // namespace

BrutePath brute_orienteering(const MetricSpace& g, const std::vector<Weight>& prizes,
                             Weight budget) {
    if (g.n() > 8) throw PreconditionViolated("brute_orienteering capped at 8 nodes");
    BrutePath best;
    best.prize = -1;
    for (NodeId v = 0; v < g.n(); ++v) {
        std::vector<NodeId> path{v};
        orient_dfs(g, prizes, budget, path, 1u << v, 0, prizes[static_cast<std::size_t>(v)], best);
    }
    return best;
}

}  // namespace ttw::oracle
