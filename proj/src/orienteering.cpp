#include "ttw/orienteering.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ttw/errors.hpp"

namespace ttw {

namespace {
constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Lexicographically smallest min-length path covering `mask`, built front to
// back. The metric is symmetric, so dp[mask][v] (min length ending at v) is
// also the min length of a path over mask starting at v.
std::vector<NodeId> reconstruct_lex(const MetricSpace& g,
                                    const std::vector<std::vector<Weight>>& dp, std::size_t mask,
                                    Weight total) {
    std::vector<NodeId> path;
    Weight remaining = total;  // min length of a path over `mask` starting at the next pick
    NodeId cur = -1;
    while (mask) {
        NodeId pick = -1;
        Weight hop_taken = 0;
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!(mask & (std::size_t{1} << v))) continue;
            Weight hop = cur == -1 ? 0 : g.dist(cur, v);
            if (hop <= remaining && dp[mask][static_cast<std::size_t>(v)] == remaining - hop) {
                pick = v;
                hop_taken = hop;
                break;
            }
        }
        if (pick == -1) throw Error("orienteering reconstruction failed");
        path.push_back(pick);
        remaining -= hop_taken;
        mask ^= std::size_t{1} << pick;
        cur = pick;
    }
    return path;
}

}  // namespace

OrienteeringSolution orienteering_exact(const MetricSpace& g, const std::vector<Weight>& prizes,
                                        Weight budget, const OracleCaps& caps) {
    const int n = g.n();
    if (n > caps.tsp_max_nodes)
        throw InstanceTooLarge("orienteering instance", n, caps.tsp_max_nodes);
    if (budget < 0) throw PreconditionViolated("negative orienteering budget");
    if (static_cast<int>(prizes.size()) != n)
        throw PreconditionViolated("prize vector size mismatch");
    for (Weight p : prizes)
        if (p < 0) throw PreconditionViolated("negative prize");

    const std::size_t full = std::size_t{1} << n;
    std::vector<std::vector<Weight>> dp(full, std::vector<Weight>(static_cast<std::size_t>(n), kInf));
    for (NodeId v = 0; v < n; ++v) dp[std::size_t{1} << v][static_cast<std::size_t>(v)] = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (NodeId last = 0; last < n; ++last) {
            Weight cur = dp[mask][static_cast<std::size_t>(last)];
            if (cur >= kInf || !(mask & (std::size_t{1} << last))) continue;
            if (cur > budget) continue;
            for (NodeId nxt = 0; nxt < n; ++nxt) {
                if (mask & (std::size_t{1} << nxt)) continue;
                Weight cand = cur + g.dist(last, nxt);
                std::size_t nm = mask | (std::size_t{1} << nxt);
                if (cand < dp[nm][static_cast<std::size_t>(nxt)])
                    dp[nm][static_cast<std::size_t>(nxt)] = cand;
            }
        }
    }

    // Best (prize, -length) over feasible masks.
    std::vector<Weight> mask_prize(full, 0);
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t low = mask & (~mask + 1);
        int lv = std::countr_zero(low);
        mask_prize[mask] = mask_prize[mask ^ low] + prizes[static_cast<std::size_t>(lv)];
    }
    Weight best_prize = -1, best_len = kInf;
    for (std::size_t mask = 1; mask < full; ++mask) {
        Weight len = kInf;
        for (NodeId v = 0; v < n; ++v)
            len = std::min(len, dp[mask][static_cast<std::size_t>(v)]);
        if (len > budget) continue;
        if (mask_prize[mask] > best_prize ||
            (mask_prize[mask] == best_prize && len < best_len)) {
            best_prize = mask_prize[mask];
            best_len = len;
        }
    }

    // All masks achieving the optimum; keep the lexicographically smallest path.
    std::vector<NodeId> best_path;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (mask_prize[mask] != best_prize) continue;
        Weight len = kInf;
        for (NodeId v = 0; v < n; ++v)
            len = std::min(len, dp[mask][static_cast<std::size_t>(v)]);
        if (len != best_len) continue;
        auto path = reconstruct_lex(g, dp, mask, len);
        if (best_path.empty() || path < best_path) best_path = std::move(path);
    }
    return OrienteeringSolution{best_path, best_len, best_prize};
}

OrienteeringSolution orienteering_greedy(const MetricSpace& g, const std::vector<Weight>& prizes,
                                         Weight budget) {
    const int n = g.n();
    if (budget < 0) throw PreconditionViolated("negative orienteering budget");

    NodeId seed = 0;
    for (NodeId v = 1; v < n; ++v)
        if (prizes[static_cast<std::size_t>(v)] > prizes[static_cast<std::size_t>(seed)]) seed = v;

    OrienteeringSolution sol;
    sol.path = {seed};
    sol.length = 0;
    sol.prize = prizes[static_cast<std::size_t>(seed)];
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(seed)] = true;

    while (true) {
        struct Cand {
            Weight prize;
            Weight added;
            NodeId node;
            bool front;
        };
        std::vector<Cand> cands;
        for (NodeId v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            Weight front_cost = g.dist(v, sol.path.front());
            Weight back_cost = g.dist(sol.path.back(), v);
            bool at_front = front_cost < back_cost;
            Weight added = std::min(front_cost, back_cost);
            cands.push_back({prizes[static_cast<std::size_t>(v)], added, v, at_front});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.prize != b.prize) return a.prize > b.prize;
            if (a.added != b.added) return a.added < b.added;
            return a.node < b.node;
        });
        bool extended = false;
        for (const Cand& c : cands) {
            if (sol.length + c.added > budget) continue;
            if (c.front)
                sol.path.insert(sol.path.begin(), c.node);
            else
                sol.path.push_back(c.node);
            sol.length += c.added;
            sol.prize += c.prize;
            used[static_cast<std::size_t>(c.node)] = true;
            extended = true;
            break;
        }
        if (!extended) break;
    }
    return sol;
}

}  // namespace ttw
