#include "ttw/offline_opt.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "ttw/errors.hpp"

namespace ttw {

namespace {

constexpr Time kInf = std::numeric_limits<Time>::max() / 4;

void check_cancel(CancelToken* cancel) {
    if (cancel && cancel->cancelled.load(std::memory_order_relaxed)) throw Cancelled();
}

std::vector<std::pair<RequestId, Time>> replay_starts(const Instance& inst, NodeId start,
                                                      const std::vector<RequestId>& order) {
    std::vector<std::pair<RequestId, Time>> serves;
    NodeId pos = start;
    Time free_at = 1;
    for (RequestId id : order) {
        const Request& r = inst.by_id(id);
        Time arrive = free_at + (r.node == pos ? 0 : inst.metric.dist(pos, r.node));
        Time s = std::max(arrive, r.release);
        serves.emplace_back(id, s);
        free_at = s + 1;
        pos = r.node;
    }
    return serves;
}

}  // namespace

OptResult opt_exact_plain(const Instance& inst, NodeId start, const OracleCaps& caps,
                          CancelToken* cancel) {
    const int m = static_cast<int>(inst.requests.size());
    if (m > caps.opt_max_requests)
        throw InstanceTooLarge("opt request count", m, caps.opt_max_requests);
    if (m == 0) return OptResult{0, {}, 0};

    const std::size_t full = std::size_t{1} << m;
    std::vector<Time> dp(full * static_cast<std::size_t>(m), kInf);
    std::vector<signed char> parent(full * static_cast<std::size_t>(m), -2);
    auto at = [m](std::size_t mask, int last) { return mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(last); };

    const auto& reqs = inst.requests;
    for (int k = 0; k < m; ++k) {
        Time arrive = 1 + (reqs[static_cast<std::size_t>(k)].node == start
                               ? 0
                               : inst.metric.dist(start, reqs[static_cast<std::size_t>(k)].node));
        Time s = std::max(arrive, reqs[static_cast<std::size_t>(k)].release);
        if (s <= reqs[static_cast<std::size_t>(k)].deadline) {
            dp[at(std::size_t{1} << k, k)] = s + 1;
            parent[at(std::size_t{1} << k, k)] = -1;
        }
    }

    std::int64_t explored = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if ((mask & 0xfff) == 0) check_cancel(cancel);
        for (int last = 0; last < m; ++last) {
            if (!(mask & (std::size_t{1} << last))) continue;
            Time c = dp[at(mask, last)];
            if (c >= kInf) continue;
            ++explored;
            const Request& prev = reqs[static_cast<std::size_t>(last)];
            for (int k = 0; k < m; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                const Request& r = reqs[static_cast<std::size_t>(k)];
                Time arrive = c + (r.node == prev.node ? 0 : inst.metric.dist(prev.node, r.node));
                Time s = std::max(arrive, r.release);
                if (s > r.deadline) continue;
                std::size_t nm = mask | (std::size_t{1} << k);
                if (s + 1 < dp[at(nm, k)]) {
                    dp[at(nm, k)] = s + 1;
                    parent[at(nm, k)] = static_cast<signed char>(last);
                }
            }
        }
    }

    int best_count = 0;
    Time best_c = kInf;
    std::size_t best_mask = 0;
    int best_last = -1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        int pc = std::popcount(mask);
        if (pc < best_count) continue;
        for (int last = 0; last < m; ++last) {
            if (!(mask & (std::size_t{1} << last))) continue;
            Time c = dp[at(mask, last)];
            if (c >= kInf) continue;
            if (pc > best_count || c < best_c || (c == best_c && mask < best_mask)) {
                best_count = pc;
                best_c = c;
                best_mask = mask;
                best_last = last;
            }
        }
    }

    OptResult res;
    res.explored_states = explored;
    res.throughput = best_count;
    if (best_count > 0) {
        std::vector<RequestId> order;
        std::size_t mask = best_mask;
        int cur = best_last;
        while (cur >= 0) {
            order.push_back(reqs[static_cast<std::size_t>(cur)].id);
            signed char p = parent[at(mask, cur)];
            mask ^= std::size_t{1} << cur;
            cur = p;
        }
        std::reverse(order.begin(), order.end());
        res.schedule = schedule_from_serves(inst, start, replay_starts(inst, start, order));
    }
    return res;
}

OptResult opt_exact_bundle(const Instance& inst, NodeId start, const OracleCaps& caps,
                           CancelToken* cancel) {
    struct ClassKey {
        Time release, deadline;
        NodeId node;
        bool operator<(const ClassKey& o) const {
            return std::tie(release, deadline, node) < std::tie(o.release, o.deadline, o.node);
        }
    };
    std::map<ClassKey, std::vector<RequestId>> grouped;
    for (const Request& r : inst.requests) grouped[{r.release, r.deadline, r.node}].push_back(r.id);

    const int cc = static_cast<int>(grouped.size());
    if (cc > caps.opt_max_requests)
        throw InstanceTooLarge("bundle class count", cc, caps.opt_max_requests);
    if (cc == 0) return OptResult{0, {}, 0};

    std::vector<ClassKey> keys;
    std::vector<std::vector<RequestId>> ids;
    std::vector<std::int64_t> counts;
    for (auto& [k, v] : grouped) {
        std::sort(v.begin(), v.end());
        keys.push_back(k);
        ids.push_back(v);
        counts.push_back(static_cast<std::int64_t>(v.size()));
    }

    std::vector<std::int64_t> stride(static_cast<std::size_t>(cc) + 1);
    stride[0] = 1;
    for (int c = 0; c < cc; ++c) {
        stride[static_cast<std::size_t>(c) + 1] = stride[static_cast<std::size_t>(c)] * (counts[static_cast<std::size_t>(c)] + 1);
        if (stride[static_cast<std::size_t>(c) + 1] * cc > caps.opt_bundle_max_states)
            throw InstanceTooLarge("bundle state space",
                                   stride[static_cast<std::size_t>(c) + 1] * cc,
                                   caps.opt_bundle_max_states);
    }
    const std::int64_t states = stride[static_cast<std::size_t>(cc)];

    std::vector<Time> dp(static_cast<std::size_t>(states) * static_cast<std::size_t>(cc), kInf);
    std::vector<signed char> parent(dp.size(), -2);
    auto at = [cc](std::int64_t code, int last) {
        return static_cast<std::size_t>(code) * static_cast<std::size_t>(cc) + static_cast<std::size_t>(last);
    };

    for (int c = 0; c < cc; ++c) {
        Time arrive = 1 + (keys[static_cast<std::size_t>(c)].node == start
                               ? 0
                               : inst.metric.dist(start, keys[static_cast<std::size_t>(c)].node));
        Time s = std::max(arrive, keys[static_cast<std::size_t>(c)].release);
        if (s <= keys[static_cast<std::size_t>(c)].deadline) {
            dp[at(stride[static_cast<std::size_t>(c)], c)] = s + 1;
            parent[at(stride[static_cast<std::size_t>(c)], c)] = -1;
        }
    }

    std::int64_t explored = 0;
    std::vector<std::int64_t> vec(static_cast<std::size_t>(cc));
    for (std::int64_t code = 1; code < states; ++code) {
        if ((code & 0xfff) == 0) check_cancel(cancel);
        std::int64_t rem = code;
        for (int c = 0; c < cc; ++c) {
            vec[static_cast<std::size_t>(c)] = rem % (counts[static_cast<std::size_t>(c)] + 1);
            rem /= counts[static_cast<std::size_t>(c)] + 1;
        }
        for (int last = 0; last < cc; ++last) {
            if (vec[static_cast<std::size_t>(last)] == 0) continue;
            Time c0 = dp[at(code, last)];
            if (c0 >= kInf) continue;
            ++explored;
            for (int nxt = 0; nxt < cc; ++nxt) {
                if (vec[static_cast<std::size_t>(nxt)] >= counts[static_cast<std::size_t>(nxt)]) continue;
                const ClassKey& k = keys[static_cast<std::size_t>(nxt)];
                Time arrive = c0 + (k.node == keys[static_cast<std::size_t>(last)].node
                                        ? 0
                                        : inst.metric.dist(keys[static_cast<std::size_t>(last)].node, k.node));
                Time s = std::max(arrive, k.release);
                if (s > k.deadline) continue;
                std::int64_t ncode = code + stride[static_cast<std::size_t>(nxt)];
                if (s + 1 < dp[at(ncode, nxt)]) {
                    dp[at(ncode, nxt)] = s + 1;
                    parent[at(ncode, nxt)] = static_cast<signed char>(last);
                }
            }
        }
    }

    std::int64_t best_total = 0;
    Time best_c = kInf;
    std::int64_t best_code = 0;
    int best_last = -1;
    for (std::int64_t code = 1; code < states; ++code) {
        std::int64_t rem = code, total = 0;
        for (int c = 0; c < cc; ++c) {
            total += rem % (counts[static_cast<std::size_t>(c)] + 1);
            rem /= counts[static_cast<std::size_t>(c)] + 1;
        }
        if (total < best_total) continue;
        for (int last = 0; last < cc; ++last) {
            Time c0 = dp[at(code, last)];
            if (c0 >= kInf) continue;
            if (total > best_total || c0 < best_c || (c0 == best_c && code < best_code)) {
                best_total = total;
                best_c = c0;
                best_code = code;
                best_last = last;
            }
        }
    }

    OptResult res;
    res.explored_states = explored;
    res.throughput = static_cast<int>(best_total);
    if (best_total > 0) {
        std::vector<int> class_order;
        std::int64_t code = best_code;
        int cur = best_last;
        while (cur >= 0) {
            class_order.push_back(cur);
            signed char p = parent[at(code, cur)];
            code -= stride[static_cast<std::size_t>(cur)];
            cur = p;
        }
        std::reverse(class_order.begin(), class_order.end());
        std::vector<std::size_t> next_id(static_cast<std::size_t>(cc), 0);
        std::vector<RequestId> order;
        for (int c : class_order) order.push_back(ids[static_cast<std::size_t>(c)][next_id[static_cast<std::size_t>(c)]++]);
        res.schedule = schedule_from_serves(inst, start, replay_starts(inst, start, order));
    }
    return res;
}

OptResult opt_exact(const Instance& inst, NodeId start, const OracleCaps& caps,
                    CancelToken* cancel) {
    if (static_cast<int>(inst.requests.size()) <= caps.opt_max_requests)
        return opt_exact_plain(inst, start, caps, cancel);
    return opt_exact_bundle(inst, start, caps, cancel);
}

OptResult opt_prime_exact(const Instance& inst, const std::set<RequestId>& forbidden, NodeId start,
                          const OracleCaps& caps, CancelToken* cancel) {
    std::vector<Request> kept;
    for (const Request& r : inst.requests)
        if (!forbidden.count(r.id)) kept.push_back(r);
    Instance restricted = Instance::make(inst.metric, std::move(kept), inst.scale);
    return opt_exact(restricted, start, caps, cancel);
}

namespace {

OptResult constructive_case_a(const AdversaryTranscript& tr) {
    std::vector<std::pair<RequestId, Time>> serves;
    for (RequestId id : tr.emitted_ids) serves.emplace_back(id, tr.instance.by_id(id).release);
    OptResult res;
    res.throughput = static_cast<int>(serves.size());
    res.schedule = schedule_from_serves(tr.instance, tr.v0, serves);
    return res;
}

OptResult constructive_star(const AdversaryTranscript& tr) {
    const Instance& inst = tr.instance;
    const MetricSpace& g = inst.metric;
    const Time L = tr.L;
    const Time t_f = tr.final_event_time;
    std::vector<std::pair<RequestId, Time>> serves;

    if (tr.termination_case == 2 || tr.termination_case == 3) {
        // One type-A per tick until the final event, then the final batch to 3L.
        for (RequestId id : tr.tick_a_ids) serves.emplace_back(id, inst.by_id(id).release);
        Time t = t_f;
        for (RequestId id : tr.final_request_ids) {
            if (t > 3 * L) break;
            serves.emplace_back(id, t++);
        }
        OptResult res;
        res.throughput = static_cast<int>(serves.size());
        res.schedule = schedule_from_serves(inst, tr.v0, serves);
        return res;
    }

    // Case 1: block stage, final-batch stage, type-A stage.
    NodeId pos = tr.v0;
    Time cur = 1;
    for (const BlockRecord& b : tr.blocks) {
        cur = std::max(cur, b.start);
        for (NodeId node : tr.service_node_order) {
            const auto& node_ids = b.b_ids[static_cast<std::size_t>(node)];
            if (node_ids.empty()) continue;
            if (node != pos) {
                cur += g.dist(pos, node);
                pos = node;
            }
            for (RequestId id : node_ids) serves.emplace_back(id, cur++);
        }
        if (pos != tr.v0) {
            cur += g.dist(pos, tr.v0);
            pos = tr.v0;
        }
    }

    if (pos != tr.final_node) {
        cur += g.dist(pos, tr.final_node);
        pos = tr.final_node;
    }
    Time s = std::max(cur, t_f);
    const Time stage2_last = std::min(L + t_f, 2 * L);
    for (RequestId id : tr.final_request_ids) {
        if (s > stage2_last) break;
        serves.emplace_back(id, s++);
    }
    cur = s;

    if (pos != tr.v0) cur += g.dist(pos, tr.v0);
    s = std::max(cur, 2 * L + 1);
    for (RequestId id : tr.tick_a_ids) {
        if (s > 3 * L) break;
        serves.emplace_back(id, s++);
    }

    OptResult res;
    res.throughput = static_cast<int>(serves.size());
    res.schedule = schedule_from_serves(inst, tr.v0, serves);
    return res;
}

}  // namespace

OptResult constructive_opt_prime(const AdversaryTranscript& transcript) {
    if (transcript.kind == AdversaryTranscript::Kind::case_a) return constructive_case_a(transcript);
    if (transcript.termination_case < 1 || transcript.termination_case > 3)
        throw TranscriptMismatch("star transcript has no termination case");
    return constructive_star(transcript);
}

}  // namespace ttw
