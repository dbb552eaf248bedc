#include "ttw/simulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ttw/errors.hpp"

namespace ttw {

namespace {

// Shared engine core: one action at most per tick, releases processed first.
class Engine {
public:
    Engine(const MetricSpace& g, NodeId start) : g_(g), pos_(start) {}

    bool free_at(Time t) const { return busy_until_ <= t; }
    bool in_transit_at(Time t) const { return transit_ && t < busy_until_; }
    NodeId position_at(Time t) const {
        return (transit_ && t < busy_until_) ? transit_from_ : pos_;
    }
    NodeId transit_dest() const { return pos_; }

    // Applies the policy action at tick t; returns index of the schedule action.
    int apply(Time t, const PolicyAction& a, const std::map<RequestId, Request>& revealed,
              std::vector<RequestId>& served_order, Schedule& sched) {
        switch (a.kind) {
            case PolicyAction::Kind::serve: {
                auto it = revealed.find(a.request);
                if (it == revealed.end())
                    throw PolicyProtocolError(t, "serve of unrevealed request " +
                                                     std::to_string(a.request));
                const Request& r = it->second;
                if (served_.count(a.request))
                    throw PolicyProtocolError(t, "request " + std::to_string(a.request) +
                                                     " already served");
                if (r.node != pos_)
                    throw PolicyProtocolError(t, "serve of request " + std::to_string(a.request) +
                                                     " away from its node");
                if (t < r.release || t > r.deadline)
                    throw PolicyProtocolError(t, "serve of request " + std::to_string(a.request) +
                                                     " outside its window");
                served_.insert(a.request);
                served_order.push_back(a.request);
                busy_until_ = t + 1;
                transit_ = false;
                sched.actions.push_back(ServeAction{a.request, t});
                return static_cast<int>(sched.actions.size()) - 1;
            }
            case PolicyAction::Kind::travel_to: {
                if (a.node < 0 || a.node >= g_.n())
                    throw PolicyProtocolError(t, "travel to unknown node " + std::to_string(a.node));
                if (a.node == pos_)
                    throw PolicyProtocolError(t, "travel to current node " + std::to_string(a.node));
                transit_from_ = pos_;
                transit_ = true;
                busy_until_ = t + g_.dist(pos_, a.node);
                sched.actions.push_back(TravelAction{pos_, a.node, t});
                pos_ = a.node;
                return static_cast<int>(sched.actions.size()) - 1;
            }
            case PolicyAction::Kind::idle: {
                busy_until_ = t + 1;
                transit_ = false;
                if (!sched.actions.empty()) {
                    if (auto* idle = std::get_if<IdleAction>(&sched.actions.back());
                        idle && idle->end == t) {
                        idle->end = t + 1;
                        return static_cast<int>(sched.actions.size()) - 1;
                    }
                }
                sched.actions.push_back(IdleAction{t, t + 1});
                return static_cast<int>(sched.actions.size()) - 1;
            }
        }
        throw PolicyProtocolError(t, "unknown action");
    }

private:
    const MetricSpace& g_;
    NodeId pos_;                // destination while in transit
    NodeId transit_from_ = 0;
    bool transit_ = false;
    Time busy_until_ = 1;
    std::set<RequestId> served_;
};

}  // namespace

RunResult run(const Instance& inst, Policy& policy, Time horizon, NodeId start) {
    if (horizon < inst.max_deadline())
        throw PreconditionViolated("horizon " + std::to_string(horizon) +
                                   " below max deadline " + std::to_string(inst.max_deadline()));
    if (start < 0 || start >= inst.metric.n()) throw PreconditionViolated("start node out of range");
    if (!inst.requests.empty() && inst.requests.front().release < 1)
        throw PreconditionViolated("requests must be released at time 1 or later");

    RunResult out;
    Engine eng(inst.metric, start);
    std::map<RequestId, Request> revealed;
    std::vector<RequestId> served_order;
    std::size_t next_release = 0;

    for (Time t = 1; t <= horizon; ++t) {
        TickRecord rec;
        rec.t = t;
        while (next_release < inst.requests.size() &&
               inst.requests[next_release].release == t) {
            const Request& r = inst.requests[next_release];
            revealed[r.id] = r;
            rec.released.push_back(r.id);
            ++next_release;
        }
        if (next_release < inst.requests.size() && inst.requests[next_release].release < t)
            throw PreconditionViolated("requests not sorted by release");
        {
            std::vector<Request> batch;
            for (RequestId id : rec.released) batch.push_back(revealed[id]);
            policy.observe(t, batch);
        }
        rec.position = eng.position_at(t);
        rec.in_transit = eng.in_transit_at(t);
        if (eng.free_at(t)) {
            PolicyAction a = policy.next_action(t, EngineView{t, eng.position_at(t)});
            rec.action_index = eng.apply(t, a, revealed, served_order, out.schedule);
        }
        out.trace.ticks.push_back(std::move(rec));
    }
    return out;
}

AdaptiveResult run_adaptive(AdversarySource& adversary, Policy& policy) {
    const MetricSpace& g = adversary.metric();
    const NodeId start = adversary.start_node();

    Engine eng(g, start);
    std::map<RequestId, Request> revealed;
    std::vector<Request> all_requests;
    std::vector<RequestId> served_order;
    std::vector<std::pair<Time, RequestId>> serve_events;

    Schedule sched;
    Trace trace;
    Time max_deadline = 0;

    for (Time t = 1;; ++t) {
        if (adversary.done() && t > max_deadline) break;

        TickRecord rec;
        rec.t = t;
        AdversaryView view;
        view.now = t;
        view.position = eng.position_at(t);
        view.in_transit = eng.in_transit_at(t);
        view.transit_dest = eng.transit_dest();
        view.serve_events = &serve_events;
        for (Request& r : adversary.releases_at(t, view)) {
            if (r.release != t)
                throw Error("adversary released a request with mismatched release time");
            revealed[r.id] = r;
            all_requests.push_back(r);
            rec.released.push_back(r.id);
            max_deadline = std::max(max_deadline, r.deadline);
        }
        rec.block = adversary.current_block();
        {
            std::vector<Request> batch;
            for (RequestId id : rec.released) batch.push_back(revealed[id]);
            policy.observe(t, batch);
        }
        rec.position = eng.position_at(t);
        rec.in_transit = eng.in_transit_at(t);
        if (eng.free_at(t)) {
            PolicyAction a = policy.next_action(t, EngineView{t, eng.position_at(t)});
            int idx = eng.apply(t, a, revealed, served_order, sched);
            rec.action_index = idx;
            if (std::holds_alternative<ServeAction>(sched.actions[static_cast<std::size_t>(idx)]))
                serve_events.emplace_back(t, a.request);
        }
        trace.ticks.push_back(std::move(rec));
        if (t > (Time{1} << 40)) throw Error("adaptive run did not terminate");
    }

    AdaptiveResult out{Instance::make(g, std::move(all_requests)), std::move(sched),
                       std::move(trace), adversary.take_transcript()};
    out.transcript.instance = out.instance;
    return out;
}

namespace {

class ReplayPolicy final : public Policy {
public:
    ReplayPolicy(const Instance& inst, const Schedule& schedule) {
        for (const Action& a : schedule.actions) {
            if (const auto* s = std::get_if<ServeAction>(&a))
                timeline_[s->start] = PolicyAction::serve(s->request);
            else if (const auto* tr = std::get_if<TravelAction>(&a))
                timeline_[tr->depart] = PolicyAction::travel_to(tr->to);
        }
        (void)inst;
    }
    std::string name() const override { return "replay"; }
    void observe(Time, std::span<const Request>) override {}
    PolicyAction next_action(Time t, const EngineView&) override {
        auto it = timeline_.find(t);
        if (it == timeline_.end()) return PolicyAction::idle();
        return it->second;
    }

private:
    std::map<Time, PolicyAction> timeline_;
};

}  // namespace

std::unique_ptr<Policy> make_replay_policy(const Instance& inst, const Schedule& schedule) {
    return std::make_unique<ReplayPolicy>(inst, schedule);
}

}  // namespace ttw
