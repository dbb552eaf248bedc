#include "ttw/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ttw/errors.hpp"

namespace ttw {

namespace {

Instance make_impl(MetricSpace metric, std::vector<Request> requests, std::int64_t scale,
                   bool strict) {
    std::set<RequestId> ids;
    for (const Request& r : requests) {
        if (r.node < 0 || r.node >= metric.n())
            throw PreconditionViolated("request " + std::to_string(r.id) + " node out of range");
        if (!ids.insert(r.id).second)
            throw PreconditionViolated("duplicate request id " + std::to_string(r.id));
        if (strict) {
            if (r.release < 1)
                throw PreconditionViolated("request " + std::to_string(r.id) + " released before time 1");
            if (r.laxity() < 1)
                throw PreconditionViolated("request " + std::to_string(r.id) + " has laxity < 1");
        }
    }
    std::sort(requests.begin(), requests.end(), [](const Request& a, const Request& b) {
        return std::tie(a.release, a.id) < std::tie(b.release, b.id);
    });
    return Instance{std::move(metric), std::move(requests), scale};
}

}  // namespace

Instance Instance::make(MetricSpace metric, std::vector<Request> requests, std::int64_t scale) {
    return make_impl(std::move(metric), std::move(requests), scale, false);
}

Instance Instance::make_strict(MetricSpace metric, std::vector<Request> requests,
                               std::int64_t scale) {
    return make_impl(std::move(metric), std::move(requests), scale, true);
}

Time Instance::max_deadline() const {
    Time m = 0;
    for (const Request& r : requests) m = std::max(m, r.deadline);
    return m;
}

const Request& Instance::by_id(RequestId id) const {
    for (const Request& r : requests)
        if (r.id == id) return r;
    throw RequestMismatch("no request with id " + std::to_string(id));
}

Time laxity(const Instance& inst) {
    if (inst.requests.empty()) throw EmptyInstance();
    Time m = inst.requests.front().laxity();
    for (const Request& r : inst.requests) m = std::min(m, r.laxity());
    return m;
}

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::A: return "A";
        case CaseLabel::B: return "B";
        case CaseLabel::C: return "C";
        case CaseLabel::Gap: return "Gap";
    }
    return "?";
}

CaseReport classify_case(const Instance& inst, const OracleCaps& caps) {
    CaseReport rep;
    rep.laxity = laxity(inst);
    rep.diameter = diameter(inst.metric);
    if (inst.metric.n() == 1) {
        rep.tsp = 0;
        rep.tsp_exact_used = true;
    } else if (inst.metric.n() <= caps.tsp_max_nodes) {
        rep.tsp = tsp_exact(inst.metric, caps).weight;
        rep.tsp_exact_used = true;
    } else {
        rep.tsp = tsp_approx(inst.metric).weight;
        rep.tsp_exact_used = false;
    }
    rep.delta = Rational(rep.tsp, rep.laxity);
    rep.margin_over_2diam = rep.laxity - 2 * rep.diameter;
    if (2 * rep.laxity < rep.diameter)
        rep.label = CaseLabel::A;
    else if (rep.laxity > rep.tsp)
        rep.label = CaseLabel::C;
    else if (rep.laxity > 2 * rep.diameter)
        rep.label = CaseLabel::B;
    else
        rep.label = CaseLabel::Gap;
    return rep;
}

DeltaRatio delta_ratio(const Instance& inst, const OracleCaps& caps) {
    Time l = laxity(inst);
    if (inst.metric.n() == 1) return {Rational::of(0), true};
    if (inst.metric.n() <= caps.tsp_max_nodes)
        return {Rational(tsp_exact(inst.metric, caps).weight, l), true};
    return {Rational(tsp_approx(inst.metric).weight, l), false};
}

int Schedule::throughput() const {
    int c = 0;
    for (const Action& a : actions)
        if (std::holds_alternative<ServeAction>(a)) ++c;
    return c;
}

std::vector<ServeAction> Schedule::serves() const {
    std::vector<ServeAction> out;
    for (const Action& a : actions)
        if (const auto* s = std::get_if<ServeAction>(&a)) out.push_back(*s);
    std::sort(out.begin(), out.end(),
              [](const ServeAction& a, const ServeAction& b) { return a.start < b.start; });
    return out;
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::serve_window: return "serve_window";
        case Rule::travel_separation: return "travel_separation";
        case Rule::overlap: return "overlap";
        case Rule::duplicate_serve: return "duplicate_serve";
        case Rule::early_start: return "early_start";
        case Rule::unknown_request: return "unknown_request";
    }
    return "?";
}

std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& sched) {
    std::vector<Violation> out;
    std::map<RequestId, const Request*> reqs;
    for (const Request& r : inst.requests) reqs[r.id] = &r;

    struct Interval {
        Time begin, end;
        int index;
    };
    std::vector<Interval> intervals;
    struct ServeAt {
        Time start;
        NodeId node;
        int index;
    };
    std::vector<ServeAt> serves;
    std::set<RequestId> seen;

    for (int i = 0; i < static_cast<int>(sched.actions.size()); ++i) {
        const Action& a = sched.actions[i];
        if (const auto* s = std::get_if<ServeAction>(&a)) {
            auto it = reqs.find(s->request);
            if (it == reqs.end()) {
                out.push_back({Rule::unknown_request, i,
                               "serve of unknown request " + std::to_string(s->request)});
                continue;
            }
            const Request& r = *it->second;
            if (!seen.insert(s->request).second)
                out.push_back({Rule::duplicate_serve, i,
                               "request " + std::to_string(s->request) + " served twice"});
            if (s->start < r.release || s->start > r.deadline)
                out.push_back({Rule::serve_window, i,
                               "serve of " + std::to_string(s->request) + " at t=" +
                                   std::to_string(s->start) + " outside [" +
                                   std::to_string(r.release) + "," + std::to_string(r.deadline) + "]"});
            intervals.push_back({s->start, s->start + 1, i});
            serves.push_back({s->start, r.node, i});
        } else if (const auto* t = std::get_if<TravelAction>(&a)) {
            Time dur = inst.metric.dist(t->from, t->to);
            intervals.push_back({t->depart, t->depart + dur, i});
        } else {
            const auto& idle = std::get<IdleAction>(a);
            intervals.push_back({idle.begin, idle.end, i});
        }
    }

    for (const Interval& iv : intervals)
        if (iv.begin < 1)
            out.push_back({Rule::early_start, iv.index,
                           "action starts at t=" + std::to_string(iv.begin) + " before time 1"});

    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
        return std::tie(a.begin, a.end) < std::tie(b.begin, b.end);
    });
    for (std::size_t i = 0; i + 1 < intervals.size(); ++i)
        if (intervals[i].end > intervals[i + 1].begin)
            out.push_back({Rule::overlap, intervals[i + 1].index,
                           "action overlaps previous one ending at t=" +
                               std::to_string(intervals[i].end)});

    std::sort(serves.begin(), serves.end(),
              [](const ServeAt& a, const ServeAt& b) { return a.start < b.start; });
    for (std::size_t i = 0; i + 1 < serves.size(); ++i) {
        const ServeAt& a = serves[i];
        const ServeAt& b = serves[i + 1];
        if (a.node == b.node) continue;
        Time needed = a.start + 1 + inst.metric.dist(a.node, b.node);
        if (b.start < needed)
            out.push_back({Rule::travel_separation, b.index,
                           "serve at t=" + std::to_string(b.start) + " needs travel until t=" +
                               std::to_string(needed)});
    }
    return out;
}

bool schedule_ok(const Instance& inst, const Schedule& sched) {
    return validate_schedule(inst, sched).empty();
}

Schedule schedule_from_serves(const Instance& inst, NodeId start,
                              const std::vector<std::pair<RequestId, Time>>& serves) {
    Schedule s;
    NodeId pos = start;
    Time free_at = 1;
    for (std::size_t i = 1; i < serves.size(); ++i)
        if (serves[i].second < serves[i - 1].second)
            throw PreconditionViolated("schedule_from_serves needs time-ordered serves");
    for (const auto& [id, t] : serves) {
        const Request& r = inst.by_id(id);
        if (r.node != pos) {
            s.actions.push_back(TravelAction{pos, r.node, free_at});
            free_at += inst.metric.dist(pos, r.node);
            pos = r.node;
        }
        s.actions.push_back(ServeAction{id, t});
        free_at = t + 1;
    }
    return s;
}

}  // namespace ttw
