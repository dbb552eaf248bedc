#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ttw/metric.hpp"
#include "ttw/rational.hpp"

namespace ttw {

using Time = std::int64_t;
using RequestId = int;

/// Unit-service demand at `node`, servable at integer starts t in [release, deadline].
struct Request {
    RequestId id = 0;
    Time release = 1;
    Time deadline = 2;
    NodeId node = 0;

    Time laxity() const { return deadline - release; }
    bool window_empty() const { return deadline < release; }

    friend bool operator==(const Request&, const Request&) = default;
};

/// A metric plus a request sequence. `scale` records the uniform integer
/// factor already applied to distances and windows (metadata only).
struct Instance {
    MetricSpace metric;
    std::vector<Request> requests;  // sorted by (release, id)
    std::int64_t scale = 1;

    /// Sorts requests, checks node ranges and id uniqueness.
    static Instance make(MetricSpace metric, std::vector<Request> requests, std::int64_t scale = 1);
    /// As make(), additionally enforcing release >= 1 and laxity >= 1 on every
    /// request (the contract for input files; perturbed instances may violate it).
    static Instance make_strict(MetricSpace metric, std::vector<Request> requests,
                                std::int64_t scale = 1);

    Time max_deadline() const;
    const Request& by_id(RequestId id) const;
};

Time laxity(const Instance& inst);  // throws EmptyInstance

enum class CaseLabel { A, B, C, Gap };
std::string to_string(CaseLabel c);

struct CaseReport {
    CaseLabel label = CaseLabel::Gap;
    Time laxity = 0;
    Weight diameter = 0;
    Weight tsp = 0;
    bool tsp_exact_used = true;
    Time margin_over_2diam = 0;  // L - 2*diameter
    Rational delta;              // tsp / L
};

CaseReport classify_case(const Instance& inst, const OracleCaps& caps = {});

struct DeltaRatio {
    Rational value;
    bool exact = true;  // false when tsp_approx substituted beyond the cap
};

DeltaRatio delta_ratio(const Instance& inst, const OracleCaps& caps = {});

// ---------------------------------------------------------------------------
// Schedules

struct ServeAction {
    RequestId request = 0;
    Time start = 0;  // occupies [start, start+1)
    friend bool operator==(const ServeAction&, const ServeAction&) = default;
};
struct TravelAction {
    NodeId from = 0;
    NodeId to = 0;
    Time depart = 0;  // occupies [depart, depart + dist(from,to))
    friend bool operator==(const TravelAction&, const TravelAction&) = default;
};
struct IdleAction {
    Time begin = 0;
    Time end = 0;  // [begin, end)
    friend bool operator==(const IdleAction&, const IdleAction&) = default;
};

using Action = std::variant<ServeAction, TravelAction, IdleAction>;

struct Schedule {
    std::vector<Action> actions;

    int throughput() const;
    std::vector<ServeAction> serves() const;  // in start-time order
    friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class Rule {
    serve_window,       // (a) serve start within [r, d]
    travel_separation,  // (b) consecutive serves at distinct nodes >= dist apart
    overlap,            // (c) actions must not overlap in time
    duplicate_serve,    // (d) a request is served at most once
    early_start,        // (e) nothing starts before time 1
    unknown_request,
};
std::string to_string(Rule r);

struct Violation {
    Rule rule;
    int action_index;  // offending action in Schedule::actions
    std::string detail;
};

/// Empty result means the schedule is feasible for the instance.
std::vector<Violation> validate_schedule(const Instance& inst, const Schedule& sched);
bool schedule_ok(const Instance& inst, const Schedule& sched);

/// Builds a full schedule (travel actions inserted, waits left implicit) from
/// serve starts ordered by time. Used by the offline oracles and constructions.
Schedule schedule_from_serves(const Instance& inst, NodeId start,
                              const std::vector<std::pair<RequestId, Time>>& serves);

}  // namespace ttw
