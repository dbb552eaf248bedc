#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ttw/instance.hpp"
#include "ttw/transcript.hpp"

namespace ttw {

/// What a policy may see when asked for an action: the clock and its own
/// position. Requests reach the policy only through observe(), exactly at
/// their release times.
struct EngineView {
    Time now = 0;
    NodeId position = 0;  // current node (policies are only asked while free)
};

struct PolicyAction {
    enum class Kind { serve, travel_to, idle } kind = Kind::idle;
    RequestId request = 0;
    NodeId node = 0;

    static PolicyAction serve(RequestId id) { return {Kind::serve, id, 0}; }
    static PolicyAction travel_to(NodeId v) { return {Kind::travel_to, 0, v}; }
    static PolicyAction idle() { return {}; }
};

struct PolicyMeta {
    Time phase_length = 0;   // K, when the policy is phase-based
    bool guarantee = true;   // stated precondition for the competitive bound holds
    Weight tour_weight = 0;  // tour length used by tsp-edf
    bool exact_subsolver = true;
    std::string notes;
};

class Policy {
public:
    virtual ~Policy() = default;
    virtual std::string name() const = 0;
    /// Called once per tick, before any action request at that tick.
    virtual void observe(Time t, std::span<const Request> released) = 0;
    /// Called when the vehicle is free at tick t; one action per tick.
    virtual PolicyAction next_action(Time t, const EngineView& view) = 0;
    virtual PolicyMeta meta() const { return {}; }
};

/// Per-tick log; replaying the same releases through the same policy
/// reproduces it exactly.
struct TickRecord {
    Time t = 0;
    NodeId position = 0;
    bool in_transit = false;
    int action_index = -1;  // into Schedule::actions; -1 while busy
    std::vector<RequestId> released;
    int block = 0;  // adversary block index, 0 outside adaptive runs
};

struct Trace {
    std::vector<TickRecord> ticks;
};

struct RunResult {
    Schedule schedule;
    Trace trace;
};

/// Drives `policy` over the instance for ticks 1..horizon. Requires horizon >=
/// max deadline so nothing servable is cut off. Travel is non-preemptive.
RunResult run(const Instance& inst, Policy& policy, Time horizon, NodeId start = 0);

/// Serve history plus the policy's reference location (travel destination
/// while in transit), which is what the adaptive constructions may condition on.
struct AdversaryView {
    Time now = 0;
    NodeId position = 0;
    bool in_transit = false;
    NodeId transit_dest = 0;
    const std::vector<std::pair<Time, RequestId>>* serve_events = nullptr;

    NodeId reference_location() const { return in_transit ? transit_dest : position; }
};

class AdversarySource {
public:
    virtual ~AdversarySource() = default;
    /// Requests released at tick t, decided from the history so far.
    virtual std::vector<Request> releases_at(Time t, const AdversaryView& view) = 0;
    virtual bool done() const = 0;
    virtual NodeId start_node() const = 0;
    virtual const MetricSpace& metric() const = 0;
    /// Valid once done(); instance is attached by the engine afterwards.
    virtual AdversaryTranscript take_transcript() = 0;
    /// Annotation for the trace, 0 when not inside a block.
    virtual int current_block() const { return 0; }
};

struct AdaptiveResult {
    Instance instance;
    Schedule schedule;
    Trace trace;
    AdversaryTranscript transcript;
};

/// Adaptive run: the adversary emits requests tick by tick as a function of
/// the policy's visible behavior. Replaying the generated instance through
/// run() with a fresh policy instance reproduces the schedule bit for bit.
AdaptiveResult run_adaptive(AdversarySource& adversary, Policy& policy);

/// Follows a fixed schedule action by action; idles outside it. Used to replay
/// an offline schedule through the engine.
std::unique_ptr<Policy> make_replay_policy(const Instance& inst, const Schedule& schedule);

}  // namespace ttw
