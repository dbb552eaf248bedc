#include "ttw/policies.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "ttw/errors.hpp"
#include "ttw/orienteering.hpp"

namespace ttw {

namespace {

Time ceil_sqrt(std::int64_t x) {
    if (x <= 0) return 0;
    auto r = static_cast<Time>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    return r;
}

struct Pending {
    Request req;
    bool served = false;
};

// Greedy chase policies share the selection skeleton; only the key differs.
class ChasePolicy : public Policy {
public:
    explicit ChasePolicy(const MetricSpace& g) : g_(g) {}

    void observe(Time, std::span<const Request> released) override {
        for (const Request& r : released) pending_.push_back({r, false});
    }

    PolicyAction next_action(Time t, const EngineView& view) override {
        std::size_t best = pending_.size();
        for (std::size_t i = 0; i < pending_.size(); ++i) {
            const Pending& p = pending_[i];
            if (p.served) continue;
            Time travel = p.req.node == view.position ? 0 : g_.dist(view.position, p.req.node);
            if (t + travel > p.req.deadline) continue;  // not reachable in time
            if (best == pending_.size() || prefer(p.req, pending_[best].req, view)) best = i;
        }
        if (best == pending_.size()) return PolicyAction::idle();
        if (pending_[best].req.node == view.position) {
            pending_[best].served = true;
            return PolicyAction::serve(pending_[best].req.id);
        }
        return PolicyAction::travel_to(pending_[best].req.node);
    }

protected:
    virtual bool prefer(const Request& a, const Request& b, const EngineView& view) const = 0;
    MetricSpace g_;  // owned: policies outlive any temporary the caller built

private:
    std::vector<Pending> pending_;
};

class EdfGreedy final : public ChasePolicy {
public:
    using ChasePolicy::ChasePolicy;
    std::string name() const override { return "edf"; }

private:
    bool prefer(const Request& a, const Request& b, const EngineView&) const override {
        return std::tie(a.deadline, a.id) < std::tie(b.deadline, b.id);
    }
};

class NearestFirst final : public ChasePolicy {
public:
    using ChasePolicy::ChasePolicy;
    std::string name() const override { return "nearest"; }

private:
    bool prefer(const Request& a, const Request& b, const EngineView& view) const override {
        Weight da = a.node == view.position ? 0 : g_.dist(view.position, a.node);
        Weight db = b.node == view.position ? 0 : g_.dist(view.position, b.node);
        return std::tie(da, a.id) < std::tie(db, b.id);
    }
};

class IdlePolicy final : public Policy {
public:
    std::string name() const override { return "idle"; }
    void observe(Time, std::span<const Request>) override {}
    PolicyAction next_action(Time, const EngineView&) override { return PolicyAction::idle(); }
};

// Common frame for the two phase-based algorithms: deadline decrease, the
// eligibility rule for R^ell, guarded execution of the per-phase plan, and the
// single-node EDF degradation.
class PhaseFramePolicy : public PhasedPolicy {
public:
    PhaseFramePolicy(const MetricSpace& g, Time k) : g_(g), k_(k) {
        if (k_ == 0) edf_fallback_ = std::make_unique<EdfGreedy>(g);
    }

    void observe(Time t, std::span<const Request> released) override {
        if (edf_fallback_) {
            edf_fallback_->observe(t, released);
            return;
        }
        for (const Request& r : released) pending_.push_back({r, false});
    }

    PolicyAction next_action(Time t, const EngineView& view) override {
        if (edf_fallback_) return edf_fallback_->next_action(t, view);

        const int ell = static_cast<int>(t / k_) + 1;  // phase covers [K(ell-1), K*ell)
        if (ell != current_phase_) replan(ell, view);

        const Time phase_end = k_ * ell;  // serves must start before this
        while (!plan_.empty()) {
            RequestId id = plan_.front();
            Pending& p = pending_[index_of_.at(id)];
            if (p.req.node == view.position) {
                plan_.pop_front();
                p.served = true;
                return PolicyAction::serve(id);
            }
            Time travel = g_.dist(view.position, p.req.node);
            if (t + travel <= phase_end - 1) return PolicyAction::travel_to(p.req.node);
            plan_.clear();  // suffix dropped; remainder of the phase idles
        }
        return PolicyAction::idle();
    }

    const std::vector<PhaseState>& phase_log() const override { return log_; }

protected:
    /// Service order for phase ell over the eligible requests (indices into
    /// pending_); receives them EDF-sorted by (decreased deadline, id).
    virtual std::vector<RequestId> plan_phase(const std::vector<const Request*>& eligible,
                                              const EngineView& view) = 0;

    Time decreased_deadline(Time d) const { return k_ * (d / k_); }

    MetricSpace g_;  // owned copy
    Time k_;

private:
    void replan(int ell, const EngineView& view) {
        current_phase_ = ell;
        plan_.clear();
        index_of_.clear();
        const Time phase_begin = k_ * (ell - 1);
        std::vector<const Request*> eligible;
        for (std::size_t i = 0; i < pending_.size(); ++i) {
            const Pending& p = pending_[i];
            index_of_[p.req.id] = i;
            if (p.served) continue;
            if (p.req.release > phase_begin) continue;  // arrived during this phase: wait
            if (decreased_deadline(p.req.deadline) < k_ * ell) continue;
            eligible.push_back(&p.req);
        }
        std::sort(eligible.begin(), eligible.end(), [this](const Request* a, const Request* b) {
            Time da = decreased_deadline(a->deadline);
            Time db = decreased_deadline(b->deadline);
            return std::tie(da, a->id) < std::tie(db, b->id);
        });

        for (RequestId id : plan_phase(eligible, view)) plan_.push_back(id);

        PhaseState ps;
        ps.index = ell;
        ps.begin = phase_begin;
        ps.length = k_;
        ps.eligible = static_cast<int>(eligible.size());
        ps.planned.assign(plan_.begin(), plan_.end());
        log_.push_back(std::move(ps));
    }

    std::unique_ptr<EdfGreedy> edf_fallback_;
    std::vector<Pending> pending_;
    std::map<RequestId, std::size_t> index_of_;
    std::deque<RequestId> plan_;
    int current_phase_ = 0;
    std::vector<PhaseState> log_;
};

class TspEdfPolicy final : public PhaseFramePolicy {
    struct TourChoice {
        Tour tour;
        bool exact = true;
        Time k = 0;
    };

    static TourChoice choose_tour(const MetricSpace& g, Time l, const OracleCaps& caps,
                                  bool force_approx) {
        TourChoice tc;
        if (g.n() == 1) return tc;  // k = 0 engages the EDF fallback
        if (!force_approx && g.n() <= caps.tsp_max_nodes) {
            tc.tour = tsp_exact(g, caps);
            tc.exact = true;
        } else {
            tc.tour = tsp_approx(g);
            tc.exact = false;
        }
        tc.k = ceil_sqrt(tc.tour.weight * l);
        return tc;
    }

    TspEdfPolicy(const MetricSpace& g, Time l, TourChoice tc)
        : PhaseFramePolicy(g, tc.k), l_(l), tour_(std::move(tc.tour)), exact_tour_(tc.exact) {
        tour_index_.assign(static_cast<std::size_t>(g.n()), 0);
        for (std::size_t i = 0; i < tour_.order.size(); ++i)
            tour_index_[static_cast<std::size_t>(tour_.order[i])] = static_cast<int>(i);
    }

public:
    TspEdfPolicy(const MetricSpace& g, Time l, const OracleCaps& caps, bool force_approx)
        : TspEdfPolicy(g, l, choose_tour(g, l, caps, force_approx)) {}

    std::string name() const override { return "tsp-edf"; }

    PolicyMeta meta() const override {
        PolicyMeta m;
        m.phase_length = k_;
        m.tour_weight = tour_.weight;
        m.exact_subsolver = exact_tour_;
        m.guarantee = g_.n() == 1 || l_ > 10 * tour_.weight;
        if (!m.guarantee) m.notes = "L <= 10*TSP: competitive bound not guaranteed";
        return m;
    }

private:
    std::vector<RequestId> plan_phase(const std::vector<const Request*>& eligible,
                                      const EngineView& view) override {
        // K-length EDF prefix, grouped by node, nodes in tour order rotated to
        // the current position.
        std::size_t take = std::min<std::size_t>(eligible.size(), static_cast<std::size_t>(k_));
        std::vector<std::vector<RequestId>> by_node(static_cast<std::size_t>(g_.n()));
        for (std::size_t i = 0; i < take; ++i)
            by_node[static_cast<std::size_t>(eligible[i]->node)].push_back(eligible[i]->id);

        std::vector<RequestId> plan;
        const int n = static_cast<int>(tour_.order.size());
        const int offset = tour_index_[static_cast<std::size_t>(view.position)];
        for (int s = 0; s < n; ++s) {
            NodeId node = tour_.order[static_cast<std::size_t>((offset + s) % n)];
            for (RequestId id : by_node[static_cast<std::size_t>(node)]) plan.push_back(id);
        }
        return plan;
    }

    Time l_;
    Tour tour_;
    bool exact_tour_ = true;
    std::vector<int> tour_index_;
};

class OrientWindowPolicy final : public PhaseFramePolicy {
public:
    OrientWindowPolicy(const MetricSpace& g, Time l, const OracleCaps& caps)
        : PhaseFramePolicy(g, 3 * diameter(g)), l_(l), caps_(caps) {
        budget_ = diameter(g);
        exact_solver_ = g.n() <= caps.tsp_max_nodes;
    }

    std::string name() const override { return "orient-window"; }

    PolicyMeta meta() const override {
        PolicyMeta m;
        m.phase_length = k_;
        m.exact_subsolver = exact_solver_;
        m.guarantee = g_.n() == 1 || l_ > 9 * budget_;
        if (!exact_solver_) m.guarantee = false;
        if (!m.guarantee) m.notes = "orienteering guarantee unavailable";
        return m;
    }

private:
    std::vector<RequestId> plan_phase(const std::vector<const Request*>& eligible,
                                      const EngineView&) override {
        if (eligible.empty()) return {};
        std::vector<Weight> prizes(static_cast<std::size_t>(g_.n()), 0);
        std::vector<std::vector<RequestId>> by_node(static_cast<std::size_t>(g_.n()));
        for (const Request* r : eligible) {
            prizes[static_cast<std::size_t>(r->node)] += 1;
            by_node[static_cast<std::size_t>(r->node)].push_back(r->id);
        }
        OrienteeringSolution sol = exact_solver_ ? orienteering_exact(g_, prizes, budget_, caps_)
                                                 : orienteering_greedy(g_, prizes, budget_);
        std::vector<RequestId> plan;
        for (NodeId node : sol.path)
            for (RequestId id : by_node[static_cast<std::size_t>(node)]) plan.push_back(id);
        return plan;
    }

    Time l_;
    OracleCaps caps_;
    Weight budget_ = 0;
    bool exact_solver_ = true;
};

}  // namespace

std::unique_ptr<PhasedPolicy> make_tsp_edf(const MetricSpace& g, Time l, const OracleCaps& caps,
                                           bool force_approx_tour) {
    if (l < 1) throw PreconditionViolated("laxity must be at least 1");
    return std::make_unique<TspEdfPolicy>(g, l, caps, force_approx_tour);
}

std::unique_ptr<PhasedPolicy> make_orient_window(const MetricSpace& g, Time l,
                                                 const OracleCaps& caps) {
    if (l < 1) throw PreconditionViolated("laxity must be at least 1");
    return std::make_unique<OrientWindowPolicy>(g, l, caps);
}

std::unique_ptr<Policy> make_edf_greedy(const MetricSpace& g) {
    return std::make_unique<EdfGreedy>(g);
}

std::unique_ptr<Policy> make_nearest_first(const MetricSpace& g) {
    return std::make_unique<NearestFirst>(g);
}

std::unique_ptr<Policy> make_idle_policy() { return std::make_unique<IdlePolicy>(); }

std::unique_ptr<Policy> make_policy(const std::string& name, const MetricSpace& g, Time l,
                                    const OracleCaps& caps, bool force_approx_tour) {
    if (name == "tsp-edf") return make_tsp_edf(g, l, caps, force_approx_tour);
    if (name == "orient-window") return make_orient_window(g, l, caps);
    if (name == "edf") return make_edf_greedy(g);
    if (name == "nearest") return make_nearest_first(g);
    if (name == "idle") return make_idle_policy();
    throw PreconditionViolated("unknown policy '" + name + "'");
}

}  // namespace ttw
