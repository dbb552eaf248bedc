#include "ttw/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ttw/errors.hpp"

namespace ttw {

namespace {

Time ceil_sqrt(std::int64_t x) {
    if (x <= 0) return 0;
    auto r = static_cast<Time>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    return r;
}

/// Largest-remainder split of `total` proportional to weights (zero weights get
/// zero). Remainder ties go to the smaller index.
std::vector<std::int64_t> largest_remainder_split(const std::vector<Weight>& weights,
                                                  std::int64_t total) {
    Weight sum = 0;
    for (Weight w : weights) sum += w;
    if (sum <= 0) throw PreconditionViolated("split over zero total weight");
    std::vector<std::int64_t> out(weights.size(), 0);
    std::vector<std::pair<Weight, std::size_t>> rema;  // (-remainder, index)
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::int64_t share = total * weights[i] / sum;
        out[i] = share;
        assigned += share;
        rema.emplace_back(-(total * weights[i] % sum), i);
    }
    std::sort(rema.begin(), rema.end());
    for (std::size_t j = 0; assigned < total; ++j, ++assigned) out[rema[j % rema.size()].second] += 1;
    return out;
}

class CaseAAdversary final : public AdversarySource {
public:
    CaseAAdversary(const MetricSpace& g, Time l, int emissions, NodeId start)
        : g_(g), l_(l), emissions_(emissions), start_(start) {
        diam_ = diameter(g);
        if (2 * l_ >= diam_)
            throw PreconditionViolated("case A needs L < diameter/2");
        if (emissions_ < 1) throw PreconditionViolated("case A needs at least one emission");
        pair_ = diameter_pair(g);
        tr_.kind = AdversaryTranscript::Kind::case_a;
        tr_.v0 = start;
        tr_.L = l_;
        tr_.diameter = diam_;
    }

    std::vector<Request> releases_at(Time t, const AdversaryView& view) override {
        if (emitted_ >= emissions_) return {};
        Time due = 1 + static_cast<Time>(emitted_ + 1) * (diam_ + 1);
        if (t != due) return {};
        NodeId ref = view.reference_location();
        NodeId target = g_.dist(ref, pair_.first) >= g_.dist(ref, pair_.second) ? pair_.first
                                                                                : pair_.second;
        Request r{next_id_++, t, t + l_, target};
        tr_.emitted_ids.push_back(r.id);
        ++emitted_;
        return {r};
    }

    bool done() const override { return emitted_ >= emissions_; }
    NodeId start_node() const override { return start_; }
    const MetricSpace& metric() const override { return g_; }
    AdversaryTranscript take_transcript() override { return tr_; }

private:
    MetricSpace g_;
    Time l_;
    int emissions_;
    NodeId start_;
    Weight diam_ = 0;
    Edge pair_{0, 0};
    int emitted_ = 0;
    RequestId next_id_ = 0;
    AdversaryTranscript tr_;
};

class StarBlockAdversary final : public AdversarySource {
public:
    StarBlockAdversary(StarMetric star, MetricSpace ground, bool from_embedding, Time l, NodeId v0,
                       std::vector<NodeId> service_order)
        : star_(std::move(star)), g_(std::move(ground)), l_(l), v0_(v0) {
        const Weight ws = star_.total();
        if (ws < 1) throw PreconditionViolated("star weight must be positive");
        if (star_.n() < 2) throw PreconditionViolated("star adversary needs a spoke node");
        if (9 * ws > l_)
            throw PreconditionViolated("star adversary needs 9*w(S) <= L; rescale the laxity");

        f_ = ceil_sqrt(ws * l_);
        if (3 * f_ > l_)
            throw PreconditionViolated(
                "block length 3F exceeds L, which would push the final event past L+1; "
                "choose L with 3*ceil(sqrt(w(S)*L)) <= L, e.g. L = k^2 * w(S)");
        n_blocks_ = l_ / (3 * f_);

        std::vector<Weight> spoke_weights(static_cast<std::size_t>(star_.n()), 0);
        for (NodeId v = 0; v < star_.n(); ++v)
            if (v != v0_) spoke_weights[static_cast<std::size_t>(v)] = star_.leaf_weights[static_cast<std::size_t>(v)];
        b_split_ = largest_remainder_split(spoke_weights, f_);

        for (NodeId v : service_order)
            if (v != v0_) spokes_in_order_.push_back(v);
        for (NodeId v = 0; v < star_.n(); ++v)
            if (v != v0_) {
                final_node_ = v;  // smallest non-hub id hosts the Case-1 batch
                break;
            }

        tr_.kind = AdversaryTranscript::Kind::star_block;
        tr_.star = star_;
        tr_.from_embedding = from_embedding;
        tr_.v0 = v0_;
        tr_.final_node = final_node_;
        tr_.L = l_;
        tr_.F = f_;
        tr_.N = n_blocks_;
        tr_.service_node_order = spokes_in_order_;
    }

    std::vector<Request> releases_at(Time t, const AdversaryView& view) override {
        if (phase_ == Phase::finished) return {};
        std::vector<Request> out;

        if (phase_ == Phase::blocks && t == block_start(current_block_ + 1)) {
            finish_block(view);  // evaluates conditions; may emit the final event
            if (phase_ == Phase::finished) return last_emission_;
            if (phase_ == Phase::runout) {
                if (t <= l_) {
                    emit_type_a(t, out);
                    return out;
                }
                return emit_final_event(t, /*at=*/v0_, /*count=*/3 * l_, /*deadline=*/3 * l_);
            }
        }

        if (phase_ == Phase::blocks) {
            if (t == block_start(current_block_)) emit_block_b(t, out);
            emit_type_a(t, out);
            return out;
        }

        // Case-3 run-out: keep the hub stream alive through tick L, final at L+1.
        if (phase_ == Phase::runout) {
            if (t <= l_) {
                emit_type_a(t, out);
                return out;
            }
            return emit_final_event(t, v0_, 3 * l_, 3 * l_);
        }
        return {};
    }

    bool done() const override { return phase_ == Phase::finished; }
    NodeId start_node() const override { return v0_; }
    const MetricSpace& metric() const override { return g_; }
    int current_block() const override {
        return phase_ == Phase::blocks ? static_cast<int>(current_block_) : 0;
    }

    AdversaryTranscript take_transcript() override {
        if (phase_ != Phase::finished) throw TranscriptMismatch("adversary run incomplete");
        return tr_;
    }

private:
    enum class Phase { blocks, runout, finished };

    Time block_start(std::int64_t i) const { return 1 + 3 * (i - 1) * f_; }

    void emit_type_a(Time t, std::vector<Request>& out) {
        Request r{next_id_++, t, 3 * l_, v0_};
        tr_.tick_a_ids.push_back(r.id);
        out.push_back(r);
    }

    void emit_block_b(Time t, std::vector<Request>& out) {
        BlockRecord rec;
        rec.index = static_cast<int>(current_block_);
        rec.start = t;
        rec.b_counts = b_split_;
        rec.b_ids.assign(static_cast<std::size_t>(star_.n()), {});
        for (NodeId v = 0; v < star_.n(); ++v) {
            for (std::int64_t k = 0; k < b_split_[static_cast<std::size_t>(v)]; ++k) {
                Request r{next_id_++, t, t + l_, v};
                rec.b_ids[static_cast<std::size_t>(v)].push_back(r.id);
                b_ids_.insert(r.id);
                out.push_back(r);
            }
        }
        tr_.blocks.push_back(std::move(rec));
    }

    void finish_block(const AdversaryView& view) {
        BlockRecord& rec = tr_.blocks.back();
        const Time begin = block_start(current_block_);
        const Time end = block_start(current_block_ + 1);  // exclusive
        std::int64_t served_in_block = 0;
        std::set<RequestId> served_b;
        for (const auto& [when, id] : *view.serve_events) {
            if (when >= begin && when < end) ++served_in_block;
            if (b_ids_.count(id)) served_b.insert(id);
        }
        rec.served_in_block = served_in_block;
        rec.unserved_b_at_end = static_cast<std::int64_t>(b_ids_.size() - served_b.size());
        rec.cond1 = 2 * rec.unserved_b_at_end >= f_;
        rec.cond2 = served_in_block <= 2 * f_;

        if (rec.cond1) {
            tr_.termination_case = 1;
            last_emission_ = emit_final_event(end, final_node_, l_, l_ + end);
            phase_ = Phase::finished;
        } else if (rec.cond2) {
            tr_.termination_case = 2;
            last_emission_ = emit_final_event(end, v0_, 3 * l_, 3 * l_);
            phase_ = Phase::finished;
        } else if (current_block_ == n_blocks_) {
            tr_.termination_case = 3;
            phase_ = Phase::runout;  // final event fixed at L+1
        } else {
            ++current_block_;
        }
    }

    std::vector<Request> emit_final_event(Time t, NodeId at, std::int64_t count, Time deadline) {
        std::vector<Request> out;
        tr_.final_event_time = t;
        for (std::int64_t k = 0; k < count; ++k) {
            Request r{next_id_++, t, deadline, at};
            tr_.final_request_ids.push_back(r.id);
            out.push_back(r);
        }
        phase_ = Phase::finished;
        return out;
    }

    StarMetric star_;
    MetricSpace g_;
    Time l_;
    NodeId v0_;
    Time f_ = 0;
    std::int64_t n_blocks_ = 0;
    std::vector<std::int64_t> b_split_;
    std::vector<NodeId> spokes_in_order_;
    NodeId final_node_ = 0;

    Phase phase_ = Phase::blocks;
    std::int64_t current_block_ = 1;
    RequestId next_id_ = 0;
    std::set<RequestId> b_ids_;
    std::vector<Request> last_emission_;
    AdversaryTranscript tr_;
};

}  // namespace

std::unique_ptr<AdversarySource> make_case_a_adversary(const MetricSpace& g, Time l, int emissions,
                                                       NodeId start) {
    return std::make_unique<CaseAAdversary>(g, l, emissions, start);
}

std::unique_ptr<AdversarySource> make_star_block_adversary(StarMetric star, Time l, NodeId v0) {
    MetricSpace ground = star_to_metric(star);
    std::vector<NodeId> order;
    for (NodeId v = 0; v < star.n(); ++v) order.push_back(v);  // any spoke order is 2w(S) on a star
    return std::make_unique<StarBlockAdversary>(std::move(star), std::move(ground), false, l, v0,
                                                std::move(order));
}

std::unique_ptr<AdversarySource> make_general_metric_adversary(const MetricSpace& g, Time l,
                                                               std::optional<NodeId> v0_opt,
                                                               const OracleCaps& caps) {
    NodeId v0 = v0_opt.value_or(0);
    // Spokes are visited in the tour order so a block's round trip costs <= TSP(G).
    Tour tour = g.n() <= caps.tsp_max_nodes ? tsp_exact(g, caps) : tsp_approx(g);
    if (9 * tour.weight > l)
        throw PreconditionViolated("general adversary needs 9*TSP(G) <= L; rescale the laxity");
    Embedding emb = embed_star(g, v0);
    std::vector<NodeId> order;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < tour.order.size(); ++i)
        if (tour.order[i] == v0) pivot = i;
    for (std::size_t s = 1; s <= tour.order.size(); ++s)
        order.push_back(tour.order[(pivot + s) % tour.order.size()]);
    return std::make_unique<StarBlockAdversary>(std::move(emb.star), g, true, l, v0,
                                                std::move(order));
}

RatioReport ratio_report(const AdversaryTranscript& transcript, const Schedule& policy_schedule,
                         const OracleCaps& caps) {
    RatioReport rep;
    rep.alg = policy_schedule.throughput();
    rep.opt_prime = constructive_opt_prime(transcript).throughput;
    try {
        rep.opt = opt_exact(transcript.instance, transcript.v0, caps).throughput;
    } catch (const InstanceTooLarge&) {
        rep.opt.reset();
    }
    if (rep.alg == 0) {
        rep.infinite = rep.opt_prime > 0;
        rep.ratio = Rational::of(0);
    } else {
        rep.ratio = Rational(rep.opt_prime, rep.alg);
    }
    return rep;
}

}  // namespace ttw
