#pragma once

#include <memory>
#include <optional>

#include "ttw/offline_opt.hpp"
#include "ttw/rational.hpp"
#include "ttw/simulation.hpp"

namespace ttw {

/// Every diameter+1 ticks (first at 1 + (diameter+1), so the offline schedule
/// can reach it) emits one laxity-L request at a diameter endpoint at distance
/// >= diameter/2 from the policy's reference location. Requires 2L < diameter.
std::unique_ptr<AdversarySource> make_case_a_adversary(const MetricSpace& g, Time l,
                                                       int emissions = 8, NodeId start = 0);

/// Block construction on a star: F = ceil(sqrt(w(S)*L)) type-B requests per
/// block split across the spokes proportionally to their weights
/// (largest-remainder rounding), one type-A hub request per tick, termination
/// by Condition 1 (backlog), Condition 2 (low service), or after N blocks.
/// Requires 9*w(S) <= L. Node v0 is the hub carrying the per-tick stream.
std::unique_ptr<AdversarySource> make_star_block_adversary(StarMetric star, Time l, NodeId v0 = 0);

/// Star-block construction lifted onto a general metric through the Prim-star
/// embedding at v0; requests are placed on G's nodes. Requires 9*TSP(G) <= L.
std::unique_ptr<AdversarySource> make_general_metric_adversary(const MetricSpace& g, Time l,
                                                               std::optional<NodeId> v0 = {},
                                                               const OracleCaps& caps = {});

struct RatioReport {
    std::int64_t alg = 0;
    std::int64_t opt_prime = 0;
    std::optional<std::int64_t> opt;  // exact oracle, when within caps
    bool infinite = false;            // alg == 0 with opt_prime > 0
    Rational ratio;                   // opt_prime / alg when finite
};

RatioReport ratio_report(const AdversaryTranscript& transcript, const Schedule& policy_schedule,
                         const OracleCaps& caps = {});

}  // namespace ttw
