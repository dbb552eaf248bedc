#pragma once

#include <memory>

#include "ttw/caps.hpp"
#include "ttw/simulation.hpp"

namespace ttw {

/// Per-phase planning snapshot exposed by the two phase-based policies.
struct PhaseState {
    int index = 0;       // ell
    Time begin = 0;      // K*(ell-1)
    Time length = 0;     // K
    int eligible = 0;    // |R^ell|
    std::vector<RequestId> planned;  // rho_ell, service order
};

/// Phase-based policy interface addition: inspectable phase log.
class PhasedPolicy : public Policy {
public:
    virtual const std::vector<PhaseState>& phase_log() const = 0;
};

/// Phases of K = ceil(sqrt(tour * L)); per phase requests with decreased
/// deadline K*floor(d/K) >= K*ell, released before the phase, EDF prefix of
/// length K, served node by node along the fixed tour rotated to the current
/// position. Falls back to plain EDF when the metric has a single node.
std::unique_ptr<PhasedPolicy> make_tsp_edf(const MetricSpace& g, Time l,
                                           const OracleCaps& caps = {},
                                           bool force_approx_tour = false);

/// Phases of K = 3*diameter; per phase an unrooted orienteering solution with
/// budget = diameter over per-node request counts decides the service order.
std::unique_ptr<PhasedPolicy> make_orient_window(const MetricSpace& g, Time l,
                                                 const OracleCaps& caps = {});

/// Chases the feasible request with the earliest deadline (ties by id).
std::unique_ptr<Policy> make_edf_greedy(const MetricSpace& g);

/// Chases the closest feasible request (ties by id).
std::unique_ptr<Policy> make_nearest_first(const MetricSpace& g);

/// Never acts; the adversary constructions are exercised against it in tests.
std::unique_ptr<Policy> make_idle_policy();

/// Factory by CLI name: tsp-edf | orient-window | edf | nearest | idle.
std::unique_ptr<Policy> make_policy(const std::string& name, const MetricSpace& g, Time l,
                                    const OracleCaps& caps = {}, bool force_approx_tour = false);

}  // namespace ttw
