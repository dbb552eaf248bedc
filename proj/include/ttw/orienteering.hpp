#pragma once

#include <vector>

#include "ttw/metric.hpp"

namespace ttw {

/// Simple path of length <= budget; prize sums the visited nodes' prizes.
struct OrienteeringSolution {
    std::vector<NodeId> path;
    Weight length = 0;
    Weight prize = 0;
};

/// Maximum-prize simple path of length <= budget. Among optima: shortest
/// length, then lexicographically smallest path. Requires n <= caps.tsp_max_nodes.
OrienteeringSolution orienteering_exact(const MetricSpace& g, const std::vector<Weight>& prizes,
                                        Weight budget, const OracleCaps& caps = {});

/// Cheapest-extension heuristic; feasible, prize >= best single node, no
/// approximation guarantee.
OrienteeringSolution orienteering_greedy(const MetricSpace& g, const std::vector<Weight>& prizes,
                                         Weight budget);

}  // namespace ttw
