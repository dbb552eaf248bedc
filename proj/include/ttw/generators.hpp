#pragma once

#include "ttw/embedding.hpp"
#include "ttw/instance.hpp"
#include "ttw/rng.hpp"

namespace ttw {

MetricSpace gen_uniform_metric(int n, Weight d = 1);

/// Line 0-1-...-n-1 with the given consecutive edge lengths (all >= 1).
MetricSpace gen_path_metric(const std::vector<Weight>& edges);
MetricSpace gen_path_metric(int n, Weight edge = 1);

/// Random symmetric integer matrix in [1, max_w], closed under shortest paths.
MetricSpace gen_random_metric_closure(int n, Rng& rng, Weight max_w = 20);

/// Entries drawn from [base, 2*base - 1]: the triangle inequality holds strictly
/// without closure, keeping the metrics away from path-degenerate ties.
MetricSpace gen_random_metric_range(int n, Rng& rng, Weight base = 10);

StarMetric gen_random_star(int n, Rng& rng, Weight max_w = 9);  // leaf 0 has weight 0

/// `count` requests with windows of length in [min_laxity, min_laxity + slack],
/// releases in [1, release_span]; at least one request has laxity exactly
/// min_laxity so laxity(instance) == min_laxity.
std::vector<Request> gen_random_requests(int count, int n_nodes, Time min_laxity,
                                         Time release_span, Time slack, Rng& rng);

}  // namespace ttw
