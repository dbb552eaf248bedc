#include "ttw/generators.hpp"

#include <algorithm>
#include <cstdlib>

#include "ttw/errors.hpp"

namespace ttw {

MetricSpace gen_uniform_metric(int n, Weight d) {
    std::vector<std::vector<Weight>> m(static_cast<std::size_t>(n),
                                       std::vector<Weight>(static_cast<std::size_t>(n), d));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    return MetricSpace::validate(std::move(m));
}

MetricSpace gen_path_metric(const std::vector<Weight>& edges) {
    const int n = static_cast<int>(edges.size()) + 1;
    std::vector<Weight> prefix(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i)
        prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i) - 1] + edges[static_cast<std::size_t>(i) - 1];
    std::vector<std::vector<Weight>> m(static_cast<std::size_t>(n),
                                       std::vector<Weight>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::abs(prefix[static_cast<std::size_t>(i)] - prefix[static_cast<std::size_t>(j)]);
    return MetricSpace::validate(std::move(m));
}

MetricSpace gen_path_metric(int n, Weight edge) {
    return gen_path_metric(std::vector<Weight>(static_cast<std::size_t>(n) - 1, edge));
}

MetricSpace gen_random_metric_closure(int n, Rng& rng, Weight max_w) {
    std::vector<std::vector<Weight>> m(static_cast<std::size_t>(n),
                                       std::vector<Weight>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Weight w = rng.uniform(1, max_w);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    return MetricSpace::validate(std::move(m));
}

MetricSpace gen_random_metric_range(int n, Rng& rng, Weight base) {
    std::vector<std::vector<Weight>> m(static_cast<std::size_t>(n),
                                       std::vector<Weight>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Weight w = rng.uniform(base, 2 * base - 1);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w;
        }
    return MetricSpace::validate(std::move(m));
}

StarMetric gen_random_star(int n, Rng& rng, Weight max_w) {
    if (n < 2) throw PreconditionViolated("star needs at least two leaves");
    StarMetric s;
    s.leaf_weights.push_back(0);
    for (int i = 1; i < n; ++i) s.leaf_weights.push_back(rng.uniform(1, max_w));
    return s;
}

std::vector<Request> gen_random_requests(int count, int n_nodes, Time min_laxity,
                                         Time release_span, Time slack, Rng& rng) {
    if (count < 1) throw PreconditionViolated("need at least one request");
    std::vector<Request> out;
    for (int i = 0; i < count; ++i) {
        Request r;
        r.id = i;
        r.release = rng.uniform(1, std::max<Time>(1, release_span));
        Time lax = i == 0 ? min_laxity : min_laxity + rng.uniform(0, slack);
        r.deadline = r.release + lax;
        r.node = static_cast<NodeId>(rng.uniform(0, n_nodes - 1));
        out.push_back(r);
    }
    return out;
}

}  // namespace ttw
