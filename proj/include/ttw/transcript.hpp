#pragma once

#include <vector>

#include "ttw/embedding.hpp"
#include "ttw/instance.hpp"

namespace ttw {

/// One adversary block: starts at t_i = 1 + 3(i-1)F, spans 3F ticks, releases
/// exactly F type-B requests up front plus one type-A request per tick.
struct BlockRecord {
    int index = 0;  // 1-based
    Time start = 0;
    std::vector<std::int64_t> b_counts;              // per node (0 at the hub)
    std::vector<std::vector<RequestId>> b_ids;       // per node
    std::int64_t served_in_block = 0;                // any type, starts within the block
    std::int64_t unserved_b_at_end = 0;              // cumulative backlog
    bool cond1 = false;                              // 2*unserved >= F
    bool cond2 = false;                              // served_in_block <= 2F
};

struct AdversaryTranscript {
    enum class Kind { case_a, star_block };
    Kind kind = Kind::star_block;

    // star-block fields
    StarMetric star;
    bool from_embedding = false;
    NodeId v0 = 0;
    NodeId final_node = 0;  // v_1 for Case 1, v0 for Cases 2-3
    Time L = 0;
    std::int64_t F = 0;
    std::int64_t N = 0;
    std::vector<BlockRecord> blocks;
    int termination_case = 0;  // 1..3; 0 for case_a transcripts
    Time final_event_time = 0;
    std::vector<RequestId> tick_a_ids;  // one per tick, release order
    std::vector<RequestId> final_request_ids;
    std::vector<NodeId> service_node_order;  // spoke order for the block-serving stage

    // case-a fields
    Time diameter = 0;
    std::vector<RequestId> emitted_ids;

    // filled by the engine after the adaptive run
    Instance instance{MetricSpace::validate({{0}}), {}, 1};
};

}  // namespace ttw
