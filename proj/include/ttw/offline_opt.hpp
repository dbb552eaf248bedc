#pragma once

#include <atomic>
#include <set>

#include "ttw/instance.hpp"
#include "ttw/transcript.hpp"

namespace ttw {

struct CancelToken {
    std::atomic<bool> cancelled{false};
};

struct OptResult {
    int throughput = 0;
    Schedule schedule;
    std::int64_t explored_states = 0;
};

/// Maximum offline throughput from `start` at time 1. Dispatches to the plain
/// subset DP (|requests| <= caps.opt_max_requests) or, past that, to the
/// bundle DP over deduplicated (node, window) classes.
OptResult opt_exact(const Instance& inst, NodeId start, const OracleCaps& caps = {},
                    CancelToken* cancel = nullptr);

/// Subset DP over individual requests; state = (served set, last request),
/// value = earliest completion time.
OptResult opt_exact_plain(const Instance& inst, NodeId start, const OracleCaps& caps = {},
                          CancelToken* cancel = nullptr);

/// Identical requests collapsed into counted bundles; state = per-class served
/// counts (mixed radix) x last class.
OptResult opt_exact_bundle(const Instance& inst, NodeId start, const OracleCaps& caps = {},
                           CancelToken* cancel = nullptr);

/// opt_exact restricted to requests outside `forbidden`.
OptResult opt_prime_exact(const Instance& inst, const std::set<RequestId>& forbidden, NodeId start,
                          const OracleCaps& caps = {}, CancelToken* cancel = nullptr);

/// The lower-bound proofs' explicit offline schedule for an adversary
/// transcript: the per-case three-stage plan for star-block transcripts
/// (Case 1: all pre-final type-B in their blocks, then the final batch, then
/// the type-A backlog; Cases 2-3: one type-A per tick, then the final batch
/// through 3L), or the serve-everything schedule for a case-a transcript.
OptResult constructive_opt_prime(const AdversaryTranscript& transcript);

}  // namespace ttw
