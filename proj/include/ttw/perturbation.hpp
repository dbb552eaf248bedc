#pragma once

#include "ttw/instance.hpp"
#include "ttw/offline_opt.hpp"

namespace ttw {

/// Aligns every window to phase boundaries: [K*ceil(r/K), K*floor(d/K)].
/// Requests whose aligned window is empty are kept (deadline < release flags
/// them) so the request multisets stay in bijection.
Instance perturb_align(const Instance& inst, Time k);

/// Moves every request to v_prime; windows unchanged.
Instance collapse_nodes(const Instance& inst, NodeId v_prime);

/// True iff `hat` shrinks each of `orig`'s windows by at most lambda on each
/// side (nested: r_hat >= r, d_hat <= d). Requests are matched by id; a
/// mismatched id set or node raises RequestMismatch.
bool is_lambda_perturbation(const Instance& orig, const Instance& hat, Time lambda);

struct PerturbationReport {
    Time lambda = 0;
    std::int64_t opt_original = 0;
    std::int64_t opt_perturbed = 0;
    Rational bound;  // (1 - 2*lambda/L) * OPT(original)
    bool pass = false;
};

/// Empirical check of the imported perturbation bound with lambda = K:
/// OPT(aligned) >= (1 - 2K/L) * OPT(original), both sides from the exact oracle.
PerturbationReport check_perturbation_bound(const Instance& inst, Time k, NodeId start = 0,
                                            const OracleCaps& caps = {});

}  // namespace ttw
