#include "ttw/perturbation.hpp"

#include <map>

#include "ttw/errors.hpp"

namespace ttw {

namespace {
Time ceil_div(Time a, Time b) { return (a + b - 1) / b; }
}

Instance perturb_align(const Instance& inst, Time k) {
    if (k < 1) throw PreconditionViolated("alignment step must be >= 1");
    std::vector<Request> out;
    out.reserve(inst.requests.size());
    for (Request r : inst.requests) {
        r.release = k * ceil_div(r.release, k);
        r.deadline = k * (r.deadline / k);
        out.push_back(r);
    }
    return Instance::make(inst.metric, std::move(out), inst.scale);
}

Instance collapse_nodes(const Instance& inst, NodeId v_prime) {
    if (v_prime < 0 || v_prime >= inst.metric.n())
        throw PreconditionViolated("collapse target out of range");
    std::vector<Request> out;
    out.reserve(inst.requests.size());
    for (Request r : inst.requests) {
        r.node = v_prime;
        out.push_back(r);
    }
    return Instance::make(inst.metric, std::move(out), inst.scale);
}

bool is_lambda_perturbation(const Instance& orig, const Instance& hat, Time lambda) {
    if (orig.requests.size() != hat.requests.size())
        throw RequestMismatch("request counts differ");
    std::map<RequestId, const Request*> by_id;
    for (const Request& r : orig.requests) by_id[r.id] = &r;
    for (const Request& h : hat.requests) {
        auto it = by_id.find(h.id);
        if (it == by_id.end()) throw RequestMismatch("id " + std::to_string(h.id) + " not in original");
        const Request& o = *it->second;
        if (o.node != h.node) throw RequestMismatch("node of id " + std::to_string(h.id) + " differs");
        if (h.release < o.release || h.deadline > o.deadline) return false;  // must be nested
        if (h.release - o.release > lambda) return false;
        if (o.deadline - h.deadline > lambda) return false;
    }
    return true;
}

PerturbationReport check_perturbation_bound(const Instance& inst, Time k, NodeId start,
                                            const OracleCaps& caps) {
    PerturbationReport rep;
    rep.lambda = k;
    const Time l = laxity(inst);
    Instance hat = perturb_align(inst, k);
    rep.opt_original = opt_exact(inst, start, caps).throughput;
    rep.opt_perturbed = opt_exact(hat, start, caps).throughput;
    rep.bound = Rational((l - 2 * k) * rep.opt_original, l);
    rep.pass = Rational::of(rep.opt_perturbed) >= rep.bound;
    return rep;
}

}  // namespace ttw
