#include "ttw/json_io.hpp"

#include <fstream>

#include "ttw/errors.hpp"

namespace ttw {

Json metric_to_json(const MetricSpace& g) {
    Json j;
    j["n"] = g.n();
    j["dist"] = g.matrix();
    return j;
}

MetricSpace metric_from_json(const Json& j) {
    auto m = j.at("dist").get<std::vector<std::vector<Weight>>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(m.size()))
        throw PreconditionViolated("metric json: n does not match dist");
    return MetricSpace::validate(std::move(m));
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["scale"] = inst.scale;
    j["metric"] = metric_to_json(inst.metric);
    Json reqs = Json::array();
    for (const Request& r : inst.requests) {
        Json rj;
        rj["id"] = r.id;
        rj["r"] = r.release;
        rj["d"] = r.deadline;
        rj["v"] = r.node;
        reqs.push_back(std::move(rj));
    }
    j["requests"] = std::move(reqs);
    return j;
}

Instance instance_from_json(const Json& j, bool strict) {
    MetricSpace g = metric_from_json(j.at("metric"));
    std::vector<Request> reqs;
    for (const Json& rj : j.at("requests")) {
        Request r;
        r.id = rj.at("id").get<RequestId>();
        r.release = rj.at("r").get<Time>();
        r.deadline = rj.at("d").get<Time>();
        r.node = rj.at("v").get<NodeId>();
        reqs.push_back(r);
    }
    std::int64_t scale = j.value("scale", std::int64_t{1});
    return strict ? Instance::make_strict(std::move(g), std::move(reqs), scale)
                  : Instance::make(std::move(g), std::move(reqs), scale);
}

Json schedule_to_json(const Schedule& s) {
    Json actions = Json::array();
    for (const Action& a : s.actions) {
        Json aj;
        if (const auto* sv = std::get_if<ServeAction>(&a)) {
            aj["type"] = "serve";
            aj["id"] = sv->request;
            aj["t"] = sv->start;
        } else if (const auto* tr = std::get_if<TravelAction>(&a)) {
            aj["type"] = "travel";
            aj["from"] = tr->from;
            aj["to"] = tr->to;
            aj["depart"] = tr->depart;
        } else {
            const auto& idle = std::get<IdleAction>(a);
            aj["type"] = "idle";
            aj["begin"] = idle.begin;
            aj["end"] = idle.end;
        }
        actions.push_back(std::move(aj));
    }
    Json j;
    j["actions"] = std::move(actions);
    j["throughput"] = s.throughput();
    return j;
}

Schedule schedule_from_json(const Json& j) {
    Schedule s;
    for (const Json& aj : j.at("actions")) {
        std::string type = aj.at("type").get<std::string>();
        if (type == "serve")
            s.actions.push_back(ServeAction{aj.at("id").get<RequestId>(), aj.at("t").get<Time>()});
        else if (type == "travel")
            s.actions.push_back(TravelAction{aj.at("from").get<NodeId>(), aj.at("to").get<NodeId>(),
                                             aj.at("depart").get<Time>()});
        else if (type == "idle")
            s.actions.push_back(IdleAction{aj.at("begin").get<Time>(), aj.at("end").get<Time>()});
        else
            throw PreconditionViolated("unknown schedule action type '" + type + "'");
    }
    return s;
}

Json star_to_json(const StarMetric& s) {
    Json j;
    j["leaf_weights"] = s.leaf_weights;
    j["total"] = s.total();
    return j;
}

StarMetric star_from_json(const Json& j) {
    StarMetric s;
    s.leaf_weights = j.at("leaf_weights").get<std::vector<Weight>>();
    return s;
}

Json embedding_to_json(const Embedding& e) {
    Json j;
    j["v0"] = e.v0;
    j["star"] = star_to_json(e.star);
    j["mst_weight"] = e.tree.total_weight();
    Json tree;
    tree["root"] = e.tree.root;
    tree["parent"] = e.tree.parent;
    tree["edge_weight"] = e.tree.edge_weight;
    j["tree"] = std::move(tree);
    return j;
}

Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    j["mode"] = r.mode;
    j["property1"] = Json{{"star_total", r.star_total},
                          {"mst_weight", r.mst_weight},
                          {"pass", r.property1_pass}};
    Json entries = Json::array();
    for (const VerifyEntry& e : r.entries) {
        Json ej;
        ej["subset"] = e.subset;
        ej["steiner"] = e.steiner;
        ej["w_s"] = e.w_s;
        ej["pass"] = e.pass;
        entries.push_back(std::move(ej));
    }
    j["checked"] = static_cast<int>(r.entries.size());
    j["entries"] = std::move(entries);
    j["pass"] = r.pass;
    return j;
}

Json trace_to_json_lines(const Trace& t) {
    Json arr = Json::array();
    for (const TickRecord& rec : t.ticks) {
        Json j;
        j["t"] = rec.t;
        j["position"] = rec.position;
        j["in_transit"] = rec.in_transit;
        j["action_index"] = rec.action_index;
        j["released"] = rec.released;
        if (rec.block > 0) j["block"] = rec.block;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json opt_result_to_json(const OptResult& r, const std::string& oracle) {
    Json j;
    j["throughput"] = r.throughput;
    j["oracle"] = oracle;
    j["explored_states"] = r.explored_states;
    j["schedule"] = schedule_to_json(r.schedule);
    return j;
}

Json transcript_to_json(const AdversaryTranscript& t) {
    Json j;
    j["kind"] = t.kind == AdversaryTranscript::Kind::case_a ? "case-a" : "star-block";
    j["v0"] = t.v0;
    j["L"] = t.L;
    if (t.kind == AdversaryTranscript::Kind::case_a) {
        j["diameter"] = t.diameter;
        j["emitted"] = t.emitted_ids;
    } else {
        j["star"] = star_to_json(t.star);
        j["from_embedding"] = t.from_embedding;
        j["F"] = t.F;
        j["N"] = t.N;
        j["termination_case"] = t.termination_case;
        j["final_event_time"] = t.final_event_time;
        j["final_node"] = t.final_node;
        j["final_request_count"] = static_cast<int>(t.final_request_ids.size());
        Json blocks = Json::array();
        for (const BlockRecord& b : t.blocks) {
            Json bj;
            bj["index"] = b.index;
            bj["start"] = b.start;
            bj["b_counts"] = b.b_counts;
            bj["served_in_block"] = b.served_in_block;
            bj["unserved_b_at_end"] = b.unserved_b_at_end;
            bj["cond1"] = b.cond1;
            bj["cond2"] = b.cond2;
            blocks.push_back(std::move(bj));
        }
        j["blocks"] = std::move(blocks);
    }
    j["instance"] = instance_to_json(t.instance);
    return j;
}

Json ratio_report_to_json(const RatioReport& r) {
    Json j;
    j["alg"] = r.alg;
    j["opt_prime"] = r.opt_prime;
    if (r.opt)
        j["opt"] = *r.opt;
    else
        j["opt"] = nullptr;
    j["infinite"] = r.infinite;
    j["ratio"] = r.infinite ? "inf" : r.ratio.str();
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << dump_canonical(j);
}

}  // namespace ttw
