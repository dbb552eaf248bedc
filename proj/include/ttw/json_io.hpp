#pragma once

#include <string>

#include "json.hpp"
#include "ttw/adversary.hpp"
#include "ttw/embedding.hpp"
#include "ttw/instance.hpp"
#include "ttw/offline_opt.hpp"
#include "ttw/simulation.hpp"

namespace ttw {

// Deterministic emission: keys keep insertion order, so identical values give
// byte-identical files.
using Json = nlohmann::ordered_json;

Json metric_to_json(const MetricSpace& g);           // {"n":..., "dist":[[...]]}
MetricSpace metric_from_json(const Json& j);

Json instance_to_json(const Instance& inst);         // {"scale","metric","requests"}
Instance instance_from_json(const Json& j, bool strict = true);

Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

Json star_to_json(const StarMetric& s);
StarMetric star_from_json(const Json& j);

Json embedding_to_json(const Embedding& e);
Json verify_report_to_json(const VerifyReport& r);
Json trace_to_json_lines(const Trace& t);            // array; one record per tick
Json opt_result_to_json(const OptResult& r, const std::string& oracle);
Json transcript_to_json(const AdversaryTranscript& t);
Json ratio_report_to_json(const RatioReport& r);

std::string dump_canonical(const Json& j);           // 2-space indent + newline
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace ttw
