// ttw: simulation lab for online service with time windows on a metric space.
// Subcommands: gen, embed, orienteer, opt, simulate, adversary, bench.

#include <fstream>
#include <future>
#include <thread>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ttw/adversary.hpp"
#include "ttw/errors.hpp"
#include "ttw/generators.hpp"
#include "ttw/json_io.hpp"
#include "ttw/orienteering.hpp"
#include "ttw/policies.hpp"

using namespace ttw;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

std::vector<Weight> parse_weights(const std::string& text) {
    std::vector<Weight> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational::of(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << dump_canonical(j);
    else
        save_json_file(out_path, j);
}

struct MetricOptions {
    std::string family = "random";
    int n = 4;
    std::uint64_t seed = 1;
    Weight edge = 1;
    Weight wmax = 20;
    Weight base = 10;
    std::string star_weights;
};

MetricSpace build_metric(const MetricOptions& mo) {
    Rng rng(mo.seed);
    if (mo.family == "uniform") return gen_uniform_metric(mo.n, mo.edge);
    if (mo.family == "path") return gen_path_metric(mo.n, mo.edge);
    if (mo.family == "random") return gen_random_metric_closure(mo.n, rng, mo.wmax);
    if (mo.family == "random-range") return gen_random_metric_range(mo.n, rng, mo.base);
    if (mo.family == "star") {
        StarMetric s = mo.star_weights.empty() ? gen_random_star(mo.n, rng)
                                               : StarMetric{parse_weights(mo.star_weights)};
        return star_to_metric(s);
    }
    throw PreconditionViolated("unknown metric family '" + mo.family + "'");
}

void add_metric_options(CLI::App* cmd, MetricOptions& mo) {
    cmd->add_option("--family", mo.family, "uniform|path|star|random|random-range");
    cmd->add_option("--n", mo.n, "node count");
    cmd->add_option("--seed", mo.seed, "generator seed");
    cmd->add_option("--edge", mo.edge, "edge weight for uniform/path");
    cmd->add_option("--wmax", mo.wmax, "max weight for random");
    cmd->add_option("--base", mo.base, "base weight for random-range");
    cmd->add_option("--star-weights", mo.star_weights, "comma list, e.g. 0,1,1,2");
}

MetricSpace metric_from_flags(const std::string& metric_file, const std::string& instance_file,
                              const MetricOptions& mo) {
    if (!metric_file.empty()) return metric_from_json(load_json_file(metric_file));
    if (!instance_file.empty())
        return instance_from_json(load_json_file(instance_file)).metric;
    return build_metric(mo);
}

std::string ratio_cell(std::int64_t num, std::int64_t den) {
    if (den == 0) return "inf";
    return Rational(num, den).str();
}

// Fixed bench/adversary CSV layout.
const char* kCsvHeader =
    "instance_id,n,L,tsp,diameter,delta,case,policy,alg,opt,opt_prime,ratio,termination_case,seed";

struct CsvRow {
    std::string instance_id;
    int n = 0;
    Time laxity = 0;
    Weight tsp = 0;
    Weight diam = 0;
    std::string delta;
    std::string case_label;
    std::string policy;
    std::int64_t alg = 0;
    std::optional<std::int64_t> opt;
    std::optional<std::int64_t> opt_prime;
    std::string ratio;
    std::string termination_case;
    std::uint64_t seed = 0;

    std::string str() const {
        std::ostringstream os;
        os << instance_id << ',' << n << ',' << laxity << ',' << tsp << ',' << diam << ','
           << delta << ',' << case_label << ',' << policy << ',' << alg << ','
           << (opt ? std::to_string(*opt) : "") << ','
           << (opt_prime ? std::to_string(*opt_prime) : "") << ',' << ratio << ','
           << termination_case << ',' << seed;
        return os.str();
    }
};

void append_csv(const std::string& path, const std::vector<CsvRow>& rows) {
    bool fresh = true;
    {
        std::ifstream probe(path);
        fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot write " + path);
    if (fresh) out << kCsvHeader << "\n";
    for (const CsvRow& r : rows) out << r.str() << "\n";
}

// ---------------------------------------------------------------------- gen

int cmd_gen(const MetricOptions& mo, int requests, Time laxity_target, Time release_span,
            Time window_slack, std::int64_t scale, const std::string& out_path) {
    MetricSpace g = build_metric(mo);
    Rng rng(mo.seed ^ 0x5eedULL);
    auto reqs = gen_random_requests(requests, g.n(), laxity_target,
                                    release_span > 0 ? release_span : 2 * laxity_target,
                                    window_slack >= 0 ? window_slack : laxity_target / 2, rng);
    auto inst = Instance::make_strict(std::move(g), std::move(reqs), scale);
    Json j = instance_to_json(inst);
    j["seed"] = mo.seed;
    emit(j, out_path);
    return 0;
}

// -------------------------------------------------------------------- embed

int cmd_embed(const std::string& metric_file, const std::string& instance_file,
              const MetricOptions& mo, NodeId v0, const std::string& verify_mode, int samples,
              std::uint64_t sample_seed, const std::string& out_path, const OracleCaps& caps) {
    MetricSpace g = metric_from_flags(metric_file, instance_file, mo);
    Embedding emb = embed_star(g, v0);
    Json j = embedding_to_json(emb);
    std::string mode = verify_mode;
    if (mode == "auto") mode = g.n() <= 10 ? "exhaustive" : "sampled";
    bool pass = true;
    if (mode == "exhaustive") {
        auto rep = verify_embedding_exhaustive(g, emb);
        j["verification"] = verify_report_to_json(rep);
        pass = rep.pass;
    } else if (mode == "sampled") {
        auto rep = verify_embedding_sampled(g, emb, samples, sample_seed, caps);
        j["verification"] = verify_report_to_json(rep);
        pass = rep.pass;
    }
    emit(j, out_path);
    return pass ? 0 : kExitViolations;
}

// ---------------------------------------------------------------- orienteer

int cmd_orienteer(const std::string& metric_file, const std::string& instance_file,
                  const MetricOptions& mo, const std::string& prizes_text, Weight budget,
                  const std::string& solver, const std::string& out_path,
                  const OracleCaps& caps) {
    MetricSpace g = metric_from_flags(metric_file, instance_file, mo);
    std::vector<Weight> prizes = parse_weights(prizes_text);
    if (static_cast<int>(prizes.size()) != g.n())
        throw PreconditionViolated("prize count does not match node count");
    bool exact = solver == "exact" || (solver == "auto" && g.n() <= caps.tsp_max_nodes);
    auto sol = exact ? orienteering_exact(g, prizes, budget, caps)
                     : orienteering_greedy(g, prizes, budget);
    Json j;
    j["solver"] = exact ? "exact" : "greedy";
    j["path"] = sol.path;
    j["length"] = sol.length;
    j["prize"] = sol.prize;
    emit(j, out_path);
    return 0;
}

// ---------------------------------------------------------------------- opt

int cmd_opt(const std::string& instance_file, NodeId start, const std::string& forbidden_text,
            const std::string& out_path, const OracleCaps& caps) {
    auto inst = instance_from_json(load_json_file(instance_file));
    OptResult res;
    std::string oracle;
    if (forbidden_text.empty()) {
        res = opt_exact(inst, start, caps);
        oracle = static_cast<int>(inst.requests.size()) <= caps.opt_max_requests ? "dp" : "bundle-dp";
    } else {
        std::set<RequestId> forbidden;
        for (const auto& tok : split(forbidden_text)) forbidden.insert(std::stoi(tok));
        res = opt_prime_exact(inst, forbidden, start, caps);
        oracle = "dp-restricted";
    }
    Json j = opt_result_to_json(res, oracle);
    bool valid = schedule_ok(inst, res.schedule);
    j["valid"] = valid;
    emit(j, out_path);
    return valid ? 0 : kExitViolations;
}

// ----------------------------------------------------------------- simulate

int cmd_simulate(const std::string& instance_file, const std::string& policy_name, NodeId start,
                 bool force_approx_tour, const std::string& trace_path,
                 const std::string& out_path, const OracleCaps& caps) {
    auto inst = instance_from_json(load_json_file(instance_file));
    Time l = laxity(inst);
    auto policy = make_policy(policy_name, inst.metric, l, caps, force_approx_tour);
    auto res = run(inst, *policy, inst.max_deadline(), start);
    auto violations = validate_schedule(inst, res.schedule);

    Json j;
    j["policy"] = policy->name();
    j["laxity"] = l;
    j["throughput"] = res.schedule.throughput();
    PolicyMeta meta = policy->meta();
    j["phase_length"] = meta.phase_length;
    j["guarantee"] = meta.guarantee;
    if (policy_name == "tsp-edf") {
        j["tour"] = meta.exact_subsolver ? "exact" : "approx";
        j["tour_weight"] = meta.tour_weight;
    }
    if (!meta.notes.empty()) j["notes"] = meta.notes;
    j["valid"] = violations.empty();
    try {
        auto opt = opt_exact(inst, start, caps);
        j["opt"] = opt.throughput;
        j["ratio"] = ratio_cell(opt.throughput, res.schedule.throughput());
    } catch (const InstanceTooLarge&) {
        j["opt"] = nullptr;
        j["ratio"] = nullptr;
    }
    j["schedule"] = schedule_to_json(res.schedule);
    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        if (!tf) throw Error("cannot write " + trace_path);
        for (const Json& line : trace_to_json_lines(res.trace)) tf << line.dump() << "\n";
    }
    emit(j, out_path);
    return violations.empty() ? 0 : kExitViolations;
}

// ---------------------------------------------------------------- adversary

int cmd_adversary(const std::string& mode, const std::string& policy_name,
                  const std::string& star_weights, const std::string& metric_file,
                  const MetricOptions& mo, const std::string& delta_text, Time l_flag,
                  int emissions, NodeId v0, const std::string& out_path,
                  const std::string& csv_path, const std::string& format,
                  const OracleCaps& caps) {
    std::unique_ptr<AdversarySource> adv;
    MetricSpace ground = MetricSpace::validate({{0}});
    Time l = l_flag;

    if (mode == "star") {
        StarMetric star{parse_weights(star_weights)};
        if (l <= 0) {
            Rational delta = parse_rational(delta_text);
            if (delta.num <= 0 || star.total() * delta.den % delta.num != 0)
                throw PreconditionViolated("delta must positively divide w(S); got " + delta.str());
            l = star.total() * delta.den / delta.num;
        }
        ground = star_to_metric(star);
        adv = make_star_block_adversary(star, l, 0);
    } else if (mode == "general") {
        ground = metric_from_flags(metric_file, "", mo);
        if (l <= 0) {
            Weight tsp = ground.n() <= caps.tsp_max_nodes ? tsp_exact(ground, caps).weight
                                                          : tsp_approx(ground).weight;
            Rational delta = parse_rational(delta_text);
            if (delta.num <= 0 || tsp * delta.den % delta.num != 0)
                throw PreconditionViolated("delta must positively divide TSP(G); got " + delta.str());
            l = tsp * delta.den / delta.num;
        }
        adv = make_general_metric_adversary(ground, l, v0, caps);
    } else if (mode == "case-a") {
        ground = metric_from_flags(metric_file, "", mo);
        if (l <= 0) l = (diameter(ground) - 1) / 2;
        adv = make_case_a_adversary(ground, l, emissions, v0);
    } else {
        throw PreconditionViolated("unknown adversary mode '" + mode + "'");
    }

    auto policy = make_policy(policy_name, ground, l, caps);
    auto res = run_adaptive(*adv, *policy);
    auto rep = ratio_report(res.transcript, res.schedule, caps);
    auto opt_prime = constructive_opt_prime(res.transcript);

    bool valid = schedule_ok(res.instance, res.schedule) &&
                 schedule_ok(res.instance, opt_prime.schedule);

    CsvRow row;
    row.instance_id = mode + "-" + policy_name;
    row.n = ground.n();
    row.laxity = l;
    row.diam = diameter(ground);
    row.tsp = ground.n() <= caps.tsp_max_nodes ? tsp_exact(ground, caps).weight
                                               : tsp_approx(ground).weight;
    row.delta = Rational(row.tsp, l).str();
    row.case_label = to_string(classify_case(res.instance, caps).label);
    row.policy = policy_name;
    row.alg = rep.alg;
    row.opt = rep.opt;
    row.opt_prime = rep.opt_prime;
    row.ratio = rep.infinite ? "inf" : rep.ratio.str();
    row.termination_case =
        res.transcript.termination_case > 0 ? std::to_string(res.transcript.termination_case) : "";
    row.seed = mo.seed;
    if (!csv_path.empty()) append_csv(csv_path, {row});

    if (format == "csv") {
        std::cout << kCsvHeader << "\n" << row.str() << "\n";
    } else {
        Json j = transcript_to_json(res.transcript);
        j["ratio_report"] = ratio_report_to_json(rep);
        j["valid"] = valid;
        emit(j, out_path);
    }
    return valid ? 0 : kExitViolations;
}

// -------------------------------------------------------------------- bench

struct BenchTask {
    std::string family;
    int n = 0;
    char regime = 'c';
    int index = 0;
    std::string policy;
    std::uint64_t seed = 0;
    int requests = 0;
};

CsvRow bench_row(const BenchTask& task, const OracleCaps& caps, bool& violation) {
    MetricOptions mo;
    mo.family = task.family;
    mo.n = task.n;
    mo.seed = task.seed;
    if (task.regime == 'a') mo.edge = 12;  // room below diameter/2
    MetricSpace g = build_metric(mo);
    Weight diam = diameter(g);
    Weight tsp = g.n() <= caps.tsp_max_nodes ? tsp_exact(g, caps).weight : tsp_approx(g).weight;

    Rng rng(task.seed * 977 + static_cast<std::uint64_t>(task.index));
    Time l;
    switch (task.regime) {
        case 'a': l = std::max<Time>(1, (diam - 1) / 2); break;
        case 'b': l = 2 * diam + 1 + rng.uniform(0, std::max<Time>(0, tsp - 2 * diam - 1)); break;
        default: l = 10 * tsp + rng.uniform(1, 2 * tsp + 10); break;
    }
    auto inst = Instance::make(
        g, gen_random_requests(task.requests, g.n(), l, 2 * l + 4, l / 2, rng));

    auto policy = make_policy(task.policy, g, l, caps);
    auto res = run(inst, *policy, inst.max_deadline(), 0);

    CsvRow row;
    row.instance_id = task.family + "-n" + std::to_string(task.n) + "-" + task.regime + "-" +
                      std::to_string(task.index);
    row.n = g.n();
    row.laxity = l;
    row.tsp = tsp;
    row.diam = diam;
    auto creport = classify_case(inst, caps);
    row.delta = creport.delta.str();
    row.case_label = to_string(creport.label);
    row.policy = task.policy;
    row.alg = res.schedule.throughput();
    row.seed = task.seed;
    if (!schedule_ok(inst, res.schedule)) violation = true;
    try {
        auto opt = opt_exact(inst, 0, caps);
        row.opt = opt.throughput;
        row.ratio = ratio_cell(opt.throughput, row.alg);
        PolicyMeta meta = policy->meta();
        if (task.policy == "tsp-edf" && meta.guarantee && g.n() > 1) {
            // ALG >= OPT - 3*OPT*K/L, in integers: ALG*L >= OPT*(L - 3K)
            if (row.alg * l < opt.throughput * (l - 3 * meta.phase_length)) violation = true;
        }
        if (task.policy == "orient-window" && meta.guarantee) {
            if (opt.throughput > 28 * row.alg) violation = true;
        }
    } catch (const InstanceTooLarge&) {
        row.ratio = "";
    }
    return row;
}

int cmd_bench(const std::string& families_text, const std::string& n_text, int count,
              const std::string& policies_text, const std::string& regimes_text, int requests,
              std::uint64_t seed, const std::string& out_path, const OracleCaps& caps) {
    std::vector<BenchTask> tasks;
    for (const auto& family : split(families_text))
        for (const auto& n_str : split(n_text))
            for (const auto& regime : split(regimes_text))
                for (int i = 0; i < count; ++i)
                    for (const auto& policy : split(policies_text)) {
                        BenchTask t;
                        t.family = family;
                        t.n = std::stoi(n_str);
                        t.regime = regime[0];
                        t.index = i;
                        t.policy = policy;
                        t.seed = seed + static_cast<std::uint64_t>(i) * 131 +
                                 static_cast<std::uint64_t>(t.n);
                        t.requests = requests;
                        tasks.push_back(std::move(t));
                    }

    // independent runs fan out over a bounded set of workers; rows are
    // re-sorted afterwards so the output does not depend on scheduling
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), tasks.size());
    std::vector<std::pair<CsvRow, bool>> results(tasks.size());
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = w; i < tasks.size(); i += workers) {
                bool bad = false;
                CsvRow row = bench_row(tasks[i], caps, bad);
                results[i] = {std::move(row), bad};
            }
        }));
    for (auto& f : futures) f.get();

    std::vector<CsvRow> rows;
    bool violation = false;
    for (auto& [row, bad] : results) {
        rows.push_back(std::move(row));
        violation = violation || bad;
    }
    std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
        return std::tie(a.instance_id, a.policy) < std::tie(b.instance_id, b.policy);
    });

    if (out_path.empty()) {
        std::cout << kCsvHeader << "\n";
        for (const CsvRow& r : rows) std::cout << r.str() << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << kCsvHeader << "\n";
        for (const CsvRow& r : rows) out << r.str() << "\n";
    }
    return violation ? kExitViolations : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online time-window service simulation lab"};
    app.require_subcommand(1);

    std::string caps_text;
    app.add_option("--caps", caps_text, "oracle caps, e.g. tsp=14,steiner=10,opt=18");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    MetricOptions gen_mo;
    add_metric_options(gen, gen_mo);
    int gen_requests = 8;
    Time gen_laxity = 20, gen_span = 0, gen_slack = -1;
    std::int64_t gen_scale = 1;
    std::string gen_out;
    gen->add_option("--requests", gen_requests);
    gen->add_option("--laxity", gen_laxity, "minimum window length");
    gen->add_option("--release-span", gen_span);
    gen->add_option("--window-slack", gen_slack);
    gen->add_option("--scale", gen_scale, "declared integer scale factor");
    gen->add_option("--out", gen_out);

    // embed
    auto* embed = app.add_subcommand("embed", "star embedding plus verification report");
    MetricOptions embed_mo;
    add_metric_options(embed, embed_mo);
    std::string embed_metric, embed_instance, embed_verify = "auto", embed_out;
    NodeId embed_v0 = 0;
    int embed_samples = 64;
    std::uint64_t embed_sample_seed = 1;
    embed->add_option("--metric", embed_metric, "metric json file");
    embed->add_option("--instance", embed_instance, "instance json file");
    embed->add_option("--v0", embed_v0);
    embed->add_option("--verify", embed_verify, "exhaustive|sampled|none|auto");
    embed->add_option("--samples", embed_samples);
    embed->add_option("--sample-seed", embed_sample_seed);
    embed->add_option("--out", embed_out);

    // orienteer
    auto* orient = app.add_subcommand("orienteer", "budgeted prize-collecting path query");
    MetricOptions orient_mo;
    add_metric_options(orient, orient_mo);
    std::string orient_metric, orient_instance, orient_prizes, orient_solver = "auto", orient_out;
    Weight orient_budget = 0;
    orient->add_option("--metric", orient_metric);
    orient->add_option("--instance", orient_instance);
    orient->add_option("--prizes", orient_prizes)->required();
    orient->add_option("--budget", orient_budget)->required();
    orient->add_option("--solver", orient_solver, "exact|greedy|auto");
    orient->add_option("--out", orient_out);

    // opt
    auto* opt = app.add_subcommand("opt", "exact offline throughput oracle");
    std::string opt_instance, opt_forbidden, opt_out;
    NodeId opt_start = 0;
    opt->add_option("--instance", opt_instance)->required();
    opt->add_option("--start", opt_start);
    opt->add_option("--forbidden", opt_forbidden, "request ids the oracle may not serve");
    opt->add_option("--out", opt_out);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a policy over an instance");
    std::string sim_instance, sim_policy, sim_trace, sim_out, sim_tsp = "exact";
    NodeId sim_start = 0;
    sim->add_option("--instance", sim_instance)->required();
    sim->add_option("--policy", sim_policy, "tsp-edf|orient-window|edf|nearest")->required();
    sim->add_option("--start", sim_start);
    sim->add_option("--tsp", sim_tsp, "exact|approx tour for tsp-edf");
    sim->add_option("--trace", sim_trace, "write per-tick json lines here");
    sim->add_option("--out", sim_out);

    // adversary
    auto* adv = app.add_subcommand("adversary", "adaptive lower-bound constructions");
    MetricOptions adv_mo;
    adv_mo.star_weights = "0,1,1,2";
    add_metric_options(adv, adv_mo);
    std::string adv_mode, adv_policy, adv_metric, adv_delta = "1/9";
    std::string adv_out, adv_csv, adv_format = "json";
    Time adv_l = 0;
    int adv_emissions = 8;
    NodeId adv_v0 = 0;
    adv->add_option("--mode", adv_mode, "case-a|star|general")->required();
    adv->add_option("--policy", adv_policy)->required();
    adv->add_option("--metric", adv_metric);
    adv->add_option("--delta", adv_delta, "target TSP/L (or w(S)/L) as p/q");
    adv->add_option("--L", adv_l, "explicit laxity override");
    adv->add_option("--emissions", adv_emissions);
    adv->add_option("--v0", adv_v0);
    adv->add_option("--out", adv_out);
    adv->add_option("--csv", adv_csv, "append a ratio row to this csv");
    adv->add_option("--format", adv_format, "json|csv");

    // bench
    auto* bench = app.add_subcommand("bench", "policy x instance grid, csv report");
    std::string bench_families = "uniform,path,random", bench_n = "3,4", bench_regimes = "b,c";
    std::string bench_policies = "edf,nearest,tsp-edf,orient-window", bench_out;
    int bench_count = 2, bench_requests = 9;
    std::uint64_t bench_seed = 1;
    bench->add_option("--families", bench_families);
    bench->add_option("--n-list", bench_n);
    bench->add_option("--count", bench_count);
    bench->add_option("--policies", bench_policies);
    bench->add_option("--regimes", bench_regimes, "subset of a,b,c");
    bench->add_option("--requests", bench_requests);
    bench->add_option("--seed", bench_seed);
    bench->add_option("--out", bench_out);

    CLI11_PARSE(app, argc, argv);

    try {
        OracleCaps caps = OracleCaps::from_env();
        if (!caps_text.empty()) caps = OracleCaps::parse(caps_text, caps);

        if (gen->parsed())
            return cmd_gen(gen_mo, gen_requests, gen_laxity, gen_span, gen_slack, gen_scale,
                           gen_out);
        if (embed->parsed())
            return cmd_embed(embed_metric, embed_instance, embed_mo, embed_v0, embed_verify,
                             embed_samples, embed_sample_seed, embed_out, caps);
        if (orient->parsed())
            return cmd_orienteer(orient_metric, orient_instance, orient_mo, orient_prizes,
                                 orient_budget, orient_solver, orient_out, caps);
        if (opt->parsed()) return cmd_opt(opt_instance, opt_start, opt_forbidden, opt_out, caps);
        if (sim->parsed())
            return cmd_simulate(sim_instance, sim_policy, sim_start, sim_tsp == "approx",
                                sim_trace, sim_out, caps);
        if (adv->parsed())
            return cmd_adversary(adv_mode, adv_policy, adv_mo.star_weights, adv_metric, adv_mo,
                                 adv_delta, adv_l, adv_emissions, adv_v0, adv_out, adv_csv,
                                 adv_format, caps);
        if (bench->parsed())
            return cmd_bench(bench_families, bench_n, bench_count, bench_policies, bench_regimes,
                             bench_requests, bench_seed, bench_out, caps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
