#include "doctest.h"

#include "ttw/errors.hpp"
#include "ttw/generators.hpp"
#include "ttw/instance.hpp"
#include "ttw/offline_opt.hpp"

using namespace ttw;

namespace {

Instance single_node_instance(std::vector<Request> reqs) {
    return Instance::make(MetricSpace::validate({{0}}), std::move(reqs));
}

}  // namespace

TEST_CASE("laxity") {
    CHECK(laxity(single_node_instance({{0, 3, 7, 0}})) == 4);
    CHECK(laxity(single_node_instance({{0, 1, 2, 0}, {1, 1, 9, 0}})) == 1);
    CHECK_THROWS_AS(laxity(single_node_instance({})), EmptyInstance);
}

TEST_CASE("classify_case picks the laxity regimes") {
    SUBCASE("A: diameter 10, L = 4") {
        auto g = gen_path_metric(2, 10);
        auto inst = Instance::make(g, {{0, 1, 5, 0}});
        auto rep = classify_case(inst);
        CHECK(rep.label == CaseLabel::A);
        CHECK(rep.diameter == 10);
    }
    SUBCASE("C: TSP 4, L = 100, delta = 1/25") {
        auto g = gen_path_metric(3);  // tsp 4
        auto inst = Instance::make(g, {{0, 1, 101, 0}});
        auto rep = classify_case(inst);
        CHECK(rep.label == CaseLabel::C);
        CHECK(rep.delta == Rational(1, 25));
    }
    SUBCASE("Gap: diameter 2, L = 3") {
        auto g = gen_path_metric(3);  // diameter 2, tsp 4
        auto inst = Instance::make(g, {{0, 1, 4, 0}});
        auto rep = classify_case(inst);
        CHECK(rep.label == CaseLabel::Gap);
        CHECK(rep.margin_over_2diam == -1);
    }
    SUBCASE("B: 2*diameter < L <= TSP") {
        // diameter 3, tsp 10 on a 4-point uniform-ish metric
        auto g = gen_uniform_metric(5, 3);
        auto inst = Instance::make(g, {{0, 1, 9, 0}});  // L = 8, 2*diam = 6, tsp = 15
        auto rep = classify_case(inst);
        CHECK(rep.label == CaseLabel::B);
        CHECK(rep.margin_over_2diam == 2);
    }
    SUBCASE("single node is always C") {
        auto rep = classify_case(single_node_instance({{0, 1, 2, 0}}));
        CHECK(rep.label == CaseLabel::C);
        CHECK(rep.delta == Rational::of(0));
    }
}

TEST_CASE("delta_ratio") {
    auto g = gen_path_metric(3);  // tsp 4
    CHECK(delta_ratio(Instance::make(g, {{0, 1, 37, 0}})).value == Rational(1, 9));
    CHECK(delta_ratio(single_node_instance({{0, 1, 2, 0}})).value == Rational::of(0));
    auto g5 = gen_path_metric(2, 5);  // tsp 10... use laxity 90 for 1/9
    CHECK(delta_ratio(Instance::make(g5, {{0, 1, 91, 0}})).value == Rational(1, 9));
}

TEST_CASE("validate_schedule rules") {
    auto g = gen_path_metric(2, 3);  // two nodes at distance 3
    auto inst = Instance::make(g, {{0, 1, 2, 1}, {1, 1, 9, 0}, {2, 4, 9, 1}});

    SUBCASE("serve starting at the deadline is fine") {
        Schedule s;
        s.actions.push_back(TravelAction{0, 1, 1});
        s.actions.push_back(ServeAction{2, 9});  // window [4,9]; completes at 10
        CHECK(schedule_ok(inst, s));
    }
    SUBCASE("start before release violates (a)") {
        Schedule s;
        s.actions.push_back(ServeAction{1, 0});
        auto v = validate_schedule(inst, s);
        REQUIRE(!v.empty());
        bool has_window = false, has_early = false;
        for (auto& x : v) {
            if (x.rule == Rule::serve_window) has_window = true;
            if (x.rule == Rule::early_start) has_early = true;
        }
        CHECK(has_window);
        CHECK(has_early);
    }
    SUBCASE("missing travel time violates (b)") {
        Schedule s;
        s.actions.push_back(ServeAction{1, 4});   // node 0, ends 5
        s.actions.push_back(ServeAction{2, 6});   // node 1, needs start >= 8
        auto v = validate_schedule(inst, s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == Rule::travel_separation);
    }
    SUBCASE("overlap violates (c)") {
        Schedule s;
        s.actions.push_back(ServeAction{1, 4});
        s.actions.push_back(IdleAction{4, 6});
        auto v = validate_schedule(inst, s);
        REQUIRE(!v.empty());
        CHECK(v[0].rule == Rule::overlap);
    }
    SUBCASE("duplicate serve violates (d)") {
        Schedule s;
        s.actions.push_back(ServeAction{1, 4});
        s.actions.push_back(ServeAction{1, 6});
        auto v = validate_schedule(inst, s);
        bool has_dup = false;
        for (auto& x : v) has_dup = has_dup || x.rule == Rule::duplicate_serve;
        CHECK(has_dup);
    }
    SUBCASE("unknown request") {
        Schedule s;
        s.actions.push_back(ServeAction{99, 4});
        auto v = validate_schedule(inst, s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == Rule::unknown_request);
    }
}

TEST_CASE("single node with k identical requests admits exactly min(k, L+1)") {
    for (int k : {1, 3, 6, 12}) {
        const Time l = 4;
        std::vector<Request> reqs;
        for (int i = 0; i < k; ++i) reqs.push_back({i, 1, 1 + l, 0});
        auto inst = single_node_instance(std::move(reqs));
        auto res = opt_exact(inst, 0);
        CHECK(res.throughput == std::min<int>(k, static_cast<int>(l) + 1));
        CHECK(schedule_ok(inst, res.schedule));
    }
}

TEST_CASE("instance construction validates nodes and ids") {
    auto g = gen_uniform_metric(2);
    CHECK_THROWS_AS(Instance::make(g, {{0, 1, 2, 5}}), PreconditionViolated);
    CHECK_THROWS_AS(Instance::make(g, {{0, 1, 2, 0}, {0, 1, 2, 1}}), PreconditionViolated);
    CHECK_THROWS_AS(Instance::make_strict(g, {{0, 1, 1, 0}}), PreconditionViolated);
    CHECK_THROWS_AS(Instance::make_strict(g, {{0, 0, 5, 0}}), PreconditionViolated);
}
