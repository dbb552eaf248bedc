#include "doctest.h"

#include "oracles.hpp"
#include "ttw/errors.hpp"
#include "ttw/generators.hpp"
#include "ttw/orienteering.hpp"
#include "ttw/rng.hpp"

using namespace ttw;

TEST_CASE("orienteering_exact tiny examples") {
    auto k3 = gen_uniform_metric(3);
    SUBCASE("budget zero forces one node") {
        auto sol = orienteering_exact(k3, {5, 1, 1}, 0);
        CHECK(sol.prize == 5);
        CHECK(sol.path == std::vector<NodeId>{0});
        CHECK(sol.length == 0);
    }
    SUBCASE("budget one") {
        auto sol = orienteering_exact(k3, {5, 1, 1}, 1);
        CHECK(sol.prize == 6);
        CHECK(sol.path == std::vector<NodeId>{0, 1});
    }
    SUBCASE("budget two collects everything") {
        auto sol = orienteering_exact(k3, {5, 1, 1}, 2);
        CHECK(sol.prize == 7);
        CHECK(sol.length == 2);
    }
}

TEST_CASE("orienteering_exact equals path enumeration") {
    Rng rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        int n = static_cast<int>(rng.uniform(2, 8));
        auto g = rep % 2 == 0 ? gen_random_metric_closure(n, rng, 6)
                              : gen_random_metric_range(n, rng, 4);
        std::vector<Weight> prizes;
        for (int v = 0; v < n; ++v) prizes.push_back(rng.uniform(0, 5));
        Weight budget = rng.uniform(0, 3 * n);
        auto sol = orienteering_exact(g, prizes, budget);
        auto ref = oracle::brute_orienteering(g, prizes, budget);
        CHECK(sol.prize == ref.prize);
        CHECK(sol.length == ref.length);
        CHECK(sol.path == ref.path);
    }
}

TEST_CASE("orienteering_greedy") {
    auto k3 = gen_uniform_metric(3);
    SUBCASE("budget zero yields the best single node") {
        auto sol = orienteering_greedy(k3, {2, 9, 9}, 0);
        CHECK(sol.prize == 9);
        CHECK(sol.path == std::vector<NodeId>{1});
    }
    SUBCASE("dominated by the exact solver, feasible, at least best single") {
        Rng rng(32);
        for (int rep = 0; rep < 25; ++rep) {
            int n = static_cast<int>(rng.uniform(2, 8));
            auto g = gen_random_metric_closure(n, rng, 6);
            std::vector<Weight> prizes;
            Weight best_single = 0;
            for (int v = 0; v < n; ++v) {
                prizes.push_back(rng.uniform(0, 5));
                best_single = std::max(best_single, prizes.back());
            }
            Weight budget = rng.uniform(0, 2 * n);
            auto greedy = orienteering_greedy(g, prizes, budget);
            auto exact = orienteering_exact(g, prizes, budget);
            CHECK(greedy.length <= budget);
            CHECK(greedy.prize >= best_single);
            CHECK(greedy.prize <= exact.prize);
            Weight len = 0;
            for (std::size_t i = 0; i + 1 < greedy.path.size(); ++i)
                len += g.dist(greedy.path[i], greedy.path[i + 1]);
            CHECK(len == greedy.length);
        }
    }
    SUBCASE("equal prizes on a line stay contiguous") {
        auto line = gen_path_metric(8);
        auto sol = orienteering_greedy(line, std::vector<Weight>(8, 1), 4);
        std::vector<NodeId> sorted = sol.path;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) CHECK(sorted[i + 1] == sorted[i] + 1);
        CHECK(sol.prize == 5);
    }
}

TEST_CASE("orienteering prize is monotone in budget") {
    Rng rng(33);
    auto g = gen_random_metric_closure(6, rng, 5);
    std::vector<Weight> prizes{3, 1, 4, 1, 5, 2};
    Weight prev = -1;
    for (Weight b = 0; b <= 20; ++b) {
        auto sol = orienteering_exact(g, prizes, b);
        CHECK(sol.prize >= prev);
        CHECK(sol.length <= b);
        prev = sol.prize;
    }
}

TEST_CASE("orienteering_exact cap") {
    OracleCaps caps;
    caps.tsp_max_nodes = 3;
    CHECK_THROWS_AS(orienteering_exact(gen_uniform_metric(4), {1, 1, 1, 1}, 2, caps),
                    InstanceTooLarge);
}
