#include "doctest.h"

#include "oracles.hpp"
#include "ttw/errors.hpp"
#include "ttw/generators.hpp"
#include "ttw/metric.hpp"
#include "ttw/rng.hpp"

using namespace ttw;

TEST_CASE("validate_metric accepts valid matrices") {
    CHECK(MetricSpace::validate({{0}}).n() == 1);
    CHECK(MetricSpace::validate({{0, 1}, {1, 0}}).n() == 2);
}

TEST_CASE("validate_metric names the witnessing indices") {
    try {
        MetricSpace::validate({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
        FAIL("expected TriangleViolation");
    } catch (const TriangleViolation& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 2);
        CHECK(e.k == 1);
    }
    try {
        MetricSpace::validate({{0, 2}, {1, 0}});
        FAIL("expected AsymmetryError");
    } catch (const AsymmetryError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
    }
    try {
        MetricSpace::validate({{1}});
        FAIL("expected NonzeroDiagonal");
    } catch (const NonzeroDiagonal& e) {
        CHECK(e.i == 0);
    }
    CHECK_THROWS_AS(MetricSpace::validate({{0, 0}, {0, 0}}), PreconditionViolated);
}

TEST_CASE("mst_prim on tiny metrics") {
    SUBCASE("single node") {
        auto g = MetricSpace::validate({{0}});
        auto t = mst_prim(g, 0);
        CHECK(t.total_weight() == 0);
        CHECK(t.parent[0] == 0);
    }
    SUBCASE("path metric picks the chain") {
        auto g = gen_path_metric(3);
        auto t = mst_prim(g, 0);
        CHECK(t.parent[1] == 0);
        CHECK(t.parent[2] == 1);
        CHECK(t.total_weight() == 2);
    }
    SUBCASE("uniform triangle breaks ties by id") {
        auto g = gen_uniform_metric(3);
        auto t = mst_prim(g, 0);
        CHECK(t.parent[1] == 0);
        CHECK(t.parent[2] == 0);  // tie between attaching at 0 and 1 goes to 0
        CHECK(t.total_weight() == 2);
    }
}

TEST_CASE("mst_prim equals tree enumeration and is root independent") {
    Rng rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        int n = static_cast<int>(rng.uniform(2, 7));
        auto g = rep % 2 == 0 ? gen_random_metric_closure(n, rng)
                              : gen_random_metric_range(n, rng);
        Weight expected = oracle::brute_mst(g);
        for (NodeId root = 0; root < n; ++root)
            CHECK(mst_prim(g, root).total_weight() == expected);
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(MetricSpace::validate({{0}})) == 0);
    CHECK(diameter(gen_path_metric(3)) == 2);
    CHECK(diameter(gen_uniform_metric(3)) == 1);
}

TEST_CASE("tsp_exact on tiny metrics") {
    CHECK(tsp_exact(MetricSpace::validate({{0}})).weight == 0);
    CHECK(tsp_exact(gen_uniform_metric(3)).weight == 3);
    CHECK(tsp_exact(gen_path_metric(3)).weight == 4);
    CHECK(tsp_exact(MetricSpace::validate({{0, 5}, {5, 0}})).weight == 10);
}

TEST_CASE("tsp_exact respects the cap") {
    OracleCaps caps;
    caps.tsp_max_nodes = 3;
    CHECK_THROWS_AS(tsp_exact(gen_uniform_metric(4), caps), InstanceTooLarge);
}

TEST_CASE("tsp_exact equals permutation enumeration") {
    Rng rng(12);
    for (int rep = 0; rep < 30; ++rep) {
        int n = static_cast<int>(rng.uniform(2, 8));
        auto g = rep % 2 == 0 ? gen_random_metric_closure(n, rng)
                              : gen_random_metric_range(n, rng);
        CHECK(tsp_exact(g).weight == oracle::brute_tsp(g));
    }
}

TEST_CASE("tsp_approx examples and sandwich") {
    CHECK(tsp_approx(MetricSpace::validate({{0}})).weight == 0);
    CHECK(tsp_approx(gen_uniform_metric(3)).weight <= 3);
    CHECK(tsp_approx(gen_path_metric(3)).weight == 4);  // equals 2*MST here

    Rng rng(13);
    for (int rep = 0; rep < 60; ++rep) {
        int n = static_cast<int>(rng.uniform(3, 8));
        auto g = rep % 2 == 0 ? gen_random_metric_closure(n, rng)
                              : gen_random_metric_range(n, rng);
        Weight mst = mst_prim(g, 0).total_weight();
        Weight exact = tsp_exact(g).weight;
        Weight approx = tsp_approx(g).weight;
        CHECK(mst <= exact);
        CHECK(exact <= approx);
        CHECK(approx <= 2 * mst);
        CHECK(diameter(g) <= exact);
    }
}

TEST_CASE("tsp_approx tour visits every node once") {
    Rng rng(14);
    auto g = gen_random_metric_closure(7, rng);
    auto t = tsp_approx(g);
    std::vector<NodeId> sorted = t.order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < 7; ++v) CHECK(sorted[static_cast<std::size_t>(v)] == v);
}

TEST_CASE("steiner_exact on tiny metrics") {
    auto path = gen_path_metric(3);
    CHECK(steiner_exact(path, {1}) == 0);
    CHECK(steiner_exact(path, {0, 2}) == 2);
    CHECK(steiner_exact(path, {0, 1, 2}) == mst_prim(path, 0).total_weight());
}

TEST_CASE("steiner_exact equals subset tree enumeration") {
    Rng rng(15);
    for (int rep = 0; rep < 25; ++rep) {
        int n = static_cast<int>(rng.uniform(2, 7));
        auto g = rep % 2 == 0 ? gen_random_metric_closure(n, rng)
                              : gen_random_metric_range(n, rng);
        std::vector<NodeId> terms;
        for (NodeId v = 0; v < n; ++v)
            if (rng.chance(1, 2)) terms.push_back(v);
        if (terms.empty()) terms.push_back(0);
        CHECK(steiner_exact(g, terms) == oracle::brute_steiner(g, terms));
    }
}

TEST_CASE("steiner properties: full set equals MST, monotone under inclusion") {
    Rng rng(16);
    for (int rep = 0; rep < 15; ++rep) {
        int n = static_cast<int>(rng.uniform(3, 7));
        auto g = gen_random_metric_closure(n, rng);
        std::vector<NodeId> all;
        for (NodeId v = 0; v < n; ++v) all.push_back(v);
        CHECK(steiner_exact(g, all) == mst_prim(g, 0).total_weight());

        std::vector<NodeId> small, large;
        for (NodeId v = 0; v < n; ++v) {
            bool in_large = rng.chance(2, 3);
            if (in_large) {
                large.push_back(v);
                if (rng.chance(1, 2)) small.push_back(v);
            }
        }
        if (small.empty()) small.push_back(large.empty() ? 0 : large.front());
        if (large.empty()) large = small;
        CHECK(steiner_exact(g, small) <= steiner_exact(g, large));
    }
}

TEST_CASE("steiner_all_subsets agrees with steiner_exact") {
    Rng rng(17);
    auto g = gen_random_metric_closure(6, rng);
    auto all = steiner_all_subsets(g);
    for (std::size_t mask = 1; mask < all.size(); ++mask) {
        std::vector<NodeId> terms;
        for (NodeId v = 0; v < 6; ++v)
            if (mask & (std::size_t{1} << v)) terms.push_back(v);
        CHECK(all[mask] == steiner_exact(g, terms));
    }
}

TEST_CASE("steiner_tree_edges is an optimal tree") {
    Rng rng(18);
    for (int rep = 0; rep < 20; ++rep) {
        int n = static_cast<int>(rng.uniform(2, 7));
        auto g = gen_random_metric_closure(n, rng);
        std::vector<NodeId> terms;
        for (NodeId v = 0; v < n; ++v)
            if (rng.chance(1, 2)) terms.push_back(v);
        if (terms.empty()) terms.push_back(0);
        auto edges = steiner_tree_edges(g, terms);
        CHECK(tree_weight(g, edges) == steiner_exact(g, terms));
    }
}

TEST_CASE("steiner cap error") {
    OracleCaps caps;
    caps.steiner_max_terminals = 2;
    auto g = gen_uniform_metric(4);
    CHECK_THROWS_AS(steiner_exact(g, {0, 1, 2}, caps), InstanceTooLarge);
}

TEST_CASE("star metric conversion") {
    StarMetric s{{0, 1, 1, 2}};
    CHECK(s.total() == 4);
    auto g = star_to_metric(s);
    CHECK(g.dist(1, 3) == 3);
    CHECK(g.dist(0, 2) == 1);
    CHECK_THROWS_AS(star_to_metric(StarMetric{{0, 0, 1}}), PreconditionViolated);
}
