#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "inspath/exact.hpp"
#include "inspath/generate.hpp"
#include "inspath/heuristics.hpp"
#include "inspath/metric.hpp"
#include "inspath/portfolio.hpp"
#include "inspath/registry.hpp"
#include "support/oracles.hpp"

using namespace inspath;

namespace {

Instance completed_instance(SurfaceKind kind, int n, int knn, std::uint64_t seed) {
    return metric_completion(generate_instance(kind, n, knn, seed)).completed;
}

Instance two_nodes(double c01) {
    Instance instance;
    instance.name = "two";
    instance.points = {{0, 0, 0}, {1, 0, 0}};
    instance.costs = CostMatrix(2);
    instance.costs.set(0, 1, c01);
    return instance;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("brute force on trivial instances") {
    Instance one;
    one.name = "one";
    one.points = {{0, 0, 0}};
    one.costs = CostMatrix(1);
    const auto single = brute_force(one);
    CHECK(single.route == Route{0});
    CHECK(single.cost == 0.0);
    CHECK(single.optimal);

    const auto pair = brute_force(two_nodes(5.0));
    CHECK(pair.route == Route{0, 1});
    CHECK(pair.cost == 5.0);
}

TEST_CASE("brute force equals an independently written enumerator") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Instance instance = completed_instance(SurfaceKind::UniformCloud, 7, 3, seed);
        const auto result = brute_force(instance);
        const auto [oracle_cost, oracle_route] = testsupport::best_open_path_recursive(instance);
        CHECK(result.cost == oracle_cost);
        CHECK(result.route == oracle_route);
    }
}

TEST_CASE("brute force rejects large instances") {
    const Instance instance = completed_instance(SurfaceKind::Sphere, 11, 10, 0);
    CHECK_THROWS_AS(brute_force(instance), TooLargeError);
}

TEST_CASE("held-karp equals brute force on small instances") {
    const SurfaceKind kinds[] = {SurfaceKind::Sphere, SurfaceKind::Torus, SurfaceKind::BoxPanel,
                                 SurfaceKind::UniformCloud};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const Instance instance = completed_instance(kinds[seed % 4], n, 3, seed);
        const auto exact = brute_force(instance);
        const auto dp = held_karp(instance);
        CHECK(rel_diff(dp.cost, exact.cost) <= 1e-9);
        CHECK(evaluate_route(instance, dp.route) == doctest::Approx(dp.cost).epsilon(1e-12));
        CHECK(dp.optimal);
    }
}

TEST_CASE("held-karp three-node example") {
    Instance instance;
    instance.name = "tri";
    instance.points = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    instance.costs = CostMatrix(3);
    instance.costs.set(0, 1, 1.0);
    instance.costs.set(0, 2, 5.0);
    instance.costs.set(1, 2, 2.0);
    const auto result = held_karp(instance);
    CHECK(result.cost == 3.0);
    CHECK((result.route == Route{0, 1, 2} || result.route == Route{2, 1, 0}));

    CHECK(held_karp(two_nodes(7.5)).cost == 7.5);
}

TEST_CASE("held-karp enforces its size cap") {
    Instance instance;
    instance.costs = CostMatrix(25);
    instance.points.assign(25, Point3{});
    CHECK_THROWS_AS(held_karp(instance), TooLargeError);
}

TEST_CASE("branch and bound matches held-karp up to n = 15") {
    SolverConfig config;
    config.time_limit_seconds = 300.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (int n : {2, 5, 9, 12, 15}) {
            const Instance instance = completed_instance(
                seed % 2 ? SurfaceKind::Torus : SurfaceKind::UniformCloud, n, 3, seed);
            const auto dp = held_karp(instance);
            const auto bnb = branch_and_bound(instance, config);
            CHECK(bnb.result.optimal);
            CHECK(rel_diff(bnb.result.cost, dp.cost) <= 1e-9);
            CHECK(bnb.lower_bound <= bnb.result.cost + 1e-9 * std::max(1.0, bnb.result.cost));
            CHECK(evaluate_route(instance, bnb.result.route) ==
                  doctest::Approx(bnb.result.cost).epsilon(1e-12));
        }
    }
}

TEST_CASE("branch and bound accepts an optimal warm start") {
    const Instance instance = completed_instance(SurfaceKind::Sphere, 10, 3, 3);
    const auto exact = held_karp(instance);
    SolverConfig config;
    config.time_limit_seconds = 60.0;
    config.initial_route = exact.route;
    const auto bnb = branch_and_bound(instance, config);
    CHECK(bnb.result.optimal);
    CHECK(bnb.result.cost == doctest::Approx(exact.cost).epsilon(1e-12));
    CHECK(bnb.result.route == exact.route);
}

TEST_CASE("branch and bound under a tiny deadline still reports a sound bound") {
    const Instance instance = completed_instance(SurfaceKind::UniformCloud, 18, 4, 9);
    SolverConfig config;
    config.time_limit_seconds = 0.02;
    const auto bnb = branch_and_bound(instance, config);
    CHECK(bnb.lower_bound <= bnb.result.cost + 1e-9);
    CHECK(evaluate_route(instance, bnb.result.route) ==
          doctest::Approx(bnb.result.cost).epsilon(1e-9));
}

TEST_CASE("nearest neighbor walks greedily") {
    Instance chain;
    chain.name = "chain";
    chain.points = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    chain.costs = CostMatrix(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            chain.costs.set(i, j, std::abs(chain.points[i].x - chain.points[j].x));
    CHECK(nearest_neighbor(chain, 0) == Route{0, 1, 2});

    CHECK(nearest_neighbor(two_nodes(3.0), 1) == Route{1, 0});
    CHECK_THROWS_AS(nearest_neighbor(chain, 5), BadStartError);

    const Instance instance = completed_instance(SurfaceKind::BoxPanel, 10, 3, 2);
    for (int start = 0; start < 10; ++start)
        CHECK(nearest_neighbor(instance, start) == testsupport::greedy_walk(instance, start));
}

TEST_CASE("local search leaves optima untouched") {
    SolverConfig config;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const int n = 4 + static_cast<int>(seed);
        const Instance instance = completed_instance(SurfaceKind::UniformCloud, n, 3, seed + 20);
        const auto exact = brute_force(instance);
        const Route polished = local_search(instance, exact.route, config);
        CHECK(evaluate_route(instance, polished) ==
              doctest::Approx(exact.cost).epsilon(1e-12));
    }
}

TEST_CASE("local search solves the unit-square swap") {
    Instance square;
    square.name = "square";
    square.points = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    square.costs = CostMatrix(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            square.costs.set(i, j, distance(square.points[i], square.points[j]));

    const Route crossed{0, 2, 1, 3};
    CHECK(evaluate_route(square, crossed) == doctest::Approx(1.0 + 2.0 * std::sqrt(2.0)));

    SolverConfig config;
    const Route fixed = local_search(square, crossed, config);
    CHECK(evaluate_route(square, fixed) == doctest::Approx(3.0).epsilon(1e-12));

    const Route pair = local_search(two_nodes(2.0), {0, 1}, config);
    CHECK(pair == Route{0, 1});
}

TEST_CASE("local search is monotone and 2-opt-optimal at termination") {
    SolverConfig config;
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Instance instance =
            completed_instance(SurfaceKind::Torus, 9 + trial % 4, 3, 40 + trial);
        Route route(instance.n());
        for (int i = 0; i < instance.n(); ++i) route[i] = i;
        rng.shuffle(route);

        const double before = evaluate_route(instance, route);
        const Route after = local_search(instance, route, config);
        const double after_cost = evaluate_route(instance, after);
        CHECK(after_cost <= before + 1e-9);
        CHECK_FALSE(testsupport::improving_two_opt_move(instance, after, 1e-9).has_value());
    }
}

TEST_CASE("simulated annealing basics") {
    SolverConfig config;
    config.seed = 5;
    const auto pair = simulated_annealing(two_nodes(4.0), config);
    CHECK(pair.cost == 4.0);

    const Instance instance = completed_instance(SurfaceKind::Sphere, 12, 3, 13);
    const auto a = simulated_annealing(instance, config);
    const auto b = simulated_annealing(instance, config);
    CHECK(a.route == b.route);
    CHECK(a.cost == b.cost);
    CHECK(evaluate_route(instance, a.route) == doctest::Approx(a.cost).epsilon(1e-12));
}

TEST_CASE("simulated annealing reaches small-instance optima") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Instance instance = completed_instance(SurfaceKind::UniformCloud, 9, 3, 60 + seed);
        const double optimum = brute_force(instance).cost;
        SolverConfig config;
        config.seed = seed;
        config.time_limit_seconds = 5.0;
        const auto result = simulated_annealing(instance, config);
        CHECK(result.cost >= optimum - 1e-9 * std::max(1.0, optimum));
        if (rel_diff(result.cost, optimum) <= 1e-9) ++hits;
    }
    CHECK(hits >= 18);
}

TEST_CASE("degenerate portfolio equals annealing plus local search") {
    const Instance instance = completed_instance(SurfaceKind::Torus, 11, 3, 17);

    SolverConfig portfolio_config;
    portfolio_config.seed = 9;
    portfolio_config.thread_count = 1;
    portfolio_config.portfolio_rounds = 1;
    NullOracle null_oracle;
    const auto portfolio = portfolio_solve(instance, portfolio_config, null_oracle);

    SolverConfig sa_config = portfolio_config;
    sa_config.seed = derive_seed(9, 0);
    const auto annealed = simulated_annealing(instance, sa_config);
    const Route polished = local_search(instance, annealed.route, sa_config);

    CHECK(portfolio.route == polished);
    CHECK(portfolio.cost == doctest::Approx(evaluate_route(instance, polished)).epsilon(1e-12));
}

TEST_CASE("portfolio reports the minimum over its workers") {
    const Instance instance = completed_instance(SurfaceKind::UniformCloud, 13, 3, 23);
    SolverConfig config;
    config.seed = 3;
    config.thread_count = 4;
    config.portfolio_rounds = 2;
    RuinRecreateOracle oracle;
    const auto detailed = portfolio_solve_detailed(instance, config, oracle);
    REQUIRE(detailed.worker_best_costs.size() == 4);
    const double min_worker =
        *std::min_element(detailed.worker_best_costs.begin(), detailed.worker_best_costs.end());
    CHECK(detailed.result.cost == min_worker);

    const auto rerun = portfolio_solve_detailed(instance, config, oracle);
    CHECK(rerun.result.route == detailed.result.route);
    CHECK(rerun.result.cost == detailed.result.cost);
    CHECK(rerun.worker_best_costs == detailed.worker_best_costs);
}

TEST_CASE("portfolio reaches small-instance optima") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 7 + static_cast<int>(seed % 3);
        const Instance instance = completed_instance(SurfaceKind::Sphere, n, 3, 80 + seed);
        const double optimum = brute_force(instance).cost;
        SolverConfig config;
        config.seed = seed;
        config.thread_count = 4;
        config.portfolio_rounds = 3;
        config.time_limit_seconds = 5.0;
        RuinRecreateOracle oracle;
        const auto result = portfolio_solve(instance, config, oracle);
        CHECK(result.cost >= optimum - 1e-9 * std::max(1.0, optimum));
        if (rel_diff(result.cost, optimum) <= 1e-9) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("ruin-and-recreate proposals are valid and seed-determined") {
    const Instance instance = completed_instance(SurfaceKind::UniformCloud, 14, 3, 44);
    const Route incumbent = nearest_neighbor(instance, 0);
    RuinRecreateOracle oracle;

    Rng rng_a(77), rng_b(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle.propose(instance, incumbent, rng_a);
        const auto b = oracle.propose(instance, incumbent, rng_b);
        REQUIRE(a.has_value());
        CHECK(*a == *b);
        CHECK_FALSE(validate_route(instance, *a, false).has_value());
    }

    // Too small to ruin: no proposal, rng untouched.
    const Instance tiny = completed_instance(SurfaceKind::Sphere, 2, 1, 1);
    Rng rng_c(5);
    CHECK_FALSE(oracle.propose(tiny, {0, 1}, rng_c).has_value());
    CHECK(rng_c.next_u64() == Rng(5).next_u64());
}

TEST_CASE("every registered solver emits a valid expandable route") {
    const Instance original = generate_instance(SurfaceKind::UniformCloud, 9, 2, 33);
    const auto completion = metric_completion(original);
    SolverConfig config;
    config.seed = 1;
    config.time_limit_seconds = 2.0;
    config.portfolio_rounds = 1;
    config.thread_count = 2;

    for (const auto& id : solver_ids()) {
        INFO(id);
        const auto result = run_solver(id, completion.completed, config);
        CHECK_FALSE(validate_route(completion.completed, result.route, false).has_value());
        CHECK(evaluate_route(completion.completed, result.route) ==
              doctest::Approx(result.cost).epsilon(1e-9));
        const auto expanded = expand_route(result.route, completion.via, original);
        for (std::size_t w = 0; w + 1 < expanded.waypoints.size(); ++w)
            CHECK(original.costs.has(expanded.waypoints[w], expanded.waypoints[w + 1]));
    }
}

TEST_CASE("exactness chain holds on a sparse completed instance") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Instance instance = completed_instance(SurfaceKind::BoxPanel, 9, 2, 100 + seed);
        SolverConfig config;
        config.time_limit_seconds = 60.0;
        const double bf = brute_force(instance).cost;
        CHECK(rel_diff(held_karp(instance).cost, bf) <= 1e-9);
        CHECK(rel_diff(branch_and_bound(instance, config).result.cost, bf) <= 1e-9);
    }
}
