#include "inspath/registry.hpp"

#include <algorithm>
#include <chrono>

#include "inspath/exact.hpp"
#include "inspath/heuristics.hpp"
#include "inspath/portfolio.hpp"

namespace inspath {

std::vector<std::string> solver_ids() {
    return {"brute_force",      "held_karp",        "branch_and_bound", "nearest_neighbor",
            "local_search",     "simulated_annealing", "portfolio"};
}

bool is_solver_id(const std::string& id) {
    const auto ids = solver_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SolveResult run_solver(const std::string& id, const Instance& instance,
                       const SolverConfig& config) {
    using Clock = std::chrono::steady_clock;

    if (id == "brute_force") {
        auto result = brute_force(instance);
        result.seed = config.seed;
        return result;
    }
    if (id == "held_karp") {
        auto result = held_karp(instance);
        result.seed = config.seed;
        return result;
    }
    if (id == "branch_and_bound") return branch_and_bound(instance, config).result;
    if (id == "nearest_neighbor" || id == "local_search") {
        const auto start_time = Clock::now();
        Route route = config.initial_route ? *config.initial_route : nearest_neighbor(instance, 0);
        if (id == "local_search") route = local_search(instance, route, config);
        SolveResult result;
        result.cost = evaluate_route(instance, route);
        result.route = std::move(route);
        result.solver_id = id;
        result.seed = config.seed;
        result.optimal = false;
        result.runtime_seconds = std::chrono::duration<double>(Clock::now() - start_time).count();
        return result;
    }
    if (id == "simulated_annealing") return simulated_annealing(instance, config);
    if (id == "portfolio") {
        RuinRecreateOracle oracle;
        return portfolio_solve(instance, config, oracle);
    }
    throw UsageError("unknown solver '" + id + "'");
}

}  // namespace inspath
