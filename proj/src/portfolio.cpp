#include "inspath/portfolio.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "inspath/heuristics.hpp"

namespace inspath {

namespace {

using Clock = std::chrono::steady_clock;

// Best-so-far register shared by the workers. Ties resolved by route order
// so the winner does not depend on which worker finishes first.
class BestRegister {
public:
    void submit(const Route& route, double cost) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (route_.empty() || cost < cost_ || (cost == cost_ && route < route_)) {
            cost_ = cost;
            route_ = route;
        }
    }

    std::pair<Route, double> snapshot() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return {route_, cost_};
    }

private:
    mutable std::mutex mutex_;
    Route route_;
    double cost_ = 0.0;
};

}  // namespace

PortfolioResult portfolio_solve_detailed(const Instance& instance, const SolverConfig& config,
                                         GuidanceOracle& oracle) {
    config.validate();
    const auto start_time = Clock::now();
    const auto deadline = start_time + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(config.time_limit_seconds));
    const int n = instance.n();
    instance.costs.require_complete();

    const int workers = config.thread_count;
    BestRegister global_best;
    std::vector<double> worker_best(workers, 0.0);

    auto worker_main = [&](int w) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(w)));

        Route incumbent = config.initial_route && w == 0 ? *config.initial_route
                                                         : nearest_neighbor(instance, w % n);
        Route best = incumbent;
        double best_cost = evaluate_route(instance, best);

        // With a fixed round count the loop never consults the wall clock,
        // so the run is a pure function of (instance, config, seed, oracle);
        // otherwise rounds repeat until the deadline, each annealing ladder
        // capped by the time remaining.
        const bool fixed_rounds = config.portfolio_rounds > 0;
        SolverConfig round_config = config;
        const double t0 = config.initial_temp_factor * detail::mean_edge_cost(instance);
        const double t_end = std::max(t0 * config.min_temp_ratio, 1e-300);

        for (int round = 0; n >= 3; ++round) {  // n < 3 has a single open path
            if (fixed_rounds) {
                if (round >= config.portfolio_rounds) break;
            } else if (round > 0 && Clock::now() >= deadline) {
                break;
            }

            if (!fixed_rounds)
                round_config.time_limit_seconds = std::max(
                    1e-3, std::chrono::duration<double>(deadline - Clock::now()).count());
            Route candidate = detail::anneal_from(instance, incumbent, round_config, rng);
            candidate = local_search(instance, candidate, config);
            double candidate_cost = evaluate_route(instance, candidate);

            // Ties adopt the fresher candidate so a one-round, one-worker
            // portfolio reduces exactly to annealing + local search.
            if (candidate_cost <= best_cost) {
                best = candidate;
                best_cost = candidate_cost;
            }

            // Query the guidance oracle with the incumbent; adopt proposals
            // that improve, or diversify via Metropolis at the final ladder
            // temperature.
            incumbent = best;
            if (auto proposal = oracle.propose(instance, incumbent, rng)) {
                const double proposal_cost = evaluate_route(instance, *proposal);
                const double delta = proposal_cost - best_cost;
                if (delta <= 0.0 || rng.uniform01() < std::exp(-delta / t_end)) {
                    incumbent = std::move(*proposal);
                    if (proposal_cost < best_cost) {
                        best = incumbent;
                        best_cost = proposal_cost;
                    }
                }
            }
        }

        worker_best[w] = best_cost;
        global_best.submit(best, best_cost);
    };

    if (workers == 1) {
        worker_main(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_main, w);
        for (auto& t : pool) t.join();
    }

    auto [route, cost] = global_best.snapshot();
    PortfolioResult out;
    out.result.route = std::move(route);
    out.result.cost = cost;
    out.result.solver_id = "portfolio";
    out.result.seed = config.seed;
    out.result.optimal = false;
    out.result.runtime_seconds =
        std::chrono::duration<double>(Clock::now() - start_time).count();
    out.worker_best_costs = std::move(worker_best);
    return out;
}

SolveResult portfolio_solve(const Instance& instance, const SolverConfig& config,
                            GuidanceOracle& oracle) {
    return portfolio_solve_detailed(instance, config, oracle).result;
}

}  // namespace inspath
