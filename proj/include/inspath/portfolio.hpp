#pragma once

#include "inspath/solver.hpp"

namespace inspath {

struct PortfolioResult {
    SolveResult result;
    std::vector<double> worker_best_costs;  // indexed by worker
};

// Parallel hybrid threads: each worker runs an independent annealing +
// local-search loop on its own rng stream (derived from seed and worker
// index, so the outcome does not depend on scheduling), submitting its
// incumbent to the guidance oracle between rounds and adopting proposals
// that improve or pass a Metropolis test. The returned result is the best
// over all workers.
PortfolioResult portfolio_solve_detailed(const Instance& instance, const SolverConfig& config,
                                         GuidanceOracle& oracle);

SolveResult portfolio_solve(const Instance& instance, const SolverConfig& config,
                            GuidanceOracle& oracle);

}  // namespace inspath
