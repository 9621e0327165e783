#pragma once

#include "inspath/solver.hpp"

namespace inspath {

// Exhaustive open-path enumeration (each path counted once, reversals
// skipped). Optimum with lexicographic tie-breaking. n <= 10.
SolveResult brute_force(const Instance& instance);

// Dynamic program over (visited subset, last node) with free endpoints.
// Exact; n <= 24 (memory grows as 2^n * n).
SolveResult held_karp(const Instance& instance);

struct BranchAndBoundResult {
    SolveResult result;
    double lower_bound = 0.0;
};

// Depth-first search over partial open paths with an incident-edge bound.
// Exact when the search exhausts within the time limit; otherwise returns
// the incumbent with optimal=false and the proven global lower bound.
BranchAndBoundResult branch_and_bound(const Instance& instance, const SolverConfig& config);

}  // namespace inspath
