#pragma once

#include "inspath/solver.hpp"

namespace inspath {

// Greedy extension from `start`, always to the cheapest unvisited node,
// ties to the lowest index. Requires a complete matrix.
Route nearest_neighbor(const Instance& instance, int start);

// First-improvement passes alternating 2-opt segment reversal with Or-opt
// relocation of 1- and 2-node segments, until a full pass over the enabled
// move set finds no improving move. Never increases the cost.
//
// Open-path 2-opt: reversing order[i..j] changes only the boundary edges
// (one on each side; just one when the segment touches a path end), unlike
// the closed-tour formula.
Route local_search(const Instance& instance, const Route& route, const SolverConfig& config);

// Metropolis annealing over random 2-opt reversals and Or-opt relocations,
// geometrically cooled, starting from nearest_neighbor(0). Returns the best
// route ever visited.
SolveResult simulated_annealing(const Instance& instance, const SolverConfig& config);

namespace detail {

// Annealing core shared by simulated_annealing and the portfolio workers:
// one full temperature ladder from `initial`, drawing only from `rng`.
Route anneal_from(const Instance& instance, const Route& initial, const SolverConfig& config,
                  Rng& rng);

double mean_edge_cost(const Instance& instance);

}  // namespace detail

}  // namespace inspath
